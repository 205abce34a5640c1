"""Exact, snap-free boolean operations on polygonal regions.

The implementation builds the overlay arrangement of both boundaries:

  1. split every boundary segment at every intersection with every other
     boundary segment (crossing points and collinear-overlap endpoints),
  2. deduplicate identical subsegments,
  3. classify both sides of each subsegment against both operands by exact
     one-sided sampling (first-gap midpoints along the perpendicular ray, so
     the sample never lands on a boundary),
  4. keep edges whose sides disagree under the requested operation, oriented
     with the result interior on the left,
  5. link darts into rings (sharpest-left-turn rule) and nest rings into
     components by exact containment depth.

The canonical result drops nothing but exact-zero-area slivers; components
that touch only along boundaries stay separate components.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from artgallery.rational import rat
from artgallery.geom.primitives import Point2, cross, segments_intersect
from artgallery.geom.polygon import (
    PolygonWithHoles,
    Region,
    SimplePolygon,
    as_region,
    locate_in_ring,
    point_in_region,
    ring_edges,
    ring_signed_area,
)

_OPS = ("union", "intersect", "difference")


def _combine(op: str, in1: bool, in2: bool) -> bool:
    if op == "union":
        return in1 or in2
    if op == "intersect":
        return in1 and in2
    return in1 and not in2


def _boundary_edges(region: Region):
    for ring in region.rings():
        yield from ring_edges(ring)


def _split_all(edges: List[Tuple[Point2, Point2]]):
    """Split segments at all pairwise intersections; return deduped subsegments."""
    cuts: List[List[Point2]] = [[] for _ in edges]
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            hit = segments_intersect(a, b, c, d)
            if hit is None:
                continue
            pts = hit[1:] if hit[0] == "overlap" else (hit[1],)
            for p in pts:
                cuts[i].append(p)
                cuts[j].append(p)
    out = {}
    for (a, b), extra in zip(edges, cuts):
        dx, dy = b[0] - a[0], b[1] - a[1]
        if dx == 0 and dy == 0:
            continue

        def param(p):
            return (p[0] - a[0]) * dx + (p[1] - a[1]) * dy

        pts = sorted({a, b, *extra}, key=param)
        for u, v in zip(pts, pts[1:]):
            key = (u, v) if (u[0], u[1]) <= (v[0], v[1]) else (v, u)
            out[key] = True
    return list(out.keys())


def _ray_first_hit(origin, direction, edges):
    """Smallest positive ray parameter touching any edge, or None."""
    ox, oy = origin
    dx, dy = direction
    best = None
    for a, b in edges:
        ex, ey = b[0] - a[0], b[1] - a[1]
        denom = dx * ey - dy * ex
        wx, wy = a[0] - ox, a[1] - oy
        if denom != 0:
            t = (wx * ey - wy * ex) / denom
            s = (wx * dy - wy * dx) / denom
            # origin + t*dir == a + s*(b-a); s in [0,1] on the edge
            if 0 <= s <= 1 and t > 0 and (best is None or t < best):
                best = t
        else:
            if wx * dy - wy * dx != 0:
                continue  # parallel, not collinear
            dd = dx * dx + dy * dy
            for p in (a, b):
                t = ((p[0] - ox) * dx + (p[1] - oy) * dy) / dd
                if t > 0 and (best is None or t < best):
                    best = t
    return best


def _trace_rings(darts):
    """Link interior-on-left darts into closed rings (sharpest left turn)."""
    outgoing: Dict[Point2, List[Tuple[Point2, Point2]]] = {}
    for d in darts:
        outgoing.setdefault(d[0], []).append(d)

    # Exact comparator for CCW angle measured from a reference direction:
    # sector 0 = aligned with ref, 1 = (0, pi), 2 = exactly pi, 3 = (pi, 2pi).
    def ccw_pos_cmp(ref, u, v):
        def sector(w):
            c = ref[0] * w[1] - ref[1] * w[0]
            d = ref[0] * w[0] + ref[1] * w[1]
            if c == 0:
                return 0 if d > 0 else 2
            return 1 if c > 0 else 3

        su, sv = sector(u), sector(v)
        if su != sv:
            return -1 if su < sv else 1
        c = u[0] * v[1] - u[1] * v[0]
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    unused = set(darts)
    rings = []
    while unused:
        start = next(iter(unused))
        ring = []
        cur = start
        while True:
            unused.discard(cur)
            ring.append(cur[0])
            v = cur[1]
            rev = (cur[0][0] - v[0], cur[0][1] - v[1])
            cands = outgoing.get(v, ())
            best = None
            for w in cands:
                wd = (w[1][0] - v[0], w[1][1] - v[1])
                if best is None or ccw_pos_cmp(rev, wd, best[1]) > 0:
                    best = (w, wd)
            if best is None:
                raise RuntimeError("boundary tracing failed: open ring")
            cur = best[0]
            if cur == start:
                break
            if cur not in unused:
                raise RuntimeError("boundary tracing failed: dart reused")
        rings.append(ring)
    return rings


def _merge_collinear(ring):
    out = list(ring)
    changed = True
    while changed and len(out) > 2:
        changed = False
        n = len(out)
        for i in range(n):
            a, b, c = out[(i - 1) % n], out[i], out[(i + 1) % n]
            if cross(a, b, c) == 0:
                del out[i]
                changed = True
                break
    return out


def _ring_rep_point(ring, all_rings):
    """Interior representative of a ring, off every ring's boundary (exact)."""
    ys = sorted({v[1] for r in all_rings for v in r})
    own_ys = {v[1] for v in ring}
    ymin, ymax = min(own_ys), max(own_ys)
    for k in range(len(ys) - 1):
        if ys[k + 1] <= ymin or ys[k] >= ymax:
            continue
        ystar = (ys[k] + ys[k + 1]) / 2
        own = []
        for a, b in ring_edges(ring):
            if (a[1] > ystar) != (b[1] > ystar):
                own.append(a[0] + (ystar - a[1]) * (b[0] - a[0]) / (b[1] - a[1]))
        if len(own) < 2:
            continue
        own.sort()
        lo, hi = own[0], own[1]
        mids = [lo, hi]
        for r in all_rings:
            for a, b in ring_edges(r):
                if (a[1] > ystar) != (b[1] > ystar):
                    x = a[0] + (ystar - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
                    if lo < x < hi:
                        mids.append(x)
        mids.sort()
        return Point2((mids[0] + mids[1]) / 2, ystar)
    raise RuntimeError("no representative point for ring")


def region_boolean(op: str, r1, r2) -> Region:
    """Exact boolean of two regions: "union", "intersect" or "difference".

    Output is canonical: outer rings CCW, holes CW, collinear runs merged,
    exact-zero-area slivers dropped, boundary-touching components separate.
    """
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    r1, r2 = as_region(r1), as_region(r2)
    if r1.is_empty() and r2.is_empty():
        return Region.empty()
    if r1.is_empty():
        return _canonical(r2) if op == "union" else Region.empty()
    if r2.is_empty():
        return Region.empty() if op == "intersect" else _canonical(r1)

    edges = list(_boundary_edges(r1)) + list(_boundary_edges(r2))
    sub = _split_all(edges)

    darts = []
    for a, b in sub:
        mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
        m = Point2(mx, my)
        left = (-(b[1] - a[1]), b[0] - a[0])
        sides = {}
        for name, d in (("L", left), ("R", (-left[0], -left[1]))):
            t1 = _ray_first_hit(m, d, sub)
            t = (t1 / 2) if t1 is not None else rat(1)
            q = Point2(mx + t * d[0], my + t * d[1])
            sides[name] = _combine(op, point_in_region(q, r1), point_in_region(q, r2))
        if sides["L"] and not sides["R"]:
            darts.append((a, b))
        elif sides["R"] and not sides["L"]:
            darts.append((b, a))

    if not darts:
        return Region.empty()

    rings = [_merge_collinear(r) for r in _trace_rings(darts)]
    rings = [r for r in rings if len(r) >= 3 and ring_signed_area(r) != 0]
    if not rings:
        return Region.empty()

    reps = [_ring_rep_point(r, rings) for r in rings]
    n = len(rings)
    contains = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                contains[i][j] = locate_in_ring(reps[j], rings[i]) == "in"
    depth = [sum(1 for i in range(n) if contains[i][j]) for j in range(n)]

    comps = []
    for j in range(n):
        if depth[j] % 2 == 0:
            if ring_signed_area(rings[j]) < 0:
                raise RuntimeError("outer ring traced clockwise")
            holes = []
            for h in range(n):
                if depth[h] == depth[j] + 1 and contains[j][h]:
                    # immediate parent check: no deeper ring between them
                    if all(
                        not (contains[k][h] and contains[j][k])
                        for k in range(n)
                        if k not in (j, h)
                    ):
                        holes.append(SimplePolygon(tuple(rings[h])))
            comps.append(PolygonWithHoles(SimplePolygon(tuple(rings[j])), tuple(holes)))
    comps.sort(key=lambda c: tuple(c.outer.vertices[0]))
    return Region(tuple(comps))


def _canonical(region: Region) -> Region:
    comps = []
    for c in region.components:
        outer = SimplePolygon(tuple(_merge_collinear(list(c.outer.vertices))))
        holes = tuple(
            SimplePolygon(tuple(_merge_collinear(list(h.vertices)))) for h in c.holes
        )
        if outer.area() == 0:
            continue
        comps.append(PolygonWithHoles(outer, tuple(h for h in holes if h.area() != 0)))
    comps.sort(key=lambda c: tuple(c.outer.vertices[0]))
    return Region(tuple(comps))


def region_equal(r1, r2) -> bool:
    """Exact equality as point sets up to zero-area slivers."""
    r1, r2 = as_region(r1), as_region(r2)
    if r1.is_empty() and r2.is_empty():
        return True
    u = region_boolean("union", r1, r2)
    i = region_boolean("intersect", r1, r2)
    return u.area() == i.area()
