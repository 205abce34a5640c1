"""Executable theorem checkers.

"For every n points in K" ranges over a continuum, which no checker can
enumerate. Every check here therefore runs over a finite candidate set and
says so in its report: hypothesis verdicts are always "on candidates". What
IS exact: every common-visibility emptiness test, every kernel computation on
hole-free polygons, and every certified witness. Numeric searches (inscribed
discs and ellipses, box scans) can fail to find a witness without proving
absence; those outcomes surface as "undetermined" with a qualifier, never as
a silent "fails".
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

from artgallery.rational import Q, rat, rationalize
from artgallery.gallery import Gallery, PinchedGallery, SkeletalGallery, as_polygon
from artgallery.geom.primitives import Point2, cross, on_segment, pt
from artgallery.geom.polygon import (
    PolygonWithHoles,
    Region,
    area,
    locate_in_polygon,
    region_bbox,
)
from artgallery.geom.convex import ConvexPolygon, HalfPlane
from artgallery.geom.boolean import region_boolean
from artgallery.kernel import kernel_halfplanes, kernel_simple
from artgallery.visibility import (
    common_visibility,
    pinched_common_visibility,
    skeletal_common_visibility,
    visibility_polygon,
)
from artgallery import inscribe


# ---------------------------------------------------------------------------
# Candidate sets


@dataclass(frozen=True)
class CandidateSet:
    """Finite stand-in for "every point of K"; every point carries a
    provenance tag and has passed the gallery membership test."""

    points: Tuple[Point2, ...]
    tags: Tuple[str, ...]

    def __post_init__(self):
        if len(self.points) != len(self.tags):
            raise ValueError("points and tags must align")

    def __len__(self) -> int:
        return len(self.points)

    @staticmethod
    def from_points(gallery, points, tag: str = "user") -> "CandidateSet":
        pts = tuple(pt(p) for p in points)
        for p in pts:
            if not gallery_contains(gallery, p):
                raise ValueError(f"candidate {p} is not in the gallery")
        return CandidateSet(pts, (tag,) * len(pts))

    @staticmethod
    def default(gallery, seed: int = 0, random_count: int = 20, user_points=()) -> "CandidateSet":
        """Vertices + edge midpoints + spike tips + seeded random points."""
        pts: List[Point2] = []
        tags: List[str] = []

        def add(p, tag):
            if p not in pts:
                pts.append(p)
                tags.append(tag)

        for p, tag in _structural_candidates(gallery):
            add(p, tag)
        try:
            for p in gallery.class_points("tips"):
                add(pt(p), "spike-tip")
        except (KeyError, AttributeError):
            pass
        rng = random.Random(f"candidates:{seed}")
        for p in _random_candidates(gallery, rng, random_count):
            add(p, f"random({seed})")
        for p in user_points:
            q = pt(p)
            if not gallery_contains(gallery, q):
                raise ValueError(f"candidate {q} is not in the gallery")
            add(q, "user")
        return CandidateSet(tuple(pts), tuple(tags))


def gallery_contains(gallery, p: Point2) -> bool:
    if isinstance(gallery, SkeletalGallery):
        return any(on_segment(p, s.a, s.b) for s in gallery.segments)
    if isinstance(gallery, PinchedGallery):
        return gallery.contains(p)
    return locate_in_polygon(p, as_polygon(gallery)) != "out"


def _structural_candidates(gallery):
    if isinstance(gallery, SkeletalGallery):
        for s in gallery.segments:
            yield s.a, "vertex"
            yield s.b, "vertex"
        for s in gallery.segments:
            yield Point2((s.a[0] + s.b[0]) / 2, (s.a[1] + s.b[1]) / 2), "edge-midpoint"
        return
    if isinstance(gallery, PinchedGallery):
        for comp in gallery.components:
            for v in comp.vertices:
                yield v, "vertex"
        for comp in gallery.components:
            for a, b in comp.edges():
                yield Point2((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), "edge-midpoint"
        return
    poly = as_polygon(gallery)
    for ring in (poly.outer.vertices,) + tuple(h.vertices for h in poly.holes):
        for v in ring:
            yield v, "vertex"
        n = len(ring)
        for i in range(n):
            a, b = ring[i], ring[(i + 1) % n]
            yield Point2((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), "edge-midpoint"


def _random_candidates(gallery, rng: random.Random, count: int):
    out: List[Point2] = []
    if count <= 0:
        return out
    if isinstance(gallery, SkeletalGallery):
        segs = gallery.segments
        while len(out) < count:
            s = segs[rng.randrange(len(segs))]
            t = Q(rng.randrange(1, 2**20), 2**20)
            out.append(Point2(s.a[0] + t * (s.b[0] - s.a[0]), s.a[1] + t * (s.b[1] - s.a[1])))
        return out
    if isinstance(gallery, PinchedGallery):
        comps = gallery.components
        budget = 200 * count
        while len(out) < count and budget > 0:
            budget -= 1
            comp = comps[rng.randrange(len(comps))]
            xs = [v[0] for v in comp.vertices]
            ys = [v[1] for v in comp.vertices]
            p = _random_bbox_point(rng, min(xs), min(ys), max(xs), max(ys))
            if comp.contains(p):
                out.append(p)
        return out
    poly = as_polygon(gallery)
    (x0, y0), (x1, y1) = region_bbox(Region((poly,)))
    budget = 500 * count
    while len(out) < count and budget > 0:
        budget -= 1
        p = _random_bbox_point(rng, x0, y0, x1, y1)
        if locate_in_polygon(p, poly) == "in":
            out.append(p)
    return out


def _random_bbox_point(rng: random.Random, x0, y0, x1, y1) -> Point2:
    tx = Q(rng.randrange(0, 2**20), 2**20)
    ty = Q(rng.randrange(0, 2**20), 2**20)
    return Point2(x0 + tx * (x1 - x0), y0 + ty * (y1 - y0))


# ---------------------------------------------------------------------------
# Config and report


DEFAULT_K = {
    "classic": 3,
    "colorful-plane": 3,
    "box-volume": 4,
    "box-sum": 4,
    "disc": 3,
    "ellipse": 5,
    "vwidth-segment": 4,
    "norm-segment": None,  # 2 * facet count of the norm ball
    "region-area": 4,
}

QUANT_FAMILIES = (
    "box-volume",
    "box-sum",
    "disc",
    "ellipse",
    "vwidth-segment",
    "norm-segment",
    "region-area",
)


@dataclass(frozen=True)
class CheckConfig:
    theorem: str = "classic"
    k: Optional[int] = None
    family: Optional[str] = None
    threshold: object = None
    direction: Tuple[object, object] = (1, 0)  # for vwidth-segment
    norm_ball: object = None  # PolytopeNormBall for norm-segment
    tolerance: float = 1e-9
    cap: int = 10**6
    seed: int = 0
    random_candidates: int = 20
    grid_resolution: int = 24

    def tuple_size(self) -> int:
        if self.k is not None:
            return self.k
        fam = self.family or self.theorem
        k = DEFAULT_K.get(fam)
        if k is None and fam == "norm-segment":
            if self.norm_ball is None:
                raise ValueError("norm-segment needs a norm_ball")
            return 2 * len(self.norm_ball.polygon.vertices)
        if k is None:
            raise ValueError(f"no default tuple size for {fam!r}")
        return k


@dataclass(frozen=True)
class Coverage:
    checked: int
    total: int
    truncated: bool = False
    fast_path: Optional[str] = None

    def fraction(self) -> float:
        return 1.0 if self.total == 0 else self.checked / self.total


CLASSIFICATIONS = (
    "CONSISTENT",
    "VACUOUS",
    "THEOREM_VIOLATION_CANDIDATE",
    "CONSISTENT_WITH_CLAIM",
    "UNDETERMINED",
)


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    gallery: str
    hypothesis_verdict: str  # holds-on-candidates | violated | undetermined
    conclusion_verdict: str  # holds | fails | undetermined
    classification: str
    violating_tuples: Tuple[Tuple[Point2, ...], ...] = ()
    witnesses: Tuple[Tuple[str, object], ...] = ()
    coverage: Coverage = Coverage(0, 0)
    preconditions: Tuple[Tuple[str, bool], ...] = ()
    qualifiers: Tuple[str, ...] = ()
    config: Optional[CheckConfig] = None
    reproduction: Tuple[Tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.classification not in CLASSIFICATIONS:
            raise ValueError(f"unknown classification {self.classification!r}")
        if self.classification == "THEOREM_VIOLATION_CANDIDATE":
            if self.hypothesis_verdict != "holds-on-candidates":
                raise ValueError("violation candidate requires hypothesis to hold")
            if self.conclusion_verdict != "fails":
                raise ValueError("violation candidate requires conclusion failure")


def _classify(hyp: str, concl: str, preconditions_met: bool, certified_failure: bool) -> str:
    if hyp == "violated":
        return "VACUOUS"
    if hyp == "undetermined":
        return "CONSISTENT" if concl == "holds" else "UNDETERMINED"
    if concl == "holds":
        return "CONSISTENT"
    if concl == "undetermined":
        return "UNDETERMINED"
    if not preconditions_met:
        return "CONSISTENT_WITH_CLAIM"
    if not certified_failure:
        return "UNDETERMINED"
    return "THEOREM_VIOLATION_CANDIDATE"


# ---------------------------------------------------------------------------
# Common visibility / kernel dispatch over the three gallery kinds


def _common_region(gallery, points, cache=None):
    """Common visibility as (kind, payload); emptiness is exact for all kinds.

    `cache` maps viewpoints to their visibility regions so enumeration over
    many tuples computes each visibility polygon once.
    """
    if isinstance(gallery, SkeletalGallery):
        lone, segs = skeletal_common_visibility(gallery, points)
        return "skeletal", (lone, segs)
    if isinstance(gallery, PinchedGallery):
        return "pinched", pinched_common_visibility(gallery, points)
    if cache is None:
        return "region", common_visibility(gallery, points)
    acc = None
    for p in points:
        vis = cache.get(p)
        if vis is None:
            vis = visibility_polygon(gallery, p).region
            cache[p] = vis
        acc = vis if acc is None else region_boolean("intersect", acc, vis)
        if acc.is_empty():
            break
    return "region", acc


def _common_is_empty(kind: str, payload) -> bool:
    if kind == "skeletal":
        lone, segs = payload
        return not lone and not segs
    if kind == "pinched":
        return payload.is_empty()
    return payload.is_empty()


def kernel_status(gallery):
    """(verdict, witness, certified, qualifier) for "the kernel is nonempty".

    All cases are decided exactly. A full-dimensional hole forces an empty
    kernel: from any viewpoint the ray through a hole-interior point exits
    the hole at a gallery point whose sight line is blocked by the hole.
    """
    if isinstance(gallery, PinchedGallery):
        if len(gallery.components) == 1:
            # single convex piece: every point sees everything
            return "holds", gallery.components[0], True, None
        # segments into a foreign component pass through one of its pinch
        # points, so an outside viewer covers only finitely many rays of it;
        # hence x sees a whole convex piece iff x belongs to it, and the
        # kernel is the intersection of all components
        for p in gallery.pinch_points():
            if all(c.contains(p) for c in gallery.components):
                return "holds", p, True, "kernel-single-point"
        return "fails", None, True, None
    poly = as_polygon(gallery)
    if poly.holes:
        return "fails", None, True, "hole-shadow"
    kern = kernel_simple(poly)
    if kern.is_empty():
        return "fails", None, True, None
    return "holds", kern, True, None


def halfplane_triple_empty(h1: HalfPlane, h2: HalfPlane, h3: HalfPlane) -> bool:
    """Exact emptiness of the intersection of three half-planes.

    Nonempty intersections with no parallel pair always expose a feasible
    pairwise line crossing (a pointed 2D polyhedron has a vertex), so testing
    the crossings plus antiparallel slabs decides emptiness.
    """
    hs = (h1, h2, h3)
    crossings = []
    for i in range(3):
        for j in range(i + 1, 3):
            p, q = hs[i], hs[j]
            det = p.a * q.b - p.b * q.a
            if det == 0:
                if p.a * q.a + p.b * q.b < 0:
                    t = (-q.a / p.a) if p.a != 0 else (-q.b / p.b)
                    if t * p.c + q.c < 0:
                        return True  # antiparallel with a gap
                continue
            x = (p.c * q.b - p.b * q.c) / det
            y = (p.a * q.c - p.c * q.a) / det
            crossings.append(Point2(x, y))
    for v in crossings:
        if all(h.contains(v) for h in hs):
            return False
    return bool(crossings)


def _helly_violating_edges(poly: PolygonWithHoles) -> Optional[Tuple[int, int, int]]:
    """Indices of three edges whose inner half-planes have empty intersection.

    Exists whenever the kernel of a hole-free polygon is empty (Helly in the
    plane, finite family).
    """
    hps = kernel_halfplanes(poly)
    n = len(hps)
    for combo in itertools.combinations(range(n), 3):
        if halfplane_triple_empty(*(hps[i] for i in combo)):
            return combo
    return None


def _edge_midpoint(poly: PolygonWithHoles, i: int) -> Point2:
    vs = poly.outer.vertices
    a, b = vs[i], vs[(i + 1) % len(vs)]
    return Point2((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


# ---------------------------------------------------------------------------
# Classic checker (Thm: local (d+1)-visibility implies a global guard)


def check_classic(gallery, candidates: Optional[CandidateSet] = None,
                  cfg: Optional[CheckConfig] = None) -> TheoremReport:
    cfg = cfg or CheckConfig(theorem="classic")
    k = cfg.tuple_size()
    name = getattr(gallery, "name", "") or type(gallery).__name__
    if isinstance(gallery, SkeletalGallery):
        raise TypeError("classic checker needs an areal gallery")
    if candidates is None:
        candidates = CandidateSet.default(
            gallery, seed=cfg.seed, random_count=cfg.random_candidates
        )

    concl, witness, certified, kq = kernel_status(gallery)
    qualifiers = (kq,) if kq else ()
    witnesses = (("kernel", witness),) if witness is not None else ()

    hole_free = not isinstance(gallery, PinchedGallery) and not as_polygon(gallery).holes

    if concl == "holds" and certified:
        # every candidate tuple's common visibility contains the kernel
        cov = Coverage(0, _ncomb(len(candidates), k), fast_path="kernel-superset")
        return TheoremReport(
            "classic", name, "holds-on-candidates", "holds", "CONSISTENT",
            witnesses=witnesses, coverage=cov, qualifiers=qualifiers, config=cfg,
        )

    if hole_free:
        # empty kernel: Helly yields three edge half-planes with empty
        # intersection; visibility from an edge midpoint stays in the edge's
        # inner half-plane, so the three midpoints cannot see a common point
        poly = as_polygon(gallery)
        combo = _helly_violating_edges(poly)
        if combo is not None:
            triple = tuple(_edge_midpoint(poly, i) for i in combo)
            kind, payload = _common_region(gallery, triple)
            if not _common_is_empty(kind, payload):
                raise AssertionError("Helly certificate contradicts exact common visibility")
            cov = Coverage(1, _ncomb(len(candidates), k), fast_path="helly-edge-triple")
            return TheoremReport(
                "classic", name, "violated", "fails", "VACUOUS",
                violating_tuples=(triple,), coverage=cov, qualifiers=qualifiers, config=cfg,
            )

    # general path: enumerate candidate tuples up to the cap
    cache: dict = {}
    hyp, violating, cov = _enumerate_tuples(
        gallery, candidates.points, k, cfg.cap,
        lambda tup: not _common_is_empty(*_common_region(gallery, tup, cache)),
    )
    classification = _classify(hyp, concl, True, certified)
    return TheoremReport(
        "classic", name, hyp, concl, classification,
        violating_tuples=violating, witnesses=witnesses, coverage=cov,
        qualifiers=qualifiers, config=cfg,
    )


def _ncomb(n: int, k: int) -> int:
    return math.comb(n, k) if n >= k else 0


def _enumerate_tuples(gallery, points, k, cap, tuple_ok):
    total = _ncomb(len(points), k)
    checked = 0
    violating: List[Tuple[Point2, ...]] = []
    for tup in itertools.combinations(points, k):
        if checked >= cap:
            return (
                "violated" if violating else "undetermined",
                tuple(violating),
                Coverage(checked, total, truncated=True),
            )
        checked += 1
        if not tuple_ok(tup):
            violating.append(tup)
            if len(violating) >= 3:
                break
    hyp = "violated" if violating else "holds-on-candidates"
    return hyp, tuple(violating), Coverage(checked, total)


# ---------------------------------------------------------------------------
# Colorful checkers


class NotSimplyConnected(ValueError):
    pass


def _is_simply_connected(gallery) -> bool:
    if isinstance(gallery, SkeletalGallery):
        return False  # segment unions contain cycles in general; treated as the
        # paper's non-simply-connected counterexample setting
    if isinstance(gallery, PinchedGallery):
        return True
    return not as_polygon(gallery).holes


def check_colorful_plane(gallery, p1, p2, p3, cfg: Optional[CheckConfig] = None) -> TheoremReport:
    """Planar colorful theorem: three classes, simply connected K.

    Passing the same class twice collapses to the two-class negative control
    (the optimality side of the theorem); the report then records the unmet
    three-class precondition and classifies the expected failure as
    CONSISTENT_WITH_CLAIM rather than as a violation.
    """
    cfg = cfg or CheckConfig(theorem="colorful-plane")
    name = getattr(gallery, "name", "") or type(gallery).__name__
    if not isinstance(gallery, (PinchedGallery, SkeletalGallery)):
        if as_polygon(gallery).holes:
            raise NotSimplyConnected("colorful-plane requires a simply connected gallery")

    classes = []
    for cls in (p1, p2, p3):
        norm = tuple(pt(p) for p in cls)
        if not norm:
            raise ValueError("empty color class")
        if norm not in classes:
            classes.append(norm)
    for cls in classes:
        for p in cls:
            if not gallery_contains(gallery, p):
                raise ValueError(f"class point {p} is not in the gallery")
    distinct = len(classes)
    simply_connected = _is_simply_connected(gallery)
    preconditions = (
        ("simply-connected", simply_connected),
        ("three-distinct-classes", distinct == 3),
    )

    return _colorful_core(gallery, classes, cfg, name, "colorful-plane", preconditions)


def check_colorful_general(gallery, classes, cfg: Optional[CheckConfig] = None) -> TheoremReport:
    """Colorful check for any number of classes (m >= 2), any gallery kind."""
    cfg = cfg or CheckConfig(theorem="colorful-general")
    name = getattr(gallery, "name", "") or type(gallery).__name__
    norm = [tuple(pt(p) for p in cls) for cls in classes]
    if len(norm) < 2:
        raise ValueError("need at least two classes")
    for cls in norm:
        if not cls:
            raise ValueError("empty color class")
        for p in cls:
            if not gallery_contains(gallery, p):
                raise ValueError(f"class point {p} is not in the gallery")
    simply_connected = _is_simply_connected(gallery)
    preconditions = (("simply-connected", simply_connected),)
    return _colorful_core(gallery, norm, cfg, name, "colorful-general", preconditions)


def _colorful_core(gallery, classes, cfg, name, theorem, preconditions) -> TheoremReport:
    total = 1
    for cls in classes:
        total *= len(cls)
    checked = 0
    violating: List[Tuple[Point2, ...]] = []
    truncated = False
    cache: dict = {}
    for tup in itertools.product(*classes):
        if checked >= cfg.cap:
            truncated = True
            break
        checked += 1
        uniq = tuple(dict.fromkeys(tup))
        kind, payload = _common_region(gallery, uniq, cache)
        if _common_is_empty(kind, payload):
            violating.append(tup)
            if len(violating) >= 3:
                break
    if violating:
        hyp = "violated"
    elif truncated:
        hyp = "undetermined"
    else:
        hyp = "holds-on-candidates"

    concl = "fails"
    witnesses: List[Tuple[str, object]] = []
    for i, cls in enumerate(classes):
        kind, payload = _common_region(gallery, cls, cache)
        if not _common_is_empty(kind, payload):
            concl = "holds"
            witnesses.append((f"class-{i + 1}-common-visibility", payload))
            break

    pre_met = all(ok for _, ok in preconditions)
    classification = _classify(hyp, concl, pre_met, True)
    return TheoremReport(
        theorem, name, hyp, concl, classification,
        violating_tuples=tuple(violating), witnesses=tuple(witnesses),
        coverage=Coverage(checked, total, truncated=truncated),
        preconditions=preconditions, config=cfg,
    )


# ---------------------------------------------------------------------------
# Quantitative checkers


def _shape_area(shape):
    if isinstance(shape, ConvexPolygon):
        return shape.area()
    return area(shape)


def _circumscribed_disc_polygon(center, r, verts: int = 96) -> Optional[ConvexPolygon]:
    """Convex polygon certified (exactly) to contain the disc of radius r."""
    cx, cy = rat(center[0]), rat(center[1])
    r = rat(r)
    R = float(r) / math.cos(math.pi / verts) * (1.0 + 1e-9)
    ring = [
        Point2(
            cx + rationalize(R * math.cos(2 * math.pi * k / verts)),
            cy + rationalize(R * math.sin(2 * math.pi * k / verts)),
        )
        for k in range(verts)
    ]
    poly = ConvexPolygon(ring)
    if poly.degenerate:
        return None
    for hp in poly.halfplanes():
        slack = hp.c - (hp.a * cx + hp.b * cy)
        if slack < 0 or slack * slack < r * r * (hp.a * hp.a + hp.b * hp.b):
            return None  # apothem dipped below r; not a certificate
    return poly


def _region_contains_convex(region: Region, convex: ConvexPolygon) -> bool:
    diff = region_boolean("difference", Region((convex.to_polygon(),)), region)
    return diff.is_empty()


def _disc_in_region(region: Region, center, r) -> bool:
    poly = _circumscribed_disc_polygon(center, r)
    if poly is None:
        return False
    return _region_contains_convex(region, poly)


def _witness_in_shape(shape, family, cfg, convex_hint: bool):
    """(status, witness, qualifier): status in holds | fails | undetermined.

    "fails" is only returned when absence is certified (exact area
    obstructions, or exact optima over convex shapes); searches that simply
    fail to find a witness return "undetermined".
    """
    threshold = rat(cfg.threshold)
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    tol = rat(cfg.tolerance)

    empty = shape.is_empty() if hasattr(shape, "is_empty") else False
    if family in ("box-volume", "box-sum", "disc", "ellipse", "region-area"):
        total = rat(0) if empty else _shape_area(shape)
        if family == "region-area":
            if total >= threshold - tol:
                return "holds", ("region-area", total), None
            return "fails", None, None
        # exact area obstructions certify absence
        if family == "box-volume" and total < threshold - tol:
            return "fails", None, None
        if family == "ellipse" and total < threshold - tol:
            return "fails", None, None
        if family == "disc" and rat("3.14159265") * threshold * threshold > total:
            return "fails", None, None
    if empty:
        return "fails", None, None  # nothing of positive size fits
    if family == "box-sum":
        (x0, y0), (x1, y1) = region_bbox(_as_region(shape))
        if (x1 - x0) + (y1 - y0) < threshold - tol:
            return "fails", None, None  # bounding box caps every contained box

    if family == "box-volume":
        box = inscribe.contains_box_of_area(shape, threshold, convex_hint=convex_hint)
        if box is not None and inscribe.contains_box(shape, box, convex_hint=convex_hint):
            return "holds", box, None
        return "undetermined", None, "box-scan-resolution"
    if family == "box-sum":
        box = inscribe.contains_box_of_axis_sum(shape, threshold, convex_hint=convex_hint)
        if box is not None and inscribe.contains_box(shape, box, convex_hint=convex_hint):
            return "holds", box, None
        return "undetermined", None, "box-scan-resolution"
    if family == "disc":
        region = _as_region(shape)
        if convex_hint:
            disc = inscribe.max_inscribed_disc(shape)
            if disc.r >= float(threshold) - float(tol):
                center = (rationalize(disc.cx), rationalize(disc.cy))
                if _disc_in_region(region, center, threshold):
                    return "holds", inscribe.Disc(disc.cx, disc.cy, float(threshold)), None
                return "undetermined", None, "disc-certificate-failed"
            return "fails", None, "disc-lp-float"
        hit = _nonconvex_disc_search(region, threshold)
        if hit is not None:
            return "holds", hit, None
        return "undetermined", None, "disc-grid-resolution"
    if family == "ellipse":
        if not convex_hint:
            return "undetermined", None, "ellipse-needs-convex"
        ell = inscribe.mvie(shape)
        if rat(ell.area()) >= threshold - tol:
            return "holds", ell, "mvie-float"
        return "fails", None, "mvie-float-not-certified"
    if family == "vwidth-segment":
        seg = inscribe.longest_vwidth_segment(shape, cfg.direction, convex_hint=convex_hint)
        if seg is not None and rat(seg.value) >= threshold - tol:
            return "holds", seg, None
        if convex_hint:
            return "fails", None, None  # exact optimum over a convex shape
        vx, vy = rat(cfg.direction[0]), rat(cfg.direction[1])
        vals = [p[0] * vx + p[1] * vy for p in _region_vertices(_as_region(shape))]
        if vals and max(vals) - min(vals) < threshold - tol:
            return "fails", None, None  # the region's own width is too small
        return "undetermined", None, "vwidth-vertex-pool"
    if family == "norm-segment":
        if cfg.norm_ball is None:
            raise ValueError("norm-segment needs a norm_ball")
        seg = inscribe.longest_norm_segment(shape, cfg.norm_ball, convex_hint=convex_hint)
        if seg is not None and rat(seg.value) >= threshold - tol:
            return "holds", seg, None
        if convex_hint:
            return "fails", None, None
        pool = _region_vertices(_as_region(shape))
        bound = max(
            (cfg.norm_ball.norm((b[0] - a[0], b[1] - a[1]))
             for a, b in itertools.combinations(pool, 2)),
            default=rat(0),
        )
        if bound < threshold - tol:
            return "fails", None, None  # endpoints live on region vertices' hull
        return "undetermined", None, "norm-vertex-pool"
    raise ValueError(f"unknown witness family {family!r}")


def _as_region(shape) -> Region:
    if isinstance(shape, Region):
        return shape
    if isinstance(shape, ConvexPolygon):
        return Region((shape.to_polygon(),))
    if isinstance(shape, PolygonWithHoles):
        return Region((shape,))
    raise TypeError(f"cannot interpret {type(shape).__name__} as a region")


def _region_vertices(region: Region) -> List[Point2]:
    out: List[Point2] = []
    for comp in region.components:
        for ring in (comp.outer,) + tuple(comp.holes):
            out.extend(ring.vertices)
    return out


def _region_as_convex(region: Region) -> Optional[ConvexPolygon]:
    """The region as a convex polygon, or None; exact (canonical rings have
    no collinear runs, so strict turns decide convexity)."""
    if len(region.components) != 1 or region.components[0].holes:
        return None
    vs = region.components[0].outer.vertices
    n = len(vs)
    for i in range(n):
        if cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0:
            return None
    return ConvexPolygon(vs)


def _nonconvex_disc_search(region: Region, r, grid: int = 8):
    from artgallery.geom.polygon import point_in_region

    (x0, y0), (x1, y1) = region_bbox(region)
    cells = sorted(
        ((i, j) for i in range(1, grid) for j in range(1, grid)),
        key=lambda ij: abs(ij[0] * 2 - grid) + abs(ij[1] * 2 - grid),
    )
    r = rat(r)
    for i, j in cells:
        c = Point2(x0 + (x1 - x0) * rat(i, grid), y0 + (y1 - y0) * rat(j, grid))
        # cardinal points prune clearly poking discs before the exact boolean
        probes = (c, Point2(c[0] + r, c[1]), Point2(c[0] - r, c[1]),
                  Point2(c[0], c[1] + r), Point2(c[0], c[1] - r))
        if not all(point_in_region(p, region) for p in probes):
            continue
        if _disc_in_region(region, c, r):
            return inscribe.Disc(float(c[0]), float(c[1]), float(r))
    return None


def _common_witness(gallery, tup, cfg, cache=None):
    """Witness admission in the exact common visibility of a tuple."""
    kind, payload = _common_region(gallery, tup, cache)
    if kind == "region":
        conv = _region_as_convex(payload)
        if conv is not None:
            return _witness_in_shape(conv, cfg.family, cfg, convex_hint=True)
        return _witness_in_shape(payload, cfg.family, cfg, convex_hint=False)
    if kind == "pinched":
        if cfg.family == "region-area":
            total = payload.area()
            tol = rat(cfg.tolerance)
            if total >= rat(cfg.threshold) - tol:
                return "holds", ("region-area", total), None
            return "fails", None, None
        for idx in payload.full:
            comp = payload.gallery.components[idx]
            status, witness, q = _witness_in_shape(comp, cfg.family, cfg, convex_hint=True)
            if status == "holds":
                return status, witness, q
        if not payload.full:
            return "fails", None, None  # at most 1-dimensional
        return "undetermined", None, "pinched-componentwise"
    # skeletal: area is zero; only segment witnesses can live here
    lone, segs = payload
    if cfg.family in ("vwidth-segment", "norm-segment"):
        best = None
        for s in segs:
            if cfg.family == "vwidth-segment":
                v = (rat(cfg.direction[0]), rat(cfg.direction[1]))
                val = abs((s.a[0] - s.b[0]) * v[0] + (s.a[1] - s.b[1]) * v[1])
            else:
                val = cfg.norm_ball.norm((s.a[0] - s.b[0], s.a[1] - s.b[1]))
            if best is None or val > best[0]:
                best = (val, s)
        if best is not None and best[0] >= rat(cfg.threshold) - rat(cfg.tolerance):
            return "holds", inscribe.SegmentWitness(best[1].a, best[1].b, best[0]), None
        return "fails", None, None  # exact: segments exhaust the 1D common set
    return "fails", None, None  # area-like witness in a measure-zero set


def check_quantitative(gallery, candidates: Optional[CandidateSet] = None,
                       cfg: Optional[CheckConfig] = None) -> TheoremReport:
    """Quantitative theorems: witness-in-common-visibility for every tuple
    implies witness-in-kernel.

    The hypothesis runs on the exact non-convex intersection of visibility
    regions; the conclusion on the exact kernel (convex for hole-free
    galleries). Witness searches that are resolution-limited propagate as
    "undetermined" plus a qualifier.
    """
    if cfg is None or cfg.family is None:
        raise ValueError("check_quantitative needs cfg.family")
    if cfg.family not in QUANT_FAMILIES:
        raise ValueError(f"unknown witness family {cfg.family!r}")
    if cfg.threshold is None:
        raise ValueError("check_quantitative needs cfg.threshold")
    if rat(cfg.threshold) <= 0:
        raise ValueError("threshold must be positive")
    name = getattr(gallery, "name", "") or type(gallery).__name__
    k = cfg.tuple_size()
    if candidates is None:
        candidates = CandidateSet.default(
            gallery, seed=cfg.seed, random_count=cfg.random_candidates
        )

    total = _ncomb(len(candidates), k)
    theorem = cfg.theorem if cfg.theorem != "classic" else cfg.family

    # Conclusion first: the kernel sits inside the common visibility of any
    # tuple, so a kernel witness settles the hypothesis for every tuple at
    # once and the enumeration can be skipped entirely.
    concl_kernel, kern, _, kq = kernel_status(gallery)
    kernel_quals: List[str] = [kq] if kq else []
    witnesses: List[Tuple[str, object]] = []
    certified_failure = True
    if concl_kernel == "fails" or isinstance(kern, Point2):
        # no kernel at all, or a single point: nothing of positive size fits
        concl = "fails"
    else:
        status, witness, q = _witness_in_shape(kern, cfg.family, cfg, convex_hint=True)
        if q:
            kernel_quals.append(q)
        concl = status
        if status == "holds":
            witnesses.append((f"kernel-{cfg.family}", witness))
        elif status == "fails":
            certified_failure = q is None

    if concl == "holds":
        cov = Coverage(0, total, fast_path="kernel-superset")
        return TheoremReport(
            theorem, name, "holds-on-candidates", "holds", "CONSISTENT",
            witnesses=tuple(witnesses), coverage=cov,
            qualifiers=tuple(dict.fromkeys(kernel_quals)), config=cfg,
        )

    checked = 0
    undetermined = 0
    violating: List[Tuple[Point2, ...]] = []
    qualifiers: List[str] = []
    truncated = False
    cache: dict = {}
    for tup in itertools.combinations(candidates.points, k):
        if checked >= cfg.cap:
            truncated = True
            break
        checked += 1
        status, _, q = _common_witness(gallery, tup, cfg, cache)
        if q and q not in qualifiers:
            qualifiers.append(q)
        if status == "fails":
            violating.append(tup)
            if len(violating) >= 3:
                break
        elif status == "undetermined":
            undetermined += 1
    if violating:
        hyp = "violated"
    elif truncated or undetermined:
        hyp = "undetermined"
        if undetermined:
            qualifiers.append(f"{undetermined} tuples undetermined at search resolution")
    else:
        hyp = "holds-on-candidates"
    qualifiers.extend(kernel_quals)

    classification = _classify(hyp, concl, True, certified_failure)
    return TheoremReport(
        theorem, name,
        hyp, concl, classification,
        violating_tuples=tuple(violating), witnesses=tuple(witnesses),
        coverage=Coverage(checked, total, truncated=truncated),
        qualifiers=tuple(dict.fromkeys(qualifiers)), config=cfg,
    )


# ---------------------------------------------------------------------------
# Fuzzing


GENERATORS = {}


def _generator(name: str):
    if not GENERATORS:
        from artgallery import galleries as g

        GENERATORS.update(
            {
                "star": lambda seed, **kw: Gallery(
                    g.gen_star(seed, kw.get("n_vertices", 12)), name=f"star-{seed}"
                ),
                "simple": lambda seed, **kw: Gallery(
                    g.gen_simple(seed, kw.get("n_vertices", 12)), name=f"simple-{seed}"
                ),
                "empty-kernel": lambda seed, **kw: Gallery(
                    g.gen_empty_kernel(seed, kw.get("n_vertices", 12)),
                    name=f"empty-kernel-{seed}",
                ),
            }
        )
    return GENERATORS[name]


def search_counterexample(generator, cfg: Optional[CheckConfig] = None,
                          budget: int = 100, seed: int = 0, **gen_kwargs) -> List[TheoremReport]:
    """Seeded fuzzing loop: generate, check, collect. Reports carry their
    generation seed so any run reproduces standalone."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    cfg = cfg or CheckConfig(theorem="classic")
    make = _generator(generator) if isinstance(generator, str) else generator
    reports: List[TheoremReport] = []
    for i in range(budget):
        # one flat integer per run so a report reproduces standalone
        run_seed = seed * 1000003 + i
        gallery = make(run_seed, **gen_kwargs) if isinstance(generator, str) else make(run_seed)
        if cfg.theorem == "classic":
            rep = check_classic(gallery, cfg=cfg)
        elif cfg.theorem in QUANT_FAMILIES:
            rep = check_quantitative(gallery, cfg=cfg)
        else:
            raise ValueError(f"fuzzing not wired for theorem {cfg.theorem!r}")
        rep = replace(rep, reproduction=(("generator", str(generator)), ("seed", run_seed)))
        reports.append(rep)
    return reports


def violation_candidates(reports: Sequence[TheoremReport]) -> List[TheoremReport]:
    return [r for r in reports if r.classification == "THEOREM_VIOLATION_CANDIDATE"]
