"""Gallery containers: polygonal galleries and skeletal (segment) galleries.

A gallery couples the geometry with optional named point classes (guard
colors) and a human-readable name. Classes are stored as ordered name/points
pairs so documents round-trip deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from artgallery.geom.primitives import Point2, Segment2, pt
from artgallery.geom.polygon import PolygonWithHoles, SimplePolygon


def _classes_tuple(classes) -> Tuple[Tuple[str, Tuple[Point2, ...]], ...]:
    if not classes:
        return ()
    items = classes.items() if isinstance(classes, Mapping) else classes
    return tuple((str(name), tuple(pt(p) for p in points)) for name, points in items)


@dataclass(frozen=True)
class Gallery:
    """Polygonal gallery: a polygon with holes plus named point classes."""

    polygon: PolygonWithHoles
    classes: Tuple[Tuple[str, Tuple[Point2, ...]], ...] = ()
    name: str = ""

    def __init__(self, polygon, classes=(), name=""):
        if isinstance(polygon, SimplePolygon):
            polygon = PolygonWithHoles(polygon)
        elif not isinstance(polygon, PolygonWithHoles):
            polygon = PolygonWithHoles(SimplePolygon(polygon))
        object.__setattr__(self, "polygon", polygon)
        object.__setattr__(self, "classes", _classes_tuple(classes))
        object.__setattr__(self, "name", name)

    def class_points(self, name: str) -> Tuple[Point2, ...]:
        for cname, points in self.classes:
            if cname == name:
                return points
        raise KeyError(name)

    def class_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.classes)

    def all_class_points(self) -> Tuple[Point2, ...]:
        return tuple(p for _, points in self.classes for p in points)

    def is_simple(self) -> bool:
        return not self.polygon.holes

    def validate(self) -> "Gallery":
        self.polygon.validate()
        return self


@dataclass(frozen=True)
class SkeletalGallery:
    """Gallery that is a finite union of closed segments (1-dimensional)."""

    segments: Tuple[Segment2, ...]
    classes: Tuple[Tuple[str, Tuple[Point2, ...]], ...] = ()
    name: str = ""

    def __init__(self, segments, classes=(), name=""):
        segs = []
        for s in segments:
            if isinstance(s, Segment2):
                segs.append(Segment2(pt(s.a), pt(s.b)))
            else:
                a, b = s
                segs.append(Segment2(pt(a), pt(b)))
        object.__setattr__(self, "segments", tuple(segs))
        object.__setattr__(self, "classes", _classes_tuple(classes))
        object.__setattr__(self, "name", name)

    def class_points(self, name: str) -> Tuple[Point2, ...]:
        for cname, points in self.classes:
            if cname == name:
                return points
        raise KeyError(name)

    def class_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.classes)

    def validate(self) -> "SkeletalGallery":
        for s in self.segments:
            if s.a == s.b:
                raise ValueError("degenerate segment")
        return self


@dataclass(frozen=True)
class PinchedGallery:
    """Chain of convex pieces glued at single points.

    Covers compact simply connected sets whose boundary is a self-crossing
    polygon (the odd-even interior decomposes into convex cells touching at
    the crossing points). Components must be convex and may share at most one
    point pairwise; the touching graph must be connected.
    """

    components: Tuple["ConvexPolygon", ...]
    classes: Tuple[Tuple[str, Tuple[Point2, ...]], ...] = ()
    name: str = ""

    def __init__(self, components, classes=(), name=""):
        from artgallery.geom.convex import ConvexPolygon

        comps = tuple(
            c if isinstance(c, ConvexPolygon) else ConvexPolygon(c) for c in components
        )
        if not comps:
            raise ValueError("need at least one component")
        for c in comps:
            if c.degenerate:
                raise ValueError("components must be full-dimensional")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "classes", _classes_tuple(classes))
        object.__setattr__(self, "name", name)

    def pinch_points(self) -> Tuple[Point2, ...]:
        from artgallery.geom.convex import convex_intersect

        seen = []
        n = len(self.components)
        for i in range(n):
            for j in range(i + 1, n):
                meet = convex_intersect(self.components[i], self.components[j])
                if meet.is_empty():
                    continue
                if len(meet.vertices) != 1:
                    raise ValueError("components overlap in more than a point")
                if meet.vertices[0] not in seen:
                    seen.append(meet.vertices[0])
        return tuple(seen)

    def contains(self, p) -> bool:
        q = pt(p)
        return any(c.contains(q) for c in self.components)

    def component_indices(self, p) -> Tuple[int, ...]:
        q = pt(p)
        return tuple(i for i, c in enumerate(self.components) if c.contains(q))

    def class_points(self, name: str) -> Tuple[Point2, ...]:
        for cname, points in self.classes:
            if cname == name:
                return points
        raise KeyError(name)

    def class_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.classes)

    def validate(self) -> "PinchedGallery":
        from artgallery.geom.convex import convex_intersect

        n = len(self.components)
        adjacency = {i: set() for i in range(n)}
        for i in range(n):
            for j in range(i + 1, n):
                meet = convex_intersect(self.components[i], self.components[j])
                if meet.is_empty():
                    continue
                if len(meet.vertices) != 1:
                    raise ValueError("components overlap in more than a point")
                adjacency[i].add(j)
                adjacency[j].add(i)
        reached = {0}
        frontier = [0]
        while frontier:
            for k in adjacency[frontier.pop()]:
                if k not in reached:
                    reached.add(k)
                    frontier.append(k)
        if len(reached) != n:
            raise ValueError("components do not form a connected union")
        for _, points in self.classes:
            for p in points:
                if not self.contains(p):
                    raise ValueError(f"class point {p} outside the gallery")
        return self


def as_polygon(gallery) -> PolygonWithHoles:
    """Unwrap Gallery | PolygonWithHoles | SimplePolygon | ring to PolygonWithHoles."""
    if isinstance(gallery, Gallery):
        return gallery.polygon
    if isinstance(gallery, PolygonWithHoles):
        return gallery
    if isinstance(gallery, SimplePolygon):
        return PolygonWithHoles(gallery)
    return PolygonWithHoles(SimplePolygon(gallery))
