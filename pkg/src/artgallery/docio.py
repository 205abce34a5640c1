"""Gallery and report documents.

One JSON schema (format_version 1) covers all gallery kinds. Coordinates are
serialized as exact rational strings ("p/q"), so parse(serialize(G)) == G with
no tolerance anywhere. Floating payloads (spike angles, fitted witnesses)
stay native JSON numbers; Python's float repr round-trips them bit-exactly.

Report files split into a "deterministic" section (same inputs and seed give
identical bytes) and an optional "timing" section that carries wall-clock.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from typing import Optional

from artgallery.rational import rat
from artgallery.gallery import Gallery, PinchedGallery, SkeletalGallery, as_polygon
from artgallery.geom.primitives import Point2
from artgallery.geom.polygon import PolygonWithHoles, Region
from artgallery.geom.convex import ConvexPolygon
from artgallery import inscribe

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def _num(value) -> str:
    return str(rat(value))


def _scalar(value):
    """Exact rationals as "p/q" strings, floats as native JSON numbers."""
    if isinstance(value, float):
        return float(value)
    return _num(value)


def _parse_scalar(value):
    return rat(value) if isinstance(value, str) else float(value)


def _point(p) -> list:
    return [_num(p[0]), _num(p[1])]


def _parse_point(obj) -> Point2:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise DocumentError(f"bad point {obj!r}")
    return Point2(rat(obj[0]), rat(obj[1]))


def _ring(vertices) -> list:
    return [_point(v) for v in vertices]


def _classes_doc(classes) -> dict:
    return {name: [_point(p) for p in points] for name, points in classes}


def _parse_classes(obj) -> tuple:
    if not isinstance(obj, dict):
        raise DocumentError("classes must be an object")
    return tuple((name, tuple(_parse_point(p) for p in pts)) for name, pts in obj.items())


# ---------------------------------------------------------------------------
# Galleries


def gallery_to_document(gallery, metadata: Optional[dict] = None) -> dict:
    doc: dict = {"format_version": FORMAT_VERSION}
    if isinstance(gallery, SkeletalGallery):
        doc["kind"] = "skeletal"
        doc["segments"] = [[_point(s.a), _point(s.b)] for s in gallery.segments]
    elif isinstance(gallery, PinchedGallery):
        doc["kind"] = "pinched"
        doc["components"] = [_ring(c.vertices) for c in gallery.components]
    else:
        poly = as_polygon(gallery)
        doc["kind"] = "polygonal"
        doc["outer"] = _ring(poly.outer.vertices)
        doc["holes"] = [_ring(h.vertices) for h in poly.holes]
    doc["classes"] = _classes_doc(gallery.classes)
    doc["name"] = gallery.name
    if metadata:
        doc["metadata"] = metadata
    return doc


def document_to_gallery(doc: dict):
    if not isinstance(doc, dict):
        raise DocumentError("gallery document must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {version!r}")
    kind = doc.get("kind")
    classes = _parse_classes(doc.get("classes", {}))
    name = doc.get("name", "")
    if kind == "skeletal":
        segs = [(_parse_point(a), _parse_point(b)) for a, b in doc["segments"]]
        return SkeletalGallery(segs, classes=classes, name=name).validate()
    if kind == "pinched":
        comps = [[_parse_point(p) for p in ring] for ring in doc["components"]]
        return PinchedGallery(comps, classes=classes, name=name).validate()
    if kind == "polygonal":
        outer = [_parse_point(p) for p in doc["outer"]]
        holes = tuple(tuple(_parse_point(p) for p in h) for h in doc.get("holes", []))
        poly = PolygonWithHoles(outer, holes)
        return Gallery(poly, classes=classes, name=name).validate()
    raise DocumentError(f"unknown gallery kind {kind!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save_gallery(path, gallery, metadata: Optional[dict] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(gallery_to_document(gallery, metadata)))


def load_gallery(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    return document_to_gallery(doc)


# ---------------------------------------------------------------------------
# Regions (cmd_vis / cmd_kernel output)


def region_to_document(region) -> dict:
    if isinstance(region, ConvexPolygon):
        region = Region(() if region.is_empty() else (region.to_polygon(),))
    return {
        "format_version": FORMAT_VERSION,
        "kind": "region",
        "components": [
            {"outer": _ring(c.outer.vertices), "holes": [_ring(h.vertices) for h in c.holes]}
            for c in region.components
        ],
    }


def document_to_region(doc: dict) -> Region:
    if doc.get("kind") != "region" or doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError("not a region document")
    comps = []
    for c in doc["components"]:
        outer = [_parse_point(p) for p in c["outer"]]
        holes = tuple([_parse_point(p) for p in h] for h in c.get("holes", []))
        comps.append(PolygonWithHoles(outer, holes))
    return Region(tuple(comps))


# ---------------------------------------------------------------------------
# Witness shapes (typed, for reports and overlays)


def shape_to_document(shape) -> dict:
    if isinstance(shape, Point2):
        return {"type": "point", "at": _point(shape)}
    if isinstance(shape, inscribe.Disc):
        return {"type": "disc", "cx": shape.cx, "cy": shape.cy, "r": shape.r}
    if isinstance(shape, inscribe.Box2):
        return {
            "type": "box",
            "x": _num(shape.x), "y": _num(shape.y),
            "w": _num(shape.w), "h": _num(shape.h),
        }
    if isinstance(shape, inscribe.Ellipse):
        return {
            "type": "ellipse",
            "center": [shape.center[0], shape.center[1]],
            "a11": shape.a11, "a12": shape.a12, "a22": shape.a22,
        }
    if isinstance(shape, inscribe.SegmentWitness):
        return {
            "type": "segment",
            "a": _point(shape.a), "b": _point(shape.b),
            "value": _num(shape.value), "certified": shape.certified,
        }
    if isinstance(shape, ConvexPolygon):
        return {"type": "polygon", "vertices": _ring(shape.vertices)}
    if isinstance(shape, (Region, PolygonWithHoles)):
        reg = shape if isinstance(shape, Region) else Region((shape,))
        return {"type": "region", "region": region_to_document(reg)}
    if isinstance(shape, tuple) and len(shape) == 2 and isinstance(shape[0], str):
        return {"type": "value", "label": shape[0], "value": _num(shape[1])}
    if hasattr(shape, "full") and hasattr(shape, "gallery"):  # pinched visibility
        return {
            "type": "pinched-visibility",
            "components": list(shape.full),
            "segments": [[_point(s.a), _point(s.b)] for s in shape.segments],
            "points": [_point(p) for p in shape.points],
        }
    return {"type": "opaque", "repr": repr(shape)}


def document_to_shape(doc: dict):
    kind = doc.get("type")
    if kind == "point":
        return _parse_point(doc["at"])
    if kind == "disc":
        return inscribe.Disc(doc["cx"], doc["cy"], doc["r"])
    if kind == "box":
        return inscribe.Box2(rat(doc["x"]), rat(doc["y"]), rat(doc["w"]), rat(doc["h"]))
    if kind == "ellipse":
        return inscribe.Ellipse(tuple(doc["center"]), doc["a11"], doc["a12"], doc["a22"])
    if kind == "segment":
        return inscribe.SegmentWitness(
            _parse_point(doc["a"]), _parse_point(doc["b"]), rat(doc["value"]), doc["certified"]
        )
    if kind == "polygon":
        return ConvexPolygon([_parse_point(p) for p in doc["vertices"]])
    if kind == "region":
        return document_to_region(doc["region"])
    raise DocumentError(f"cannot reconstruct shape type {kind!r}")


# ---------------------------------------------------------------------------
# Reports


def _config_doc(cfg) -> Optional[dict]:
    if cfg is None:
        return None
    d = asdict(cfg)
    if d.get("threshold") is not None:
        d["threshold"] = _num(d["threshold"])
    d["direction"] = _point(
        Point2(rat(cfg.direction[0]), rat(cfg.direction[1]))
    )
    if cfg.norm_ball is not None:
        d["norm_ball"] = _ring(cfg.norm_ball.polygon.vertices)
    return d


def report_to_document(report, timing_seconds: Optional[float] = None) -> dict:
    det = {
        "theorem": report.theorem,
        "gallery": report.gallery,
        "hypothesis_verdict": report.hypothesis_verdict,
        "conclusion_verdict": report.conclusion_verdict,
        "classification": report.classification,
        "violating_tuples": [[_point(p) for p in tup] for tup in report.violating_tuples],
        "witnesses": [[label, shape_to_document(w)] for label, w in report.witnesses],
        "coverage": {
            "checked": report.coverage.checked,
            "total": report.coverage.total,
            "truncated": report.coverage.truncated,
            "fast_path": report.coverage.fast_path,
        },
        "preconditions": [[name, ok] for name, ok in report.preconditions],
        "qualifiers": list(report.qualifiers),
        "config": _config_doc(report.config),
        "reproduction": [[key, repr(value)] for key, value in report.reproduction],
    }
    doc = {"format_version": FORMAT_VERSION, "kind": "report", "deterministic": det}
    if timing_seconds is not None:
        doc["timing"] = {"seconds": timing_seconds}
    return doc


def spiked_params_to_document(params) -> dict:
    return {
        "n": params.n,
        "M": params.M,
        "Mp": params.Mp,
        "disc_poly_verts": params.disc_poly_verts,
        "m": _num(params.m),
        "eps": _num(params.eps),
        "delta": _num(params.delta),
        "S": list(params.S),
        "scale": _num(params.scale),
        "tips": [_point(p) for p in params.tips],
        "kernel_area_prescale": _num(params.kernel_area_prescale),
    }
