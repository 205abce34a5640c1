"""Exact art-gallery geometry: visibility, kernels, inscribed bodies,
convex-body parametrizations, and theorem checkers.

Subpackages and modules are imported lazily by callers; this top level
only pins the version and the most commonly used entry points.
"""

from artgallery.rational import rat, rationalize, fmt
from artgallery.geom import Point2, ConvexPolygon, SimplePolygon, PolygonWithHoles, Region
from artgallery.gallery import Gallery, SkeletalGallery, PinchedGallery

__version__ = "0.1.0"

__all__ = [
    "rat",
    "rationalize",
    "fmt",
    "Point2",
    "ConvexPolygon",
    "SimplePolygon",
    "PolygonWithHoles",
    "Region",
    "Gallery",
    "SkeletalGallery",
    "PinchedGallery",
    "__version__",
]
