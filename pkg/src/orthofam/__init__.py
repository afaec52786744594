"""Linear families of triangles, orthology, and the conics and operators attached to them."""
from .errors import GeometryError
from .family import HomothetClass, LinearFamily, Triangle, VectorPair, triangle_at
from .numeric import INF, HPoint, Line, QuadExt, Vec2, vec

__all__ = [
    "GeometryError",
    "HPoint",
    "HomothetClass",
    "INF",
    "Line",
    "LinearFamily",
    "QuadExt",
    "Triangle",
    "Vec2",
    "VectorPair",
    "triangle_at",
    "vec",
]

__version__ = "0.1.0"
