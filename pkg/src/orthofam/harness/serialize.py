"""Conversion of kernel values to JSON-friendly structures and between backends."""
from __future__ import annotations

from fractions import Fraction

from ..conics import Conic
from ..family import HomothetClass, LinearFamily, Triangle, VectorPair
from ..numeric import INF, HPoint, Line, QuadExt, RootSet, Vec2
from ..operator4 import LinOp2, Subspace4, Vec4


def scalar_json(x):
    if x is INF:
        return "inf"
    if isinstance(x, bool):
        return x
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, QuadExt):
        return str(x)
    return x


def to_json(obj):
    """Recursive conversion; unknown objects fall back to ``str``."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if obj is INF or isinstance(obj, (int, float, Fraction, QuadExt)):
        return scalar_json(obj)
    if isinstance(obj, Conic):
        return {"conic": [scalar_json(v) for v in obj.normalized()]}
    if isinstance(obj, HPoint):
        if obj.is_finite():
            return to_json(obj.to_point())
        return {"h": [scalar_json(v) for v in obj.normalized()]}
    if isinstance(obj, Line):
        return {"line": [scalar_json(v) for v in obj.normalized()]}
    if isinstance(obj, Vec2):
        return [scalar_json(obj.x), scalar_json(obj.y)]
    if isinstance(obj, Triangle):
        return [to_json(p) for p in obj]
    if isinstance(obj, VectorPair):
        return {"b": to_json(obj.b), "c": to_json(obj.c)}
    if isinstance(obj, HomothetClass):
        return {"class": to_json(obj.rep)}
    if isinstance(obj, LinearFamily):
        return {"T0": to_json(obj.T0), "T1": to_json(obj.T1)}
    if isinstance(obj, RootSet):
        return {"kind": obj.kind, "roots": [scalar_json(r) for r in obj.roots]}
    if isinstance(obj, LinOp2):
        return [[scalar_json(obj.m11), scalar_json(obj.m12)], [scalar_json(obj.m21), scalar_json(obj.m22)]]
    if isinstance(obj, Vec4):
        return [scalar_json(v) for v in obj]
    if isinstance(obj, Subspace4):
        return [to_json(v) for v in obj.basis]
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):
        return obj.value
    return str(obj)


def to_float(obj):
    """Same structure with every scalar converted to ``float``."""
    if obj is INF or obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, Fraction, QuadExt, float)):
        return float(obj)
    if isinstance(obj, tuple) and hasattr(obj, "_fields"):
        return type(obj)(*(to_float(v) for v in obj))
    if isinstance(obj, (list, tuple)):
        return type(obj)(to_float(v) for v in obj)
    if isinstance(obj, dict):
        return {k: to_float(v) for k, v in obj.items()}
    return obj
