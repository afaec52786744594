"""Static checking and evaluation of scene documents.

Every construction and query is an entry of ``OPS``: positional parameter
kinds, a result kind, and the implementing function.  Calls inside
declarations must return a declarable kind; queries may use any op.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .. import conics, constructions as cons, family as fam, operator4 as op4, orthology as orth
from ..errors import GeometryError
from ..numeric import HPoint, Line, Vec2, collinear, concurrent, intersect, parallel_through, perpendicular_from
from .scene import (
    BinOp,
    Call,
    Decl,
    Name,
    Neg,
    Num,
    Query,
    SceneDoc,
    SceneError,
    SceneNameError,
    SceneTypeError,
    Str,
    Tup,
    format_statement,
)

DECLARABLE = ("point", "line", "triangle", "family", "conic", "scalar")


class EvaluationError(SceneError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class Op:
    params: tuple
    returns: str
    fn: Callable
    # drawn as segments from the vertices of the first argument to the result
    center: bool = False


def _circumcircle(T):
    O = cons.circumcenter(T)
    v = T.A - O
    one = O.x - O.x + 1
    return conics.Conic(one, 0 * one, one, -2 * O.x, -2 * O.y, O.dot(O) - v.dot(v))


def _rotate(T, cs, center):
    return orth.rotate_triangle(T, cs, center)


def _altitude_midpoints(T):
    return cons.altitude_configuration(T)[1]


def _pedal_family(T, P0, P1):
    return cons.pedal_family(T, P0, P1)


def _eigenpairs(F, tol):
    return op4.eigenpairs(op4.operator_from_family(F, tol), tol)


def _with_tol(fn):
    """Mark ``fn`` as taking the evaluation tolerance as keyword ``tol``."""
    fn._takes_tol = True
    return fn


def _t(fn):
    return _with_tol(lambda *a, tol=None: fn(*a, tol=tol))


OPS: dict[str, Op] = {
    # points
    "midpoint": Op(("point", "point"), "point", lambda p, q: (p + q) / 2),
    "circumcenter": Op(("triangle",), "point", cons.circumcenter),
    "orthocenter": Op(("triangle",), "point", cons.orthocenter),
    "centroid": Op(("triangle",), "point", cons.centroid),
    "incenter": Op(("triangle",), "point", cons.incenter),
    "bevan": Op(("triangle",), "point", cons.bevan_point),
    "foot": Op(("point", "line"), "point", cons.foot),
    "reflect": Op(("point", "line"), "point", cons.reflect),
    "meet": Op(("line", "line"), "point", _t(intersect)),
    "orthology_center": Op(("triangle", "triangle"), "point", _t(orth.orthology_center), center=True),
    "harmonic_center": Op(("triangle", "triangle"), "point", _t(orth.harmonic_center), center=True),
    "alpha_center": Op(
        ("triangle", "triangle", "point"), "point", _t(orth.alpha_orthology_center), center=True
    ),
    "perspector": Op(("triangle", "triangle"), "point", _t(orth.perspector), center=True),
    "orthopole": Op(("triangle", "line"), "point", _t(cons.orthopole)),
    "spiral_center": Op(("point", "point", "point", "point"), "point", _t(fam.spiral_center)),
    "common_center": Op(("family",), "point", _t(orth.common_center_point)),
    "focus": Op(("conic",), "point", _t(conics.parabola_focus)),
    # lines
    "through": Op(("point", "point"), "line", Line.through),
    "perpendicular": Op(("point", "line"), "line", _t(perpendicular_from)),
    "parallel": Op(("point", "line"), "line", parallel_through),
    "simson": Op(("point", "triangle"), "line", _t(cons.simson_line)),
    "desargues_axis": Op(("triangle", "triangle"), "line", _t(orth.desargues_axis)),
    "center_line": Op(("family", "triangle"), "line", _t(orth.center_line)),
    "carrier": Op(("family", "scalar"), "line", _t(conics.carrier_line)),
    # triangles
    "pedal": Op(("point", "triangle"), "triangle", cons.pedal_triangle),
    "alpha_pedal": Op(("point", "triangle", "point"), "triangle", cons.alpha_pedal_triangle),
    "medial": Op(("triangle",), "triangle", cons.medial_triangle),
    "contact": Op(("triangle",), "triangle", lambda T: cons.contact_triangles(T)[0]),
    "excontact": Op(("triangle",), "triangle", lambda T: cons.contact_triangles(T)[1]),
    "square_centers": Op(("triangle",), "triangle", cons.square_centers),
    "altitude_feet": Op(("triangle",), "triangle", cons.altitude_feet),
    "altitude_midpoints": Op(("triangle",), "triangle", _altitude_midpoints),
    "project": Op(("triangle", "line"), "triangle", cons.project),
    "mirror": Op(("triangle", "line"), "triangle", cons.reflect_triangle),
    "rotate": Op(("triangle", "point", "point"), "triangle", _rotate),
    "rotate90": Op(("triangle",), "triangle", orth.rotate90),
    "translate": Op(("triangle", "point"), "triangle", lambda T, v: T.translated(v)),
    "homothety": Op(("triangle", "point", "scalar"), "triangle", lambda T, c, k: T.homothety(c, k)),
    "member": Op(("family", "scalar"), "triangle", fam.triangle_at),
    # families
    "kiepert": Op(("triangle",), "family", cons.kiepert_family),
    "pedal_family": Op(("triangle", "point", "point"), "family", _pedal_family),
    "reparametrize": Op(("family", "scalar", "scalar"), "family", fam.reparametrize),
    # conics
    "circumcircle": Op(("triangle",), "conic", _circumcircle),
    "conic5": Op(("point",) * 5, "conic", _t(conics.conic_through_5)),
    "hyperbola": Op(("point",) * 5, "conic", _t(conics.hyperbola_with_asymptote_dirs)),
    "center_conic": Op(("triangle", "family"), "conic", _with_tol(lambda T, F, tol=None: orth.center_conic(T, F, tol=tol))),
    "gamma": Op(("family", "scalar"), "conic", _t(conics.gamma_hyperbola)),
    "epsilon": Op(("family",), "conic", _t(conics.epsilon_envelope)),
    "envelope": Op(("family", "string"), "conic", _with_tol(lambda F, p, tol=None: conics.envelope_conic(F, p, tol=tol))),
    # query-only
    "is_orthologic": Op(("triangle", "triangle"), "bool", _t(orth.is_orthologic)),
    "carnot_sum": Op(("triangle", "triangle"), "value", orth.carnot_sum),
    "orthology_form": Op(("triangle", "triangle"), "value", orth.orthology_form),
    "is_harmonic": Op(("triangle", "triangle"), "bool", _t(orth.is_harmonic)),
    "is_perspective": Op(("triangle", "triangle"), "bool", _t(orth.is_perspective)),
    "rideau": Op(("triangle", "triangle"), "bool", _t(orth.rideau_check)),
    "is_degenerate": Op(("triangle",), "bool", _t(lambda T, tol=None: T.is_degenerate(tol))),
    "degenerate_params": Op(("family",), "value", _t(fam.degenerate_parameters)),
    "degenerate_carriers": Op(("family",), "value", _t(conics.degenerate_carriers)),
    "is_singular": Op(("family",), "value", _t(fam.is_singular)),
    "is_orthologic_family": Op(("family",), "bool", _t(orth.is_orthologic_family)),
    "is_concurrent": Op(("family",), "bool", _t(orth.family_is_concurrent)),
    "unique_h": Op(("family",), "value", _t(orth.unique_h)),
    "correspondence": Op(("family",), "value", _t(orth.common_center_correspondence)),
    "operator": Op(("family",), "value", _t(op4.operator_from_family)),
    "eigenpairs": Op(("family",), "value", _with_tol(_eigenpairs)),
    "is_self_adjoint": Op(
        ("family",), "bool", _with_tol(lambda F, tol=None: op4.is_self_adjoint(op4.operator_from_family(F, tol), tol))
    ),
    "is_lagrangian": Op(
        ("family",), "bool", _with_tol(lambda F, tol=None: op4.is_lagrangian(op4.family_plane(F, tol), tol))
    ),
    "classify": Op(("conic",), "value", _t(conics.classify)),
    "is_rectangular": Op(("conic",), "bool", _t(conics.is_rectangular)),
    "asymptotes": Op(("conic",), "value", _t(conics.asymptote_directions)),
    "is_tangent": Op(("line", "conic"), "bool", _t(conics.is_tangent)),
    "on_conic": Op(("conic", "point"), "bool", _with_tol(lambda C, p, tol=None: C.contains(p, tol))),
    "on_line": Op(("line", "point"), "bool", _with_tol(lambda l, p, tol=None: l.contains(p, tol))),
    "collinear": Op(("point", "point", "point"), "bool", _t(collinear)),
    "concurrent": Op(("line", "line", "line"), "bool", _t(concurrent)),
}


# --------------------------------------------------------------------------
# static checking


def _tuple_kind(kinds: list[str]) -> str:
    if all(k == "scalar" for k in kinds):
        return "point" if len(kinds) == 2 else f"tuple{len(kinds)}"
    if len(kinds) == 3 and all(k == "point" for k in kinds):
        return "triangle"
    return "tuple"


def _binop_kind(op: str, lk: str, rk: str) -> str | None:
    if op in "+-" and lk == rk and lk in ("scalar", "point"):
        return lk
    if op == "*" and {lk, rk} <= {"scalar", "point"} and "scalar" in (lk, rk):
        return "point" if "point" in (lk, rk) else "scalar"
    if op == "/" and rk == "scalar" and lk in ("scalar", "point"):
        return lk
    return None


def expr_kind(e, env: dict, line: int, in_decl: bool = True) -> str:
    if isinstance(e, Num):
        return "scalar"
    if isinstance(e, Str):
        return "string"
    if isinstance(e, Name):
        if e.id not in env:
            raise SceneNameError(line, f"name {e.id!r} is not defined")
        return env[e.id]
    if isinstance(e, Tup):
        return _tuple_kind([expr_kind(i, env, line) for i in e.items])
    if isinstance(e, Neg):
        k = expr_kind(e.operand, env, line)
        if k not in ("scalar", "point"):
            raise SceneTypeError(line, f"cannot negate a {k}")
        return k
    if isinstance(e, BinOp):
        lk, rk = expr_kind(e.left, env, line), expr_kind(e.right, env, line)
        k = _binop_kind(e.op, lk, rk)
        if k is None:
            raise SceneTypeError(line, f"unsupported operands for {e.op!r}: {lk} and {rk}")
        return k
    if isinstance(e, Call):
        op = OPS.get(e.func)
        if op is None:
            raise SceneNameError(line, f"unknown construction {e.func!r}")
        _check_args(e.func, op, e.args, env, line)
        if op.returns not in DECLARABLE:
            raise SceneTypeError(line, f"{e.func!r} can only be used in a query")
        return op.returns
    raise SceneTypeError(line, f"unexpected expression {e!r}")


def _check_args(name: str, op: Op, args, env: dict, line: int):
    if len(args) != len(op.params):
        raise SceneTypeError(line, f"{name!r} takes {len(op.params)} arguments, got {len(args)}")
    for i, (a, want) in enumerate(zip(args, op.params), 1):
        got = expr_kind(a, env, line)
        if got != want:
            raise SceneTypeError(line, f"argument {i} of {name!r} must be a {want}, got a {got}")


# accepted item-kind patterns per declaration kind
_DECL_FORMS = {
    "point": [("point",)],
    "scalar": [("scalar",)],
    "line": [("line",), ("point", "point"), ("tuple3",)],
    "triangle": [("triangle",), ("point", "point", "point")],
    "family": [("family",), ("triangle", "triangle")],
    "conic": [("conic",), ("tuple6",), ("point",) * 5],
}


def check_scene(doc: SceneDoc) -> dict:
    """Resolve names and kinds; returns the final environment ``name -> kind``."""
    env: dict[str, str] = {}
    for s in doc.declarations:
        if isinstance(s, Decl):
            kinds = tuple(expr_kind(i, env, s.line) for i in s.items)
            if kinds not in _DECL_FORMS[s.kind]:
                raise SceneTypeError(s.line, f"cannot build a {s.kind} from {' '.join(kinds)}")
            if s.name in env:
                raise SceneNameError(s.line, f"name {s.name!r} is already defined")
            env[s.name] = s.kind
        else:
            op = OPS.get(s.op)
            if op is None:
                raise SceneNameError(s.line, f"unknown query {s.op!r}")
            _check_args(s.op, op, s.args, env, s.line)
    return env


# --------------------------------------------------------------------------
# evaluation


@dataclass
class QueryResult:
    query: Query
    value: object
    args: tuple = ()


@dataclass
class SceneResult:
    doc: SceneDoc
    objects: dict  # name -> (kind, value), in declaration order
    queries: list
    backend: str = "exact"


class _Evaluator:
    def __init__(self, backend: str, tol):
        self.backend = backend
        self.tol = tol
        self.env: dict[str, tuple[str, object]] = {}
        self.line = 0

    def number(self, text: str):
        return float(text) if self.backend == "float" else Fraction(text)

    def coerce(self, value, kind: str):
        if kind == "point" and isinstance(value, HPoint):
            return value.to_point(self.tol)
        if kind == "triangle" and isinstance(value, fam.VectorPair):
            raise EvaluationError(self.line, "the member at infinity is not a triangle")
        if kind == "line" and isinstance(value, HPoint):
            raise EvaluationError(self.line, "the locus is a single point, not a line")
        return value

    def expr(self, e):
        if isinstance(e, Num):
            return self.number(e.text)
        if isinstance(e, Str):
            return e.value
        if isinstance(e, Name):
            return self.env[e.id][1]
        if isinstance(e, Tup):
            vals = [self.expr(i) for i in e.items]
            if all(isinstance(v, Vec2) for v in vals) and len(vals) == 3:
                return fam.Triangle(*vals)
            if len(vals) == 2:
                return Vec2(*vals)
            return tuple(vals)
        if isinstance(e, Neg):
            return -self.expr(e.operand)
        if isinstance(e, BinOp):
            a, b = self.expr(e.left), self.expr(e.right)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return b * a if isinstance(b, Vec2) else a * b
            return a / b
        if isinstance(e, Call):
            op = OPS[e.func]
            return self.coerce(self.call(op, [self.expr(a) for a in e.args]), op.returns)
        raise EvaluationError(self.line, f"unexpected expression {e!r}")

    def call(self, op: Op, args: list):
        if getattr(op.fn, "_takes_tol", False):
            return op.fn(*args, tol=self.tol)
        return op.fn(*args)

    def declare(self, d: Decl):
        vals = [self.expr(i) for i in d.items]
        k = d.kind
        if k == "line":
            if len(vals) == 2:
                v = Line.through(*vals)
            else:
                v = vals[0] if isinstance(vals[0], Line) else Line(*vals[0])
        elif k == "conic":
            if len(vals) == 5:
                v = conics.conic_through_5(*vals, tol=self.tol)
            else:
                v = vals[0] if isinstance(vals[0], conics.Conic) else conics.Conic(*vals[0])
        elif len(vals) == 1:
            v = vals[0]
        elif k == "triangle":
            v = fam.Triangle(*vals)
        else:
            v = fam.LinearFamily(*vals)
        self.env[d.name] = (k, v)


def evaluate(doc: SceneDoc, backend: str = "exact", tol=None) -> SceneResult:
    """Evaluate a checked document; geometric failures become ``EvaluationError``."""
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "float" and tol is None:
        from ..numeric import DEFAULT_TOL

        tol = DEFAULT_TOL
    check_scene(doc)
    ev = _Evaluator(backend, tol if backend == "float" else None)
    queries = []
    for s in doc.declarations:
        ev.line = s.line
        try:
            if isinstance(s, Decl):
                ev.declare(s)
            else:
                args = [ev.expr(a) for a in s.args]
                queries.append(QueryResult(s, ev.call(OPS[s.op], args), tuple(args)))
        except (GeometryError, ZeroDivisionError, ValueError) as exc:
            raise EvaluationError(s.line, f"{type(exc).__name__}: {exc}") from exc
    return SceneResult(doc, dict(ev.env), queries, backend)


def result_json(res: SceneResult) -> dict:
    from .serialize import to_json

    return {
        "backend": res.backend,
        "objects": [{"name": n, "kind": k, "value": to_json(v)} for n, (k, v) in res.objects.items()],
        "queries": [{"query": format_statement(q.query), "result": to_json(q.value)} for q in res.queries],
    }
