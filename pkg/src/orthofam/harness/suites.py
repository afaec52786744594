"""Registry of theorem suites and the trial runner."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .. import conics as cn
from .. import constructions as cs
from .. import operator4 as op4
from .. import orthology as og
from ..errors import GeometryError, NotABasis
from ..family import (
    LinearFamily,
    Triangle,
    degenerate_parameters,
    is_singular,
    spiral_center,
    triangle_at,
)
from ..numeric import (
    INF,
    Line,
    Vec2,
    as_scalar,
    collinear,
    eq,
    is_inexact,
    orthogonal,
    parallel,
    perp,
    same_point,
    vanishes,
)
from . import generators as gen
from .serialize import to_float, to_json


class UnknownSuite(KeyError):
    pass


@dataclass(frozen=True)
class TheoremCase:
    id: str
    claim: str
    trials: int
    check: Callable = field(repr=False, compare=False)


@dataclass
class Outcome:
    ok: bool
    instance: dict
    residuals: dict


REGISTRY: dict[str, TheoremCase] = {}


def suite(id: str, claim: str, trials: int):
    def register(fn):
        REGISTRY[id] = TheoremCase(id, claim, trials, fn)
        return fn

    return register


def _cast(obj, backend):
    return to_float(obj) if backend == "float" else obj


def _lift(t, like):
    """Parameter in the backend of ``like``."""
    if t is INF:
        return t
    return float(t) if is_inexact(*like) else as_scalar(t)


# --------------------------------------------------------------------------
# orthology relation


@suite("orthology-symmetry", "orthology is a symmetric relation", 1000)
def _orthology_symmetry(rng, backend, tol, ctx):
    T = gen.triangle(rng)
    Tp = gen.orthologic_partner(rng, T) if rng.random() < 0.5 else gen.triangle(rng)
    T, Tp = _cast((T, Tp), backend)
    ctx.update(T=T, Tp=Tp)
    fwd, back = og.is_orthologic(T, Tp, tol), og.is_orthologic(Tp, T, tol)
    return Outcome(fwd == back, {"T": T, "T'": Tp}, {"forward": fwd, "backward": back})


@suite("carnot-vector", "the six-distance sum equals twice b.c' - b'.c", 1000)
def _carnot_vector(rng, backend, tol, ctx):
    T, Tp = _cast((gen.triangle(rng), gen.triangle(rng)), backend)
    ctx.update(T=T, Tp=Tp)
    s = og.carnot_sum(T, Tp)
    f = og.orthology_form(T, Tp)
    return Outcome(eq(s, 2 * f, tol), {"T": T, "T'": Tp}, {"carnot": s, "twice_form": 2 * f})


@suite("degenerate-count", "a linear family has at most two degenerate members unless all are", 1000)
def _degenerate_count(rng, backend, tol, ctx):
    built = rng.random() < 0.25
    F = gen.degenerate_family(rng) if built else gen.random_family(rng)
    F = _cast(F, backend)
    ctx.update(F=F)
    rs = degenerate_parameters(F, tol)
    res = {"kind": rs.kind, "roots": list(rs.roots)}
    if built:
        return Outcome(rs.is_all, {"F": F, "built_degenerate": True}, res)
    ok = not rs.is_all and len(rs.roots) <= 2
    for t in rs.roots:
        P = F.pair_at(t)
        ok = ok and P.is_degenerate(tol)
    return Outcome(ok, {"F": F}, res)


@suite("family-criterion", "two orthologic members make every pair of members orthologic", 500)
def _family_criterion(rng, backend, tol, ctx):
    T0 = gen.triangle(rng)
    F = _cast(LinearFamily(T0, gen.orthologic_partner(rng, T0)), backend)
    ctx.update(F=F)
    forms = []
    ok = True
    for _ in range(5):
        s, t = _lift(gen.scalar(rng, 20, 7), F.T0.A), _lift(gen.scalar(rng, 20, 7), F.T0.A)
        Ts, Tt = triangle_at(F, s), triangle_at(F, t)
        forms.append(og.orthology_form(Ts, Tt))
        ok = ok and og.is_orthologic(Ts, Tt, tol)
    return Outcome(ok, {"F": F}, {"forms": forms})


def _carriers(F, tol):
    return [(t, d) for t, d in cn.degenerate_carriers(F, tol)]


@suite(
    "perpendicular-degenerates",
    "the two degenerate members of an orthologic family lie on perpendicular lines",
    500,
)
def _perpendicular_degenerates(rng, backend, tol, ctx):
    F = _cast(gen.orthologic_family(rng), backend)
    ctx.update(F=F)
    (t1, d1), (t2, d2) = _carriers(F, tol)
    phi = op4.operator_from_family(F, tol)
    pairs = op4.eigenpairs(phi, tol)
    ok = orthogonal(d1, d2, tol) and pairs != "all" and len(pairs) == 2
    if ok:
        e1, e2 = pairs[0].vector, pairs[1].vector
        ok = orthogonal(e1, e2, tol)
        # each carrier direction is an eigenvector
        ok = ok and all(any(parallel(d, e, tol) for e in (e1, e2)) for d in (d1, d2))
    return Outcome(
        ok,
        {"F": F},
        {"parameters": [t1, t2], "carrier_dot": d1.dot(d2), "eigen": [(p.value, p.vector) for p in pairs]},
    )


@suite("rideau", "the affine map between orthologic triangles exchanges their centers", 500)
def _rideau(rng, backend, tol, ctx):
    T = gen.triangle(rng)
    T, Tp = _cast((T, gen.orthologic_partner(rng, T)), backend)
    ctx.update(T=T, Tp=Tp)
    O1, O2 = og.orthology_center(T, Tp, tol), og.orthology_center(Tp, T, tol)
    return Outcome(og.rideau_check(T, Tp, tol), {"T": T, "T'": Tp}, {"O_TT'": O1, "O_T'T": O2})


@suite("maxwell", "harmonicity of triangles is symmetric", 500)
def _maxwell(rng, backend, tol, ctx):
    T = gen.triangle(rng)
    Tq = gen.orthologic_partner(rng, T)
    Tp = Triangle(*(perp(p) for p in Tq))
    T, Tp = _cast((T, Tp), backend)
    ctx.update(T=T, Tp=Tp)
    fwd, back = og.is_harmonic(T, Tp, tol), og.is_harmonic(Tp, T, tol)
    return Outcome(fwd and back, {"T": T, "T'": Tp}, {"forward": fwd, "backward": back})


# --------------------------------------------------------------------------
# centers along families


def _family_orthologic_to(rng):
    Tp = gen.triangle(rng)
    return LinearFamily(gen.orthologic_partner(rng, Tp), gen.orthologic_partner(rng, Tp)), Tp


@suite("center-line", "the center of T_t with respect to a fixed T' moves on a line", 300)
def _center_line(rng, backend, tol, ctx):
    F, Tp = _cast(_family_orthologic_to(rng), backend)
    ctx.update(F=F, Tp=Tp)
    centers = []
    for t in (0, 1, 2, 3):
        Tt = triangle_at(F, _lift(t, F.T0.A))
        centers.append(og.orthology_center(Tt, Tp, tol))
    ok = all(collinear(centers[0], centers[1], c, tol) for c in centers[2:])
    if not same_point(centers[0], centers[1], tol):
        L = Line.through(centers[0], centers[1])
        ok = ok and L.contains(centers[3], tol)
    return Outcome(ok, {"F": F, "T'": Tp}, {"centers": centers})


def _fixed_center(Tp, F, tol):
    """The common center when O_{T', T_t} does not move, else None."""
    centers = []
    for t in (0, 1, 2, -1, 3):
        Tt = triangle_at(F, _lift(t, F.T0.A))
        if not Tt.is_degenerate(tol):
            centers.append(og.orthology_center(Tp, Tt, tol))
    if len(centers) >= 3 and all(same_point(centers[0], c, tol) for c in centers[1:]):
        return centers[0]
    return None


@suite("center-conic", "the center of a fixed T' with respect to T_t moves on a conic through A', B', C'", 200)
def _center_conic(rng, backend, tol, ctx):
    orthologic = rng.random() < 0.5
    if orthologic:
        Tp, T0, T1 = gen.graph_family(rng, 3)
        F = LinearFamily(T0, T1)
    else:
        F, Tp = _family_orthologic_to(rng)
    F, Tp = _cast((F, Tp), backend)
    ctx.update(F=F, Tp=Tp)
    fixed = _fixed_center(Tp, F, tol)
    if fixed is not None:
        # the locus collapses to a point; every conic through it and A', B', C' carries it
        return Outcome(True, {"F": F, "T'": Tp, "orthologic_family": orthologic}, {"fixed_center": fixed})
    C = og.center_conic(Tp, F, tol=tol)
    kind = cn.classify(C, tol)
    ok = all(C.contains(p, tol) for p in Tp)
    if orthologic and not is_singular(F, tol):
        ok = ok and cn.is_rectangular(C, tol)
    return Outcome(ok, {"F": F, "T'": Tp, "orthologic_family": orthologic}, {"conic": C, "kind": kind.value})


def _member_param(rng, F, tol):
    roots = degenerate_parameters(F, tol).roots
    while True:
        lam = _lift(gen.scalar(rng, 10, 7), F.T0.A)
        if all(r is INF or not eq(lam, r, tol) for r in roots):
            return lam


@suite("gamma-coincidence", "the center locus of T_lam in an orthologic family is the hyperbola gamma_lam", 200)
def _gamma_coincidence(rng, backend, tol, ctx):
    F = _cast(gen.orthologic_family(rng), backend)
    ctx.update(F=F)
    lam = _member_param(rng, F, tol)
    C1 = og.center_conic(triangle_at(F, lam), F, tol=tol)
    C2 = cn.gamma_hyperbola(F, lam, tol)
    return Outcome(C1.proportional(C2, tol), {"F": F, "lambda": lam}, {"center_conic": C1, "gamma": C2})


def _two_distinct(points, tol):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if not same_point(points[i], points[j], tol):
                return points[i], points[j]
    return None


@suite("sondat", "perspector and both centers are collinear on a perpendicular to the perspective axis", 200)
def _sondat(rng, backend, tol, ctx):
    T, Tp, P = _cast(gen.perspective_orthologic_pair(rng), backend)
    ctx.update(T=T, Tp=Tp, P=P)
    H = og.perspector(T, Tp, tol)
    O1, O2 = og.orthology_center(T, Tp, tol), og.orthology_center(Tp, T, tol)
    axis = og.desargues_axis(T, Tp, tol)
    ok = same_point(H, P, tol) and collinear(H, O1, O2, tol) and not axis.is_infinite(tol)
    pair = _two_distinct([H, O1, O2], tol)
    if pair is not None:
        L = Line.through(*pair)
        ok = ok and orthogonal(L.direction(), axis.direction(), tol)
    return Outcome(ok, {"T": T, "T'": Tp}, {"H": H, "O_TT'": O1, "O_T'T": O2, "axis": axis})


@suite("epsilon-tangency", "in a nonconcurrent orthologic family the line of the two centers touches epsilon", 100)
def _epsilon_tangency(rng, backend, tol, ctx):
    while True:
        F = gen.orthologic_family(rng)
        if not og.family_is_concurrent(F):
            break
    F = _cast(F, backend)
    ctx.update(F=F)
    eps = cn.epsilon_envelope(F, tol)
    lam = _member_param(rng, F, tol)
    while True:
        mu = _member_param(rng, F, tol)
        if not eq(mu, lam, tol):
            break
    Tl, Tm = triangle_at(F, lam), triangle_at(F, mu)
    O1, O2 = og.orthology_center(Tl, Tm, tol), og.orthology_center(Tm, Tl, tol)
    if same_point(O1, O2, tol):
        return Outcome(True, {"F": F, "lambda": lam, "mu": mu}, {"skipped": "centers coincide"})
    L = Line.through(O1, O2)
    return Outcome(
        cn.is_tangent(L, eps, tol),
        {"F": F, "lambda": lam, "mu": mu},
        {"epsilon": eps, "epsilon_kind": cn.classify(eps, tol).value, "line": L},
    )


# --------------------------------------------------------------------------
# the R^4 model


def _param_of_class(F, e: Vec2, tol):
    """Parameter t with ``b_t`` parallel to ``e`` (``INF`` when ``b_1 - b_0`` is)."""
    b0 = F.T0.pair().b
    db = F.T1.pair().b - b0
    den = db.cross(e)
    if vanishes(den, tol=tol):
        return INF
    return -b0.cross(e) / den


def _same_param(s, t, tol):
    if s is INF or t is INF:
        return s is t
    return eq(s, t, tol)


@suite("lagrangian-roundtrip", "orthologic family, self-adjoint operator and Lagrangian plane coincide", 1000)
def _lagrangian_roundtrip(rng, backend, tol, ctx):
    r = rng.random()
    if r < 0.4:
        T0 = gen.triangle(rng)
        F = LinearFamily(T0, gen.orthologic_partner(rng, T0))
    elif r < 0.6:
        F = gen.bc_singular_family(rng)
    else:
        F = gen.random_family(rng)
    F = _cast(F, backend)
    ctx.update(F=F)
    orth = og.is_orthologic_family(F, tol)
    lag = op4.is_lagrangian(op4.family_plane(F, tol), tol)
    res = {"orthologic": orth, "lagrangian": lag}
    ok = orth == lag
    try:
        phi = op4.operator_from_family(F, tol)
    except NotABasis:
        res["operator"] = "not a basis"
        return Outcome(ok, {"F": F}, res)
    sa = op4.is_self_adjoint(phi, tol)
    res.update(operator=phi, self_adjoint=sa)
    ok = ok and sa == orth
    pairs = op4.eigenpairs(phi, tol)
    rs = degenerate_parameters(F, tol)
    if pairs == "all":
        ok = ok and rs.is_all
    else:
        params = [_param_of_class(F, p.vector, tol) for p in pairs]
        res["eigen_parameters"] = params
        res["degenerate_parameters"] = list(rs.roots)
        ok = ok and len(params) == len(rs.roots)
        ok = ok and all(any(_same_param(p, r, tol) for r in rs.roots) for p in params)
        has_one = any(eq(p.value, 1, tol) for p in pairs)
        bc = "BC" in is_singular(F, tol)
        res["eigenvalue_one"], res["bc_singular"] = has_one, bc
        ok = ok and has_one == bc
    return Outcome(ok, {"F": F}, res)


# --------------------------------------------------------------------------
# named problems


@suite("pedal-criterion", "pedal triangles of P0, P1 are orthologic iff P0, P1, O are collinear", 200)
def _pedal_criterion(rng, backend, tol, ctx):
    R = gen.triangle(rng)
    P0 = gen.point(rng)
    forward = rng.random() < 0.5
    P1 = gen.collinear_with_circumcenter(rng, R, P0) if forward else gen.point(rng)
    R, P0, P1 = _cast((R, P0, P1), backend)
    ctx.update(R=R, P0=P0, P1=P1)
    O = cs.circumcenter(R)
    orth = og.is_orthologic(cs.pedal_triangle(P0, R), cs.pedal_triangle(P1, R), tol)
    col = collinear(P0, P1, O, tol)
    return Outcome(orth == col, {"R": R, "P0": P0, "P1": P1}, {"orthologic": orth, "collinear_with_O": col})


@suite("emelyanov", "incircle and excircle contact triangles are orthologic", 200)
def _emelyanov(rng, backend, tol, ctx):
    R, I, r = gen.rational_incircle_triangle(rng)
    R = _cast(R, backend)
    ctx.update(R=R)
    K, X = cs.contact_triangles(R)
    A, B, C = R
    mids = [(B + C) / 2, (C + A) / 2, (A + B) / 2]
    sym = all(same_point((k + x) / 2, m, tol) for k, x, m in zip(K, X, mids))
    orth = og.is_orthologic(K, X, tol)
    return Outcome(sym and orth, {"R": R}, {"midpoint_symmetry": sym, "form": og.orthology_form(K, X)})


@suite("altitude-midpoints", "altitude feet are orthologic to the midpoints of the altitudes", 200)
def _altitude_midpoints(rng, backend, tol, ctx):
    R = _cast(gen.triangle(rng), backend)
    ctx.update(R=R)
    D, M = cs.altitude_configuration(R)
    member = triangle_at(LinearFamily(R, M), _lift(2, R.A))
    ok = og.is_orthologic(R, M, tol) and og.is_orthologic(D, M, tol)
    ok = ok and all(same_point(p, q, tol) for p, q in zip(member, D))
    return Outcome(ok, {"R": R}, {"form_RM": og.orthology_form(R, M), "form_DM": og.orthology_form(D, M)})


@suite("gergonnian-flies", "flies on the gergonnians are collinear twice, on perpendicular lines through I", 100)
def _gergonnian_flies(rng, backend, tol, ctx):
    R, I, r = gen.rational_incircle_triangle(rng)
    R, I = _cast((R, I), backend)
    ctx.update(R=R, I=I)
    K, _ = cs.contact_triangles(R)
    F = LinearFamily(R, K)
    (t1, d1), (t2, d2) = _carriers(F, tol)
    lines = [cn.carrier_line(F, t, tol) for t in (t1, t2)]
    ok = all(l.contains(I, tol) for l in lines) and orthogonal(d1, d2, tol)
    res = {"parameters": [t1, t2], "carrier_dot": d1.dot(d2)}
    if ok and t1 is not INF and t2 is not INF:
        m = og.common_center_correspondence(F, tol)
        for _ in range(2):
            lam = _member_param(rng, F, tol)
            mu = m(lam)
            if mu is INF or eq(lam, m.pole(), tol):
                continue
            Tl, Tm = triangle_at(F, lam), triangle_at(F, mu)
            ok = ok and same_point(og.orthology_center(Tl, Tm, tol), I, tol)
            ok = ok and same_point(og.orthology_center(Tm, Tl, tol), I, tol)
        res["moebius"] = list(m)
    return Outcome(ok, {"R": R}, res)


@suite("kiepert", "the Kiepert family's center conic passes through G and H; AA_{1/t} is perpendicular to B_tC_t", 200)
def _kiepert(rng, backend, tol, ctx):
    R = _cast(gen.triangle(rng), backend)
    ctx.update(R=R)
    F = cs.kiepert_family(R)
    C = og.center_conic(R, F, tol=tol)
    ok = C.contains(cs.centroid(R), tol) and C.contains(cs.orthocenter(R), tol)
    ok = ok and cn.is_rectangular(C, tol)
    dots = []
    for _ in range(3):
        t = _lift(gen.nonzero(rng, 10, 7), R.A)
        Tt, Ti = triangle_at(F, t), triangle_at(F, 1 / t)
        for i, (j, k) in enumerate(((1, 2), (2, 0), (0, 1))):
            d = (Ti[i] - R[i]).dot(Tt[k] - Tt[j])
            dots.append(d)
            ok = ok and orthogonal(Ti[i] - R[i], Tt[k] - Tt[j], tol)
    return Outcome(ok, {"R": R}, {"conic": C, "dots": dots})


@suite("flies-altitudes", "flies on the altitudes are collinear twice, on perpendicular lines", 200)
def _flies_altitudes(rng, backend, tol, ctx):
    F = _cast(gen.flies_on_altitudes(rng), backend)
    ctx.update(F=F)
    (t1, d1), (t2, d2) = _carriers(F, tol)
    ok = og.is_orthologic_family(F, tol) and orthogonal(d1, d2, tol)
    h = og.unique_h(F, tol)
    ok = ok and h is not INF and eq(h, 0, tol)
    return Outcome(ok, {"F": F}, {"parameters": [t1, t2], "carrier_dot": d1.dot(d2), "h": h})


@suite("focus-miquel", "the focus of the envelope parabola is the spiral center", 100)
def _focus_miquel(rng, backend, tol, ctx):
    A0, A1, B0, B1 = gen.nonsingular_pair(rng)
    C0 = gen.point(rng)
    F = LinearFamily(Triangle(A0, B0, C0), Triangle(A1, B1, C0))
    F = _cast(F, backend)
    ctx.update(F=F)
    E = cn.envelope_conic(F, "AB", tol=tol)
    focus = cn.parabola_focus(E, tol)
    M = spiral_center(F.T0.A, F.T1.A, F.T0.B, F.T1.B, tol)
    return Outcome(same_point(focus, M, tol), {"F": F}, {"focus": focus, "spiral_center": M, "envelope": E})


# --------------------------------------------------------------------------
# runner


def list_suites() -> list[TheoremCase]:
    return [REGISTRY[k] for k in sorted(REGISTRY)]


def run_trial(case: TheoremCase, seed: int, index: int, backend: str, tol) -> Outcome:
    rng = gen.trial_rng(case.id, seed, index)
    ctx: dict = {}
    try:
        return case.check(rng, backend, tol, ctx)
    except (GeometryError, ZeroDivisionError) as exc:
        return Outcome(False, ctx, {"error": f"{type(exc).__name__}: {exc}"})


def run_suite(id: str, trials: int | None = None, seed: int = 0, backend: str = "exact", tol=None, timing: bool = True) -> dict:
    """Run ``trials`` seeded trials and return the JSON-ready report."""
    if id not in REGISTRY:
        raise UnknownSuite(id)
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}")
    case = REGISTRY[id]
    trials = case.trials if trials is None else trials
    if backend == "exact":
        tol = None
    elif tol is None:
        from ..numeric import DEFAULT_TOL

        tol = DEFAULT_TOL
    start = time.perf_counter()
    passes = 0
    failures = []
    for i in range(trials):
        out = run_trial(case, seed, i, backend, tol)
        if out.ok:
            passes += 1
        else:
            failures.append({"index": i, "instance": to_json(out.instance), "residuals": to_json(out.residuals)})
    report = {
        "suite": id,
        "seed": seed,
        "trials": trials,
        "backend": backend,
        "tol": tol,
        "passes": passes,
        "failures": failures,
    }
    report["wall_ms"] = round((time.perf_counter() - start) * 1000, 3) if timing else 0
    return report

