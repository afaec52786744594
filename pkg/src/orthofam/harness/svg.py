"""Deterministic SVG rendering of evaluated scenes.

Coordinates are converted to floats, fitted into an 800x800 viewport with
a uniform scale and a 10% margin, and printed with two decimals so the
output is byte-stable.  Conics are drawn as adaptively refined polylines
from a principal-axes parametrization, clipped to the visible window.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from ..conics import Conic
from ..family import LinearFamily, Triangle, VectorPair
from ..numeric import HPoint, Line, Vec2
from .evaluate import OPS, SceneResult, evaluate
from .scene import SceneDoc
from .serialize import to_float

WIDTH = HEIGHT = 800
MARGIN = 0.10
FAMILY_SAMPLES = (0.0, 0.25, 0.5, 0.75, 1.0)
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
CURVE_TOL_PX = 0.25
MAX_DEPTH = 10


def _num(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


# --------------------------------------------------------------------------
# drawables


@dataclass
class _Items:
    points: list = field(default_factory=list)  # finite world points, for the bounding box
    elements: list = field(default_factory=list)  # (kind, payload, color, label)

    def add(self, kind, payload, color, label=""):
        self.elements.append((kind, payload, color, label))


def _finite(p) -> Vec2 | None:
    if isinstance(p, HPoint):
        if abs(p.w) <= 1e-12 * max(abs(p.x), abs(p.y), 1e-300):
            return None
        return Vec2(p.x / p.w, p.y / p.w)
    return p


def _collect(res: SceneResult) -> _Items:
    items = _Items()
    color = 0

    def next_color():
        nonlocal color
        c = PALETTE[color % len(PALETTE)]
        color += 1
        return c

    def add_value(value, label, col):
        if isinstance(value, (Vec2, HPoint)):
            p = _finite(value)
            if p is not None:
                items.points.append(p)
                items.add("point", p, col, label)
        elif isinstance(value, Triangle):
            items.points.extend(value)
            items.add("triangle", value, col, label)
        elif isinstance(value, LinearFamily):
            for t in FAMILY_SAMPLES:
                T = Triangle(*(p0 + (p1 - p0) * t for p0, p1 in zip(value.T0, value.T1)))
                items.points.extend(T)
                items.add("member", T, col, label if t == 0.0 else "")
        elif isinstance(value, Line):
            items.add("line", value, col, label)
        elif isinstance(value, Conic):
            items.add("conic", value, col, label)

    for name, (_, value) in res.objects.items():
        add_value(to_float(value), name, next_color())
    for q in res.queries:
        value = to_float(q.value)
        if not isinstance(value, (Vec2, HPoint, Triangle, LinearFamily, Line, Conic)):
            continue
        col = next_color()
        op = OPS[q.query.op]
        if op.center and isinstance(value, (Vec2, HPoint)):
            c = _finite(value)
            if c is None:
                continue
            src = to_float(q.args[0])
            for v in src:
                items.add("perp", (v, c), col)
            items.points.append(c)
            items.add("center", c, col, q.query.op)
        elif isinstance(value, (Vec2, HPoint)):
            c = _finite(value)
            if c is not None:
                items.points.append(c)
                items.add("center", c, col, q.query.op)
        else:
            add_value(value, q.query.op, col)
    return items


# --------------------------------------------------------------------------
# viewport


class View:
    def __init__(self, points):
        pts = [p for p in points if math.isfinite(p.x) and math.isfinite(p.y)]
        if pts:
            xmin, xmax = min(p.x for p in pts), max(p.x for p in pts)
            ymin, ymax = min(p.y for p in pts), max(p.y for p in pts)
        else:
            xmin, xmax, ymin, ymax = -1.0, 1.0, -1.0, 1.0
        w, h = xmax - xmin, ymax - ymin
        span = max(w, h)
        if span == 0:
            span = w = h = 2.0
            xmin, ymin = xmin - 1, ymin - 1
        w, h = max(w, span * 1e-6), max(h, span * 1e-6)
        inner = 1 - 2 * MARGIN
        self.scale = min(WIDTH * inner / w, HEIGHT * inner / h)
        self.cx, self.cy = xmin + (xmax - xmin) / 2, ymin + (ymax - ymin) / 2
        hw, hh = WIDTH / (2 * self.scale), HEIGHT / (2 * self.scale)
        self.window = (self.cx - hw, self.cx + hw, self.cy - hh, self.cy + hh)
        self.radius = math.hypot(hw, hh)

    def px(self, p) -> tuple[float, float]:
        return (WIDTH / 2 + (p[0] - self.cx) * self.scale, HEIGHT / 2 - (p[1] - self.cy) * self.scale)

    def fmt(self, p) -> str:
        x, y = self.px(p)
        return f"{_num(x)} {_num(y)}"

    def clip(self, p, q, pad: float = 0.02):
        """Liang-Barsky clip of the segment ``pq`` to the slightly enlarged window."""
        x0, x1, y0, y1 = self.window
        ex, ey = (x1 - x0) * pad, (y1 - y0) * pad
        x0, x1, y0, y1 = x0 - ex, x1 + ex, y0 - ey, y1 + ey
        dx, dy = q[0] - p[0], q[1] - p[1]
        lo, hi = 0.0, 1.0
        for pk, qk in ((-dx, p[0] - x0), (dx, x1 - p[0]), (-dy, p[1] - y0), (dy, y1 - p[1])):
            if pk == 0:
                if qk < 0:
                    return None
                continue
            r = qk / pk
            if pk < 0:
                lo = max(lo, r)
            else:
                hi = min(hi, r)
            if lo > hi:
                return None
        return (p[0] + lo * dx, p[1] + lo * dy), (p[0] + hi * dx, p[1] + hi * dy)

    def line_segment(self, a: float, b: float, c: float):
        """Visible part of ``a x + b y + c = 0``."""
        n2 = a * a + b * b
        if n2 == 0:
            return None
        k = (a * self.cx + b * self.cy + c) / n2
        p = (self.cx - a * k, self.cy - b * k)
        n = math.sqrt(n2)
        d = (-b / n * 2 * self.radius, a / n * 2 * self.radius)
        return self.clip((p[0] - d[0], p[1] - d[1]), (p[0] + d[0], p[1] + d[1]))


# --------------------------------------------------------------------------
# conics


def _sample(fn, s0: float, s1: float, view: View, pieces: int = 48) -> list:
    """Adaptive polyline of the curve ``fn`` on ``[s0, s1]``."""
    tol = CURVE_TOL_PX / view.scale
    out = [fn(s0)]

    def refine(a, pa, b, pb, depth):
        m = (a + b) / 2
        pm = fn(m)
        mx, my = (pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2
        if depth < MAX_DEPTH and math.hypot(pm[0] - mx, pm[1] - my) > tol:
            refine(a, pa, m, pm, depth + 1)
            refine(m, pm, b, pb, depth + 1)
        else:
            out.append(pb)

    step = (s1 - s0) / pieces
    prev_s, prev_p = s0, out[0]
    for i in range(1, pieces + 1):
        s = s0 + step * i
        p = fn(s)
        refine(prev_s, prev_p, s, p, 0)
        prev_s, prev_p = s, p
    return out


def conic_polylines(C: Conic, view: View) -> list:
    """World-coordinate polylines (lists of ``(x, y)``) covering the visible real locus."""
    a, b, c, d, e, f = (float(v) for v in C)
    m = max(abs(a), abs(b), abs(c), abs(d), abs(e), abs(f))
    if m == 0:
        return []
    a, b, c, d, e, f = (v / m for v in (a, b, c, d, e, f))
    th = 0.5 * math.atan2(b, a - c)
    co, si = math.cos(th), math.sin(th)
    l1 = a * co * co + b * co * si + c * si * si
    l2 = a * si * si - b * si * co + c * co * co
    D = d * co + e * si
    E = -d * si + e * co

    def world(u, v):
        return (co * u - si * v, si * u + co * v)

    def line_uv(pa, pb, pc):
        # pa u + pb v + pc = 0 in rotated coordinates
        return [list(seg) for seg in [view.line_segment(pa * co - pb * si, pa * si + pb * co, pc)] if seg]

    uc = co * view.cx + si * view.cy
    vc = -si * view.cx + co * view.cy
    R = view.radius * 1.05
    eps = 1e-9
    quad = max(abs(a), abs(b), abs(c))
    z1, z2 = abs(l1) <= eps * max(quad, 1e-300), abs(l2) <= eps * max(quad, 1e-300)
    if quad <= eps:
        return line_uv(D, E, f)
    if not z1 and not z2:
        u0, v0 = -D / (2 * l1), -E / (2 * l2)
        Fp = f - l1 * u0 * u0 - l2 * v0 * v0
        if abs(Fp) <= eps * max(1.0, abs(f), abs(l1 * u0 * u0), abs(l2 * v0 * v0)):
            Fp = 0.0
        if l1 * l2 > 0:
            if Fp == 0 or -Fp / l1 < 0:
                return []
            A, B = math.sqrt(-Fp / l1), math.sqrt(-Fp / l2)
            return [_sample(lambda s: world(u0 + A * math.cos(s), v0 + B * math.sin(s)), 0.0, 2 * math.pi, view)]
        if Fp == 0:
            k = math.sqrt(-l1 / l2)
            # lines V = +-k U through the center
            return line_uv(k, -1.0, -(k * u0 - v0)) + line_uv(k, 1.0, -(k * u0 + v0))
        big = R + math.hypot(u0 - uc, v0 - vc)
        if -Fp / l1 > 0:
            A, B = math.sqrt(-Fp / l1), math.sqrt(Fp / l2)
            S = math.asinh(big / min(A, B))
            return [
                _sample(lambda s, g=g: world(u0 + g * A * math.cosh(s), v0 + B * math.sinh(s)), -S, S, view)
                for g in (1.0, -1.0)
            ]
        A, B = math.sqrt(Fp / l1), math.sqrt(-Fp / l2)
        S = math.asinh(big / min(A, B))
        return [
            _sample(lambda s, g=g: world(u0 + A * math.sinh(s), v0 + g * B * math.cosh(s)), -S, S, view)
            for g in (1.0, -1.0)
        ]
    # exactly one vanishing eigenvalue: parabola or parallel lines
    if z1:
        mu, P, Q, wc, along_u = l2, D, E, vc, False
    else:
        mu, P, Q, wc, along_u = l1, E, D, uc, True

    def pt(z, w):
        return world(w, z) if along_u else world(z, w)

    if abs(P) > eps * max(1.0, abs(Q), abs(f)):
        return [_sample(lambda w: pt(-(mu * w * w + Q * w + f) / P, w), wc - R, wc + R, view)]
    disc = Q * Q - 4 * mu * f
    if disc < 0:
        return []
    roots = sorted({(-Q - math.sqrt(disc)) / (2 * mu), (-Q + math.sqrt(disc)) / (2 * mu)})
    out = []
    for w in roots:
        out += line_uv(1.0, 0.0, -w) if along_u else line_uv(0.0, 1.0, -w)
    return out


def _clipped_path(polylines, view: View) -> str:
    parts = []
    for poly in polylines:
        last = None
        for p, q in zip(poly, poly[1:]):
            seg = view.clip(p, q)
            if seg is None:
                last = None
                continue
            s, t = seg
            if last is None or last != s:
                parts.append("M " + view.fmt(s))
            parts.append("L " + view.fmt(t))
            last = t if t == q else None
    return " ".join(parts)


# --------------------------------------------------------------------------
# output


def _header() -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]


def _label(view: View, p, text: str, color: str) -> str:
    x, y = view.px(p)
    return (
        f'<text x="{_num(x + 6)}" y="{_num(y - 6)}" font-family="sans-serif" font-size="12" '
        f'fill="{color}">{escape(text)}</text>'
    )


def svg_from_result(res: SceneResult) -> str:
    items = _collect(res)
    view = View(items.points)
    lines = _header()
    for kind, payload, color, label in items.elements:
        if kind in ("triangle", "member"):
            pts = " ".join(view.fmt(p).replace(" ", ",") for p in payload)
            opacity = ' stroke-opacity="0.6"' if kind == "member" else ""
            lines.append(
                f'<polygon class="{kind}" points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"{opacity}/>'
            )
            if label:
                lines.append(_label(view, payload.A, label, color))
        elif kind == "line":
            seg = view.line_segment(*payload)
            if seg:
                (x1, y1), (x2, y2) = view.px(seg[0]), view.px(seg[1])
                lines.append(
                    f'<line class="line" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                    f'stroke="{color}" stroke-width="1"/>'
                )
        elif kind == "conic":
            d = _clipped_path(conic_polylines(payload, view), view)
            if d:
                lines.append(f'<path class="conic" d="{d}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        elif kind == "perp":
            (x1, y1), (x2, y2) = view.px(payload[0]), view.px(payload[1])
            lines.append(
                f'<line class="perp" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                f'stroke="{color}" stroke-width="1" stroke-dasharray="4 3"/>'
            )
        elif kind in ("point", "center"):
            x, y = view.px(payload)
            r = 3 if kind == "point" else 5
            fill = color if kind == "point" else "none"
            lines.append(
                f'<circle class="{kind}" cx="{_num(x)}" cy="{_num(y)}" r="{r}" fill="{fill}" stroke="{color}"/>'
            )
            if label:
                lines.append(_label(view, payload, label, color))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(doc: SceneDoc, out=None, backend: str = "exact", tol=None) -> bytes:
    """Evaluate ``doc`` and return the SVG bytes; also written to ``out`` (path or binary file) if given."""
    data = svg_from_result(evaluate(doc, backend, tol)).encode("utf-8")
    if out is not None:
        if hasattr(out, "write"):
            out.write(data)
        else:
            with open(out, "wb") as fh:
                fh.write(data)
    return data
