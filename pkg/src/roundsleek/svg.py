"""Static SVG pictures of spaces, balls and witnesses.

Spaces in the line are drawn on a number line; planar spaces as filled
regions, curves and point markers.  A ball is drawn as its intersection
with the space (the space redrawn inside a circular clip path) plus a
dashed (open) or solid (closed) outline.  Output is deterministic: fixed
viewport, fixed number formatting, elements in overlay order.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from . import regions as R
from .errors import UnsupportedDimension
from .intervals import Interval, IntervalUnion
from .numbers import BoundedReal, lift
from .points import Seq, format_point
from .space import EuclideanSpace, IntervalSpace, MetricSpace

SIZE = 480
CAPTION = 40
PAD = 24

REGION_STYLE = ("#cfe3f5", 'stroke="#1f5f99" stroke-width="2"')  # area fill, stroke attributes
BALL_STYLE = ("#f7c58a", 'stroke="#d9730d" stroke-width="3"')
Box = Tuple[float, float, float, float]  # x0, y0, x1, y1 in world coordinates


def _f(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


class _Frame:
    """World-to-pixel map of a square window."""

    def __init__(self, box: Box):
        x0, y0, x1, y1 = box
        side = max(x1 - x0, y1 - y0, 1e-9)
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        self.box = (cx - side / 2, cy - side / 2, cx + side / 2, cy + side / 2)
        self.k = (SIZE - 2 * PAD) / side

    def x(self, v) -> str:
        return _f(PAD + (float(v) - self.box[0]) * self.k)

    def y(self, v) -> str:
        return _f(PAD + (self.box[3] - float(v)) * self.k)

    def len(self, v) -> str:
        return _f(float(v) * self.k)


# the drawable part of a space

def _planar_region(space: MetricSpace):
    if isinstance(space, EuclideanSpace) and space.dim == 2:
        return space.region
    ambient = getattr(space, "ambient", None)
    if isinstance(ambient, EuclideanSpace) and ambient.dim == 2:
        return space.region
    return None


def _line_union(space: MetricSpace) -> Optional[IntervalUnion]:
    while hasattr(space, "inner"):
        space = space.inner
    return space.union if isinstance(space, IntervalSpace) else None


def _projection(space: MetricSpace):
    """``(region, to_xy)`` for the first two coordinates of a series product."""
    from .constructions import ProductDSpace

    if not isinstance(space, ProductDSpace):
        return None
    spaces = list(space.factors[:2])
    if len(spaces) < 2 and space.tail is not None:
        spaces.append(space.tail)
    unions = [_line_union(f) for f in spaces]
    if len(unions) < 2 or any(u is None for u in unions):
        return None

    def to_xy(p):
        return (space.coord(p, 0), space.coord(p, 1)) if isinstance(p, Seq) else None

    return R.ProductRegion(unions), to_xy


# planar shapes

def _polygon(frame: _Frame, poly, style) -> str:
    pts = " ".join(f"{frame.x(p[0])},{frame.y(p[1])}" for p in poly)
    if len(poly) == 1:
        return _dot(frame, poly[0], style)
    if len(poly) == 2:
        return f'<polyline points="{pts}" fill="none" {style[1]}/>'
    return f'<polygon points="{pts}" fill="{style[0]}" {style[1]}/>'


def _dot(frame: _Frame, p, style, hollow: bool = False) -> str:
    fill = "white" if hollow else style[0]
    return f'<circle cx="{frame.x(p[0])}" cy="{frame.y(p[1])}" r="4" fill="{fill}" {style[1]}/>'


def _view_polygon(frame: _Frame, planes) -> list:
    x0, y0, x1, y1 = frame.box
    half = Fraction(max(x1 - x0, y1 - y0)).limit_denominator(1 << 20)
    center = (Fraction((x0 + x1) / 2).limit_denominator(1 << 20), Fraction((y0 + y1) / 2).limit_denominator(1 << 20))
    return R.clip_polygon(R.box(center, half), planes)


def _clamp(v: Fraction, lo: float, hi: float) -> float:
    return min(max(float(v), lo), hi)


def _rect(frame: _Frame, a: Interval, b: Interval, style) -> str:
    x0, y0, x1, y1 = frame.box
    ax = (_clamp(a.lo, x0, x1) if a.lo is not None else x0, _clamp(a.hi, x0, x1) if a.hi is not None else x1)
    by = (_clamp(b.lo, y0, y1) if b.lo is not None else y0, _clamp(b.hi, y0, y1) if b.hi is not None else y1)
    corners = [(ax[0], by[0]), (ax[1], by[0]), (ax[1], by[1]), (ax[0], by[1])]
    unique = list(dict.fromkeys(corners))
    return _polygon(frame, unique, style)


def _arc_path(frame: _Frame, arc: R.CircleArc, style) -> str:
    dash = "" if arc.closed else ' stroke-dasharray="6 3"'
    if arc.full:
        return (f'<circle cx="{frame.x(arc.center[0])}" cy="{frame.y(arc.center[1])}" '
                f'r="{frame.len(arc.radius)}" fill="none" {style[1]}{dash}/>')
    a = math.atan2(float(arc.start[1]), float(arc.start[0]))
    b = math.atan2(float(arc.end[1]), float(arc.end[0]))
    while b <= a:
        b += 2 * math.pi
    r = float(arc.radius)
    cx, cy = float(arc.center[0]), float(arc.center[1])
    p = (cx + r * math.cos(a), cy + r * math.sin(a))
    q = (cx + r * math.cos(b), cy + r * math.sin(b))
    large = 1 if b - a > math.pi else 0
    # angles run backwards on screen once y is flipped, hence sweep flag 0
    return (f'<path d="M {frame.x(p[0])} {frame.y(p[1])} A {frame.len(r)} {frame.len(r)} 0 {large} 0 '
            f'{frame.x(q[0])} {frame.y(q[1])}" fill="none" {style[1]}{dash}/>')


class _Ids:
    def __init__(self):
        self.n = 0

    def next(self, stem: str) -> str:
        self.n += 1
        return f"{stem}{self.n}"


def _shapes(region, frame: _Frame, style, ids: _Ids, defs: List[str]) -> List[str]:
    finite = region.finite_points()
    if finite is not None and not isinstance(region, R.ProductRegion):
        return [_dot(frame, p, style) for p in finite]
    if isinstance(region, R.FullSpace):
        x0, y0, x1, y1 = frame.box
        return [_polygon(frame, [(x0, y0), (x1, y0), (x1, y1), (x0, y1)], style)]
    if isinstance(region, R.Disk):
        dash = "" if region.closed else ' stroke-dasharray="6 3"'
        return [f'<circle cx="{frame.x(region.center[0])}" cy="{frame.y(region.center[1])}" '
                f'r="{frame.len(region.radius)}" fill="{style[0]}" {style[1]}{dash}/>']
    if isinstance(region, R.CircleArc):
        return [_arc_path(frame, region, style)]
    if isinstance(region, R.Segment):
        dash = "" if region.closed else ' stroke-dasharray="6 3"'
        out = [f'<line x1="{frame.x(region.p[0])}" y1="{frame.y(region.p[1])}" '
               f'x2="{frame.x(region.q[0])}" y2="{frame.y(region.q[1])}" {style[1]}{dash}/>']
        out += [_dot(frame, e, style, hollow=not region.closed) for e in (region.p, region.q)]
        return out
    if isinstance(region, R.ProductRegion) and all(isinstance(f, IntervalUnion) for f in region.factors):
        a, b = region.factors
        return [_rect(frame, ia, ib, style) for ia in a.intervals for ib in b.intervals]
    if isinstance(region, R.UnionRegion):
        return [s for m in region.members for s in _shapes(m, frame, style, ids, defs)]
    pieces = region.pieces()
    if pieces is not None:
        return [_polygon(frame, poly, style) for poly in (_view_polygon(frame, pl) for pl in pieces) if poly]
    if isinstance(region, R.IntersectionRegion):
        # draw the curved members clipped to the polygonal ones
        flat = [m for m in region.members if m.pieces() is not None]
        curved = [m for m in region.members if m.pieces() is None]
        inner = [s for m in curved for s in _shapes(m, frame, style, ids, defs)]
        for m in flat:
            cid = ids.next("clip")
            polys = [_polygon(frame, p, ("black", "")) for p in (_view_polygon(frame, pl) for pl in m.pieces()) if len(p) > 2]
            defs.append(f'<clipPath id="{cid}">{"".join(polys)}</clipPath>')
            inner = [f'<g clip-path="url(#{cid})">{"".join(inner)}</g>']
        return inner
    raise UnsupportedDimension(f"cannot draw region {type(region).__name__}")


# overlays

def _ball_of(overlay):
    """``(center, radius, closed)`` for a ball overlay, or ``None``."""
    from .checkers import WitnessKind, WitnessRecord
    from .topology import BallKind, BallQuery

    if isinstance(overlay, BallQuery):
        return overlay.center, overlay.radius, overlay.kind is BallKind.CLOSED
    if isinstance(overlay, dict) and "center" in overlay:
        return overlay["center"], lift(overlay["radius"]), overlay.get("kind", "open") == "closed"
    if isinstance(overlay, WitnessRecord) and "x" in overlay.points and overlay.kind in (
            WitnessKind.MIN_ON_OPEN_SET, WitnessKind.MAX_ON_OPEN_SET):
        return overlay.points["x"], overlay.value, overlay.kind is WitnessKind.MAX_ON_OPEN_SET
    return None


def _marks(overlay) -> List[Tuple[str, object]]:
    from .checkers import WitnessRecord

    if isinstance(overlay, WitnessRecord):
        return sorted(overlay.points.items(), key=lambda kv: kv[0])
    return []


def _radius(r: BoundedReal) -> float:
    return float(lift(r).midpoint())


def _box_for(points_xy, radii, fallback: Box) -> Box:
    xs, ys = [], []
    for (x, y), r in zip(points_xy, radii):
        xs += [x - r, x + r]
        ys += [y - r, y + r]
    if not xs:
        return fallback
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    mx = max(x1 - x0, y1 - y0) * 0.15 + 0.5
    return (x0 - mx, y0 - mx, x1 + mx, y1 + mx)


def _label(frame: _Frame, p, name: str) -> str:
    return (f'<circle cx="{frame.x(p[0])}" cy="{frame.y(p[1])}" r="5" fill="#b00020" stroke="black"/>'
            f'<text x="{_f(float(frame.x(p[0])) + 8)}" y="{_f(float(frame.y(p[1])) - 8)}" '
            f'font-size="14" font-family="sans-serif">{escape(name)}</text>')


def _document(body: List[str], defs: List[str], caption: str) -> str:
    head = (f'<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE + CAPTION}" '
            f'viewBox="0 0 {SIZE} {SIZE + CAPTION}">\n')
    out = [head, f'<rect x="0" y="0" width="{SIZE}" height="{SIZE + CAPTION}" fill="white"/>\n']
    if defs:
        out.append("<defs>" + "".join(defs) + "</defs>\n")
    out += [line + "\n" for line in body]
    out.append(f'<text x="{PAD}" y="{SIZE + CAPTION // 2}" font-size="13" font-family="sans-serif">'
               f'{escape(caption)}</text>\n')
    out.append("</svg>\n")
    return "".join(out)


def render_svg(space: MetricSpace, overlays: Sequence = (), caption: Optional[str] = None) -> str:
    """SVG text for ``space`` with balls and witness points drawn on top.

    ``overlays`` holds :class:`~roundsleek.topology.BallQuery` objects,
    witness records, or dicts ``{"center", "radius", "kind"}``.
    """
    union = space.union if isinstance(space, IntervalSpace) else None
    if union is not None:
        return _render_line(space, union, overlays, caption)
    region = _planar_region(space)
    to_xy = lambda p: p if isinstance(p, tuple) and len(p) == 2 else None  # noqa: E731
    note = ""
    if region is None:
        proj = _projection(space)
        if proj is None:
            raise UnsupportedDimension(f"{space.name} does not embed in the line or the plane")
        region, to_xy = proj
        note = " (projection onto the first two coordinates)"
    balls = [b for b in (_ball_of(o) for o in overlays) if b is not None]
    marks = [(n, to_xy(p)) for o in overlays for n, p in _marks(o)]
    marks = [(n, p) for n, p in marks if p is not None]
    centers = [(to_xy(c), _radius(r)) for c, r, _ in balls]
    centers = [(c, r) for c, r in centers if c is not None]
    anchors = [(float(c[0]), float(c[1])) for c, _ in centers] + [(float(p[0]), float(p[1])) for _, p in marks]
    specials = [to_xy(p) for p in space.special_points()[:8]]
    anchors += [(float(p[0]), float(p[1])) for p in specials if p is not None]
    radii = [r for _, r in centers] + [0.0] * (len(anchors) - len(centers))
    frame = _Frame(_box_for(anchors, radii, (-2.5, -2.5, 2.5, 2.5)))
    ids, defs = _Ids(), []
    body = _shapes(region, frame, REGION_STYLE, ids, defs)
    for c, r, closed in balls:
        c = to_xy(c)
        if c is None or note:
            continue  # series-product balls are not Euclidean discs
        cid = ids.next("ball")
        rr = frame.len(_radius(r))
        defs.append(f'<clipPath id="{cid}"><circle cx="{frame.x(c[0])}" cy="{frame.y(c[1])}" r="{rr}"/></clipPath>')
        body.append(f'<g clip-path="url(#{cid})">' + "".join(_shapes(region, frame, BALL_STYLE, ids, defs)) + "</g>")
        dash = "" if closed else ' stroke-dasharray="8 4"'
        body.append(f'<circle cx="{frame.x(c[0])}" cy="{frame.y(c[1])}" r="{rr}" fill="none" stroke="#d9730d" '
                    f'stroke-width="1.5"{dash}/>')
        body.append(f'<circle cx="{frame.x(c[0])}" cy="{frame.y(c[1])}" r="3" fill="#d9730d"/>')
        # boundary contacts vanish under clipping; the ball oracle names them
        desc = space.ball_oracle(c, r) if closed and space.ball_oracle is not None else None
        for p in getattr(desc, "isolated_points", lambda: [])():
            body.append(_dot(frame, p, BALL_STYLE))
    body += [_label(frame, p, n) for n, p in marks]
    text = caption if caption is not None else space.name
    return _document(body, defs, text + note)


# the number line

def _render_line(space: MetricSpace, union: IntervalUnion, overlays, caption) -> str:
    balls = [b for b in (_ball_of(o) for o in overlays) if b is not None]
    marks = [(n, p) for o in overlays for n, p in _marks(o) if isinstance(p, Fraction)]
    values = [float(e) for e in union.endpoints()]
    for c, r, _ in balls:
        values += [float(c) - _radius(r), float(c) + _radius(r)]
    values += [float(p) for _, p in marks]
    if not values:
        values = [-1.0, 1.0]
    lo, hi = min(values), max(values)
    span = max(hi - lo, 1.0)
    lo, hi = lo - 0.2 * span, hi + 0.2 * span
    k = (SIZE - 2 * PAD) / (hi - lo)

    def x(v) -> str:
        return _f(PAD + (float(v) - lo) * k)

    axis_y, band_y = SIZE // 2, SIZE // 2 - 40
    body = [f'<line x1="{PAD}" y1="{axis_y}" x2="{SIZE - PAD}" y2="{axis_y}" stroke="#999" stroke-width="1"/>']

    def draw(u: IntervalUnion, y: int, color: str) -> None:
        for iv in u.intervals:
            a = lo if iv.lo is None else float(iv.lo)
            b = hi if iv.hi is None else float(iv.hi)
            if iv.is_singleton:
                body.append(f'<circle cx="{x(a)}" cy="{y}" r="5" fill="{color}"/>')
                continue
            body.append(f'<line x1="{x(a)}" y1="{y}" x2="{x(b)}" y2="{y}" stroke="{color}" stroke-width="6"/>')
            for end, closed in ((iv.lo, iv.lo_closed), (iv.hi, iv.hi_closed)):
                if end is not None:
                    fill = color if closed else "white"
                    body.append(f'<circle cx="{x(end)}" cy="{y}" r="5" fill="{fill}" stroke="{color}" stroke-width="2"/>')

    draw(union, axis_y, "#1f5f99")
    for c, r, closed in balls:
        rad = Fraction(lift(r).midpoint())
        ball = IntervalUnion([Interval(c - rad, c + rad, closed, closed)]).intersect(union)
        draw(ball, band_y, "#d9730d")
        body.append(f'<line x1="{x(c)}" y1="{band_y - 12}" x2="{x(c)}" y2="{band_y + 12}" stroke="#d9730d"/>')
    for n, p in marks:
        body.append(f'<circle cx="{x(p)}" cy="{axis_y}" r="4" fill="#b00020" stroke="black"/>')
        body.append(f'<text x="{x(p)}" y="{axis_y + 24}" font-size="14" font-family="sans-serif" '
                    f'text-anchor="middle">{escape(n)}={escape(format_point(p))}</text>')
    for v in sorted({math.floor(lo) + i for i in range(int(hi - lo) + 2)}):
        if lo <= v <= hi and (hi - lo) <= 40:
            body.append(f'<text x="{x(v)}" y="{axis_y + 44}" font-size="11" font-family="sans-serif" '
                        f'text-anchor="middle" fill="#666">{v}</text>')
    text = caption if caption is not None else space.name
    return _document(body, [], text)


__all__ = ["render_svg"]
