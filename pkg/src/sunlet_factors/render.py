"""DOT and SVG renderings of coverings.

Codomain arcs are drawn with arrowheads following the codomain orientation;
each sunlet copy gets one color, with cycle-image edges solid and ray-image
edges dashed. Output is byte-deterministic for identical inputs: vertices
and arcs are emitted in sorted order and all coordinates use fixed-width
formatting.
"""

from __future__ import annotations

import colorsys
import math

from .constructions import Covering
from .graph_core import Edge, normalize_edge
from .torus import TorusGrid

BASE_PALETTE = ("blue", "red", "green", "yellow", "purple", "navy", "orange", "black", "pink")

_GOLDEN = 0.6180339887498949


def default_palette(count: int) -> tuple[str, ...]:
    """The nine named colors, then evenly spread hex colors, deterministically."""
    colors = list(BASE_PALETTE[:count])
    i = 0
    while len(colors) < count:
        hue = (0.11 + i * _GOLDEN) % 1.0
        r, g, b = colorsys.hsv_to_rgb(hue, 0.65, 0.78)
        colors.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
        i += 1
    return tuple(colors)


def _resolve_palette(c: Covering, palette: tuple[str, ...] | None) -> tuple[str, ...]:
    if palette is None:
        return default_palette(c.domain.s)
    if len(palette) < c.domain.s:
        raise ValueError(f"palette has {len(palette)} colors but {c.domain.s} copies are drawn; need at least {c.domain.s}")
    return tuple(palette)


def edge_ownership(c: Covering) -> dict[Edge, tuple[int, bool]]:
    """Codomain edge -> (copy index, image of a cycle edge?).

    Rendering needs the edge map to be a bijection, which every valid
    covering here provides.
    """
    owner: dict[Edge, tuple[int, bool]] = {}
    for u, w in sorted(c.domain.graph.edges):
        a, b = c.vertex_map[u], c.vertex_map[w]
        if a == b or not c.codomain.graph.has_edge(a, b):
            raise ValueError(f"cannot render: domain edge ({u}, {w}) has no codomain edge image")
        e = normalize_edge(a, b)
        if e in owner:
            raise ValueError(f"cannot render: codomain edge {e} is covered more than once")
        is_cycle = c.domain.is_cycle_vertex(u) and c.domain.is_cycle_vertex(w)
        owner[e] = (c.domain.copy_of(u), is_cycle)
    if len(owner) != c.codomain.graph.size:
        raise ValueError("cannot render: some codomain edges are not covered")
    return owner


def _title(c: Covering) -> str:
    s, p = c.domain.s, c.domain.p
    copies = "copy" if s == 1 else "copies"
    return f"{c.theorem}: {s} sunlet {copies} (p={p}) onto C{c.codomain.p} x C{c.codomain.q}"


# ------------------------- DOT -------------------------


def to_dot(c: Covering, palette: tuple[str, ...] | None = None) -> str:
    """Directed DOT text of the covered grid, one color per sunlet copy."""
    colors = _resolve_palette(c, palette)
    owner = edge_ownership(c)
    grid = c.codomain
    lines = ["digraph covering {"]
    lines.append(f'  graph [labelloc=t, label="{_title(c)}"];')
    lines.append("  node [shape=circle, fontsize=10, width=0.4, fixedsize=true];")
    for v in range(grid.graph.order):
        x, y = grid.coords(v)
        lines.append(f'  v{v} [label="{x},{y}"];')
    for u, w in c.codomain_orientation.arcs:
        copy, is_cycle = owner[normalize_edge(u, w)]
        style = "solid" if is_cycle else "dashed"
        lines.append(f'  v{u} -> v{w} [color="{colors[copy]}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------- SVG -------------------------

_CELL = 64.0
_MARGIN = 64.0
_RING_START = 64.0
_RING_STEP = 52.0
_VERTEX_R = 9.0
_STUB = 0.42


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _marker_defs(colors: tuple[str, ...]) -> list[str]:
    parts = ["<defs>"]
    for i, color in enumerate(colors):
        parts.append(
            f'<marker id="arrow{i}" viewBox="0 0 10 10" refX="9" refY="5" '
            f'markerWidth="5.5" markerHeight="5.5" orient="auto-start-reverse">'
            f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{color}"/></marker>'
        )
    parts.append("</defs>")
    return parts


def _line(x1: float, y1: float, x2: float, y2: float, color: str, dashed: bool, marker: int | None) -> str:
    dash = ' stroke-dasharray="6 4"' if dashed else ""
    mark = f' marker-end="url(#arrow{marker})"' if marker is not None else ""
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{color}" stroke-width="2"{dash}{mark}/>'
    )


def _shrink(ax: float, ay: float, bx: float, by: float, at_start: float, at_end: float) -> tuple[float, float, float, float]:
    """Pull both endpoints of segment a->b inward so glyphs stay clear."""
    dx, dy = bx - ax, by - ay
    length = math.hypot(dx, dy)
    if length == 0:
        return ax, ay, bx, by
    ux, uy = dx / length, dy / length
    return ax + ux * at_start, ay + uy * at_start, bx - ux * at_end, by - uy * at_end


def _vertex_glyphs(positions: list[tuple[int, tuple[float, float]]], grid: TorusGrid) -> list[str]:
    parts = ['<g font-family="sans-serif" font-size="9" text-anchor="middle">']
    for v, (px, py) in positions:
        x, y = grid.coords(v)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(_VERTEX_R)}" '
            f'fill="white" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(f'<text x="{_fmt(px)}" y="{_fmt(py + 3)}" fill="#333333">{x},{y}</text>')
    parts.append("</g>")
    return parts


def _arc_step(grid: TorusGrid, u: int, w: int) -> tuple[str, int, bool]:
    """(axis, direction sign, wraps) for a grid arc u -> w."""
    (xu, yu), (xw, yw) = grid.coords(u), grid.coords(w)
    if yu == yw:
        step = (xw - xu) % grid.p
        return ("x", 1 if step == 1 else -1, abs(xw - xu) == grid.p - 1)
    step = (yw - yu) % grid.q
    return ("y", 1 if step == 1 else -1, abs(yw - yu) == grid.q - 1)


def to_svg(c: Covering, layout: str = "flat", palette: tuple[str, ...] | None = None) -> str:
    """SVG figure of the covered grid.

    `flat` unrolls the torus onto a square lattice; wraparound edges leave
    the boundary as labeled stubs and re-enter on the opposite side. In
    `annular` the rings of constant x are drawn concentrically, so only
    ring-to-ring wraparound edges need stubs.
    """
    if layout == "flat":
        return _svg_flat(c, _resolve_palette(c, palette))
    if layout == "annular":
        return _svg_annular(c, _resolve_palette(c, palette))
    raise ValueError(f"unknown layout {layout!r}, expected 'flat' or 'annular'")


def _svg_header(width: float, height: float, title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
        f'<text x="{_fmt(width / 2)}" y="22" text-anchor="middle" font-family="sans-serif" '
        f'font-size="14" font-weight="bold">{title}</text>',
    ]


def _wrap_label(parts: list[str], px: float, py: float, text: str) -> None:
    parts.append(
        f'<text x="{_fmt(px)}" y="{_fmt(py)}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="9" fill="#666666">{text}</text>'
    )


def _svg_flat(c: Covering, colors: tuple[str, ...]) -> str:
    grid = c.codomain
    owner = edge_ownership(c)
    width = 2 * _MARGIN + (grid.q - 1) * _CELL
    height = 2 * _MARGIN + (grid.p - 1) * _CELL + 24

    def pos(x: int, y: int) -> tuple[float, float]:
        # Row x = 0 at the bottom, y growing rightward.
        return (_MARGIN + y * _CELL, 24 + _MARGIN + (grid.p - 1 - x) * _CELL)

    parts = _svg_header(width, height, _title(c))
    parts.extend(_marker_defs(colors))

    wrap_index = 0
    stub = _STUB * _CELL
    for u, w in c.codomain_orientation.arcs:
        copy, is_cycle = owner[normalize_edge(u, w)]
        color, dashed = colors[copy], not is_cycle
        (xu, yu), (xw, yw) = grid.coords(u), grid.coords(w)
        axis, sign, wraps = _arc_step(grid, u, w)
        # Pixel direction of travel: +x runs up the page, +y runs right.
        dpx, dpy = ((0.0, -float(sign)) if axis == "x" else (float(sign), 0.0))
        pu, pw = pos(xu, yu), pos(xw, yw)
        if not wraps:
            x1, y1, x2, y2 = _shrink(pu[0], pu[1], pw[0], pw[1], _VERTEX_R, _VERTEX_R + 2)
            parts.append(_line(x1, y1, x2, y2, color, dashed, copy))
        else:
            label = f"w{wrap_index}"
            wrap_index += 1
            # Stub leaving the tail toward the boundary.
            sx1, sy1 = pu[0] + dpx * _VERTEX_R, pu[1] + dpy * _VERTEX_R
            sx2, sy2 = pu[0] + dpx * stub, pu[1] + dpy * stub
            parts.append(_line(sx1, sy1, sx2, sy2, color, dashed, copy))
            _wrap_label(parts, sx2 + dpx * 10, sy2 + dpy * 10 + 3, label)
            # Stub entering the head from the opposite boundary.
            ex1, ey1 = pw[0] - dpx * stub, pw[1] - dpy * stub
            ex2, ey2 = pw[0] - dpx * (_VERTEX_R + 2), pw[1] - dpy * (_VERTEX_R + 2)
            parts.append(_line(ex1, ey1, ex2, ey2, color, dashed, copy))
            _wrap_label(parts, ex1 - dpx * 10, ey1 - dpy * 10 + 3, label)

    positions = [(v, pos(*grid.coords(v))) for v in range(grid.graph.order)]
    parts.extend(_vertex_glyphs(positions, grid))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _svg_annular(c: Covering, colors: tuple[str, ...]) -> str:
    grid = c.codomain
    owner = edge_ownership(c)
    outer = _RING_START + (grid.p - 1) * _RING_STEP
    half = outer + _RING_STEP + 30
    width = height = 2 * half
    cx, cy = half, half + 12

    def angle(y: int) -> float:
        return 2 * math.pi * y / grid.q - math.pi / 2

    def pos(x: int, y: int) -> tuple[float, float]:
        r = _RING_START + x * _RING_STEP
        return (cx + r * math.cos(angle(y)), cy + r * math.sin(angle(y)))

    parts = _svg_header(width, height + 24, _title(c))
    parts.extend(_marker_defs(colors))

    wrap_index = 0
    stub = _STUB * _RING_STEP
    for u, w in c.codomain_orientation.arcs:
        copy, is_cycle = owner[normalize_edge(u, w)]
        color, dashed = colors[copy], not is_cycle
        (xu, yu), (xw, yw) = grid.coords(u), grid.coords(w)
        axis, sign, wraps = _arc_step(grid, u, w)
        pu, pw = pos(xu, yu), pos(xw, yw)
        if axis == "y" or not wraps:
            # Ring chords (including the y wrap) and ordinary radial edges.
            x1, y1, x2, y2 = _shrink(pu[0], pu[1], pw[0], pw[1], _VERTEX_R, _VERTEX_R + 2)
            parts.append(_line(x1, y1, x2, y2, color, dashed, copy))
        else:
            # Ring-to-ring wraparound: outward past the outer ring re-enters
            # at the innermost ring from the center side.
            label = f"w{wrap_index}"
            wrap_index += 1
            ru = math.cos(angle(yu)), math.sin(angle(yu))
            out_sign = float(sign)  # +x travels outward
            sx1, sy1 = pu[0] + ru[0] * out_sign * _VERTEX_R, pu[1] + ru[1] * out_sign * _VERTEX_R
            sx2, sy2 = pu[0] + ru[0] * out_sign * stub, pu[1] + ru[1] * out_sign * stub
            parts.append(_line(sx1, sy1, sx2, sy2, color, dashed, copy))
            _wrap_label(parts, sx2 + ru[0] * out_sign * 10, sy2 + ru[1] * out_sign * 10 + 3, label)
            rw = math.cos(angle(yw)), math.sin(angle(yw))
            ex1, ey1 = pw[0] - rw[0] * out_sign * stub, pw[1] - rw[1] * out_sign * stub
            ex2, ey2 = pw[0] - rw[0] * out_sign * (_VERTEX_R + 2), pw[1] - rw[1] * out_sign * (_VERTEX_R + 2)
            parts.append(_line(ex1, ey1, ex2, ey2, color, dashed, copy))
            _wrap_label(parts, ex1 - rw[0] * out_sign * 10, ey1 - rw[1] * out_sign * 10 + 3, label)

    positions = [(v, pos(*grid.coords(v))) for v in range(grid.graph.order)]
    parts.extend(_vertex_glyphs(positions, grid))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
