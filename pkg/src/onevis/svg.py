"""SVG rendering of a visibility layout (level 0 at the bottom)."""

from __future__ import annotations

from .layout import VisibilityLayout

PX_PER_QUARTER = 6
PX_PER_LEVEL = 4 * PX_PER_QUARTER
MARGIN = 12


def render_svg(layout: VisibilityLayout, show_hidden: bool = False) -> str:
    """One ``rect`` per vertex bar and one ``line`` per drawn edge.

    Bars are half a unit tall.  Hidden helper edges are left out unless
    ``show_hidden`` is set, in which case they are dashed.  Edges that pass
    through a bar and the bars they cross are drawn in red.
    """
    if not layout.vertices:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"/>\n'
    x0 = min(b.x_lo for b in layout.vertices)
    top = max(b.y for b in layout.vertices)
    crossing_edges = {e for e, _ in layout.crossings}
    crossed = {v for _, v in layout.crossings}

    def px(x: int) -> int:
        return MARGIN + (x - x0) * PX_PER_QUARTER

    def py(y: int) -> int:
        return MARGIN + (top - y) * PX_PER_LEVEL

    bar_h = PX_PER_LEVEL // 2
    width = px(max(b.x_hi for b in layout.vertices)) + MARGIN
    height = py(0) + MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for e in layout.edges:
        if e.hidden and not show_hidden:
            continue
        style = 'stroke="#c0392b"' if e.edge in crossing_edges else 'stroke="#222"'
        if e.hidden:
            style = 'stroke="#999" stroke-dasharray="3,3"'
        out.append(
            f'<line x1="{px(e.x)}" y1="{py(e.y_lo)}" x2="{px(e.x)}" y2="{py(e.y_hi)}" '
            f'{style} stroke-width="1"><title>e{e.edge} ({e.u},{e.v})</title></line>'
        )
    for b in layout.vertices:
        fill = "#f5b7b1" if b.vertex in crossed else "#aed6f1"
        x = px(b.x_lo) - 2
        w = px(b.x_hi) - px(b.x_lo) + 4
        out.append(
            f'<rect x="{x}" y="{py(b.y) - bar_h // 2}" width="{w}" height="{bar_h}" '
            f'fill="{fill}" stroke="#1b4f72"><title>v{b.vertex}</title></rect>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
