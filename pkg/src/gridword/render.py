"""Figure emission: SVG and TikZ renderings of grid words.

Both formats draw filled cells as solid unit squares over a light grid,
and both are byte-deterministic so they can serve as golden files.
"""

from __future__ import annotations

from .grid_word import Word2D

SVG_CELL = 16  # px per unit cell


def render_svg(word: Word2D) -> str:
    h, w = word.height, word.width
    width_px = w * SVG_CELL
    height_px = h * SVG_CELL
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" '
        f'height="{height_px}" viewBox="0 0 {width_px} {height_px}">',
        f'<rect width="{width_px}" height="{height_px}" fill="#ffffff"/>',
    ]
    for i in range(1, h + 1):
        for j in range(1, w + 1):
            if word.is_filled(i, j):
                parts.append(
                    f'<rect x="{(j - 1) * SVG_CELL}" y="{(i - 1) * SVG_CELL}" '
                    f'width="{SVG_CELL}" height="{SVG_CELL}" fill="#222222"/>'
                )
    for i in range(h + 1):
        y = i * SVG_CELL
        parts.append(
            f'<line x1="0" y1="{y}" x2="{width_px}" y2="{y}" '
            f'stroke="#999999" stroke-width="1"/>'
        )
    for j in range(w + 1):
        x = j * SVG_CELL
        parts.append(
            f'<line x1="{x}" y1="0" x2="{x}" y2="{height_px}" '
            f'stroke="#999999" stroke-width="1"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_tikz(word: Word2D) -> str:
    h, w = word.height, word.width
    lines = [r"\begin{tikzpicture}[x=0.25cm,y=0.25cm]"]
    for i in range(1, h + 1):
        for j in range(1, w + 1):
            if word.is_filled(i, j):
                x, y = j - 1, h - i
                lines.append(
                    rf"\fill[black!80] ({x},{y}) rectangle ({x + 1},{y + 1});"
                )
    lines.append(rf"\draw[gray,very thin] (0,0) grid ({w},{h});")
    lines.append(rf"\draw[thick] (0,0) rectangle ({w},{h});")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"
