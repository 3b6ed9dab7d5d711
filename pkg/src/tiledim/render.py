"""Static SVG pictures of 2-tilings."""
from __future__ import annotations

from fractions import Fraction

from .errors import UsageError
from .separations import compute_separations
from .tiling import Tiling

SIZE = 1000

_PALETTE = ("#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd")


def _num(v: Fraction) -> str:
    """Fixed-point text rounded to 3 decimals, trailing zeros dropped."""
    n = int(round(Fraction(v), 3) * 1000)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 1000}.{n % 1000:03d}".rstrip("0").rstrip(".")


def _x(v) -> Fraction:
    return (Fraction(v) + 1) * SIZE / 2


def _y(v) -> Fraction:
    # SVG y grows downwards
    return (1 - Fraction(v)) * SIZE / 2


def _clip(v):
    return max(Fraction(-1), min(Fraction(1), v))


def render_svg(t: Tiling, separations: bool = False) -> str:
    """SVG 1.1 document mapping [-1,1]^2 onto a 1000x1000 viewBox.

    Boxes are drawn in input order and labelled with their index.  With
    ``separations=True`` the interior separations are overlaid as thick lines.
    """
    if t.d != 2:
        raise UsageError(f"SVG rendering needs d=2, got d={t.d}")
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        '<g stroke="#000000" stroke-width="2">',
    ]
    for k, b in enumerate(t.boxes):
        (x0, x1), (y0, y1) = b.intervals
        out.append(
            f'<rect id="box{k}" x="{_num(_x(x0))}" y="{_num(_y(y1))}" '
            f'width="{_num(_x(x1) - _x(x0))}" height="{_num(_y(y0) - _y(y1))}" '
            f'fill="{_PALETTE[k % len(_PALETTE)]}"/>'
        )
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="24" text-anchor="middle">')
    for k, b in enumerate(t.boxes):
        (x0, x1), (y0, y1) = b.intervals
        out.append(f'<text x="{_num(_x((x0 + x1) / 2))}" y="{_num(_y((y0 + y1) / 2))}">{k}</text>')
    out.append("</g>")
    if separations:
        out.append('<g stroke="#d62728" stroke-width="8">')
        for s in compute_separations(t):
            if s.box is None or s.level in (-1, 1):
                continue
            (x0, x1), (y0, y1) = ((_clip(iv.lo), _clip(iv.hi)) for iv in s.box.intervals)
            out.append(
                f'<line x1="{_num(_x(x0))}" y1="{_num(_y(y0))}" x2="{_num(_x(x1))}" y2="{_num(_y(y1))}"/>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
