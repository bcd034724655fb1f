"""Deterministic SVG / TikZ / CSV emitters for cone cross-sections.

Rendering is the only place decimal strings appear; they are produced from
exact rationals by integer arithmetic (fixed-point rounding), so output is
bit-stable across runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cone import CrossSection
from .rationals import rat_str


def _fixed(q: Fraction, places: int = 4) -> str:
    """Exact fixed-point decimal string of a rational (round half away from
    zero), without floating point."""
    q = Fraction(q)
    scale = 10 ** places
    num = q.numerator * scale * 2
    den = q.denominator * 2
    half = den // 2
    if num >= 0:
        scaled = (num + half) // den
    else:
        scaled = -((-num + half) // den)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, scale)
    text = f"{sign}{whole}.{frac:0{places}d}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def _projection_axes(vertices: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Two fixed rational functionals projecting the vertices injectively to
    the plane.  Coordinate pairs are tried in lexicographic order; if none is
    injective, generic power functionals are used."""
    dim = len(vertices[0]) if vertices else 2

    def project(u, v):
        return [
            (
                sum(a * x for a, x in zip(u, vert)),
                sum(a * x for a, x in zip(v, vert)),
            )
            for vert in vertices
        ]

    candidates = []
    for i in range(dim):
        for j in range(i + 1, dim):
            u = tuple(Fraction(1) if k == i else Fraction(0) for k in range(dim))
            v = tuple(Fraction(1) if k == j else Fraction(0) for k in range(dim))
            candidates.append((u, v))
    for t in (2, 3, 5):
        u = tuple(Fraction(t) ** k for k in range(dim))
        v = tuple(Fraction(t + 1) ** k for k in range(dim))
        candidates.append((u, v))
    for u, v in candidates:
        pts = project(u, v)
        if len(set(pts)) == len(pts):
            return u, v
    return candidates[-1]


def _layout(cs: CrossSection, size: int = 360, margin: int = 40):
    u, v = _projection_axes(cs.vertices)
    pts = [
        (
            sum(a * x for a, x in zip(u, vert)),
            sum(a * x for a, x in zip(v, vert)),
        )
        for vert in cs.vertices
    ]
    xs = [p[0] for p in pts] or [Fraction(0)]
    ys = [p[1] for p in pts] or [Fraction(0)]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin, Fraction(1))
    scale = Fraction(size - 2 * margin) / span

    def place(p):
        x = margin + (p[0] - xmin) * scale
        y = size - margin - (p[1] - ymin) * scale  # flip y for screen coords
        return x, y

    return [place(p) for p in pts]


def cross_section_svg(
    cs: CrossSection, labels: Sequence[str] | None = None, size: int = 360
) -> str:
    pts = _layout(cs, size=size)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    for i, j in cs.edges:
        (x1, y1), (x2, y2) = pts[i], pts[j]
        lines.append(
            f'  <line x1="{_fixed(x1)}" y1="{_fixed(y1)}" '
            f'x2="{_fixed(x2)}" y2="{_fixed(y2)}" stroke="black" stroke-width="1.5"/>'
        )
    for k, (x, y) in enumerate(pts):
        lines.append(f'  <circle cx="{_fixed(x)}" cy="{_fixed(y)}" r="3" fill="black"/>')
        if labels:
            lines.append(
                f'  <text x="{_fixed(x + 6)}" y="{_fixed(y - 6)}" '
                f'font-size="12">{labels[k]}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cross_section_tikz(cs: CrossSection, labels: Sequence[str] | None = None) -> str:
    u, v = _projection_axes(cs.vertices)
    pts = [
        (
            sum(a * x for a, x in zip(u, vert)),
            sum(a * x for a, x in zip(v, vert)),
        )
        for vert in cs.vertices
    ]
    lines = ["\\begin{tikzpicture}[scale=2.5]"]
    for k, (x, y) in enumerate(pts):
        lines.append(f"  \\coordinate (v{k}) at ({_fixed(x)},{_fixed(y)});")
    for i, j in cs.edges:
        lines.append(f"  \\draw (v{i}) -- (v{j});")
    for k, (x, y) in enumerate(pts):
        lines.append(f"  \\fill (v{k}) circle (0.6pt);")
        if labels:
            lines.append(f"  \\node[above right] at (v{k}) {{${labels[k]}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def cross_section_csv(cs: CrossSection, labels: Sequence[str] | None = None) -> str:
    header = ["vertex"] + [f"x{k}" for k in range(cs.dim)]
    if labels:
        header.append("label")
    rows = [",".join(header)]
    for k, vert in enumerate(cs.vertices):
        row = [str(k)] + [rat_str(x) for x in vert]
        if labels:
            row.append(labels[k])
        rows.append(",".join(row))
    rows.append("edges," + ";".join(f"{i}-{j}" for i, j in cs.edges))
    return "\n".join(rows) + "\n"
