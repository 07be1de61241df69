"""Flattened 2-D rendering of orbit braid words as SVG.

All p*n strand columns are drawn side by side, grouped in orbit blocks:
column i*n + j carries the orbit-i copy of strand j.  A rotation letter
moves the p first-strand columns cyclically by one block; a swap letter
crosses strands k and k+1 inside every block at once, with the under
strand broken at each crossing.  Orbit copies of a strand share a hue
and differ by dash pattern.  Output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, _ROT
from .words import IndexOutOfRange

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#e377c2",
    "#17becf",
)

_DASHES = ("", "7,3", "2,2", "7,2,2,2", "10,2", "4,4", "1,3", "12,3,3,3")


@dataclass(frozen=True)
class RenderStyle:
    """Canvas size, per-orbit dash patterns and the under-crossing gap."""

    width: int = 480
    height: int = 360
    crossing_gap: float = 5.0
    dashes: tuple[str, ...] = _DASHES
    palette: tuple[str, ...] = _PALETTE

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise IndexOutOfRange("render dimensions must be positive")


def _fmt(v: float) -> str:
    return f"{v:.1f}"


def render(w: BraidWord, style: RenderStyle | None = None) -> str:
    """SVG document with exactly p*n path elements, one per strand."""
    style = style or RenderStyle()
    p, n = w.params.p, w.params.n
    cols = p * n
    margin = 24.0
    span_x = style.width - 2 * margin
    xs = [margin + (span_x * c / (cols - 1) if cols > 1 else span_x / 2) for c in range(cols)]
    bands = max(len(w.codes), 1)
    span_y = style.height - 2 * margin
    ys = [margin + span_y * t / bands for t in range(bands + 1)]

    # occupant[slot] = strand id (its starting slot); subpaths per strand
    occupant = list(range(cols))
    paths: list[list[list[tuple[float, float]]]] = [
        [[(xs[c], ys[0])]] for c in range(cols)
    ]

    def extend(strand: int, x: float, y: float) -> None:
        paths[strand][-1].append((x, y))

    def break_at(strand: int, x0: float, y0: float, x1: float, y1: float, ts: list[float]) -> None:
        """Diagonal from (x0,y0) to (x1,y1) with gaps at parameters ts."""
        dx, dy = x1 - x0, y1 - y0
        seg = (dx * dx + dy * dy) ** 0.5
        delta = style.crossing_gap / seg if seg else 0.0
        cur = 0.0
        for t in sorted(ts):
            a, b = max(t - delta, cur), min(t + delta, 1.0)
            extend(strand, x0 + dx * a, y0 + dy * a)
            paths[strand].append([(x0 + dx * b, y0 + dy * b)])
            cur = b
        extend(strand, x1, y1)

    for t, c in enumerate(w.codes):
        y0, y1 = ys[t], ys[t + 1]
        base = abs(c)
        moved: dict[int, int] = {}  # slot -> destination slot
        if base == _ROT:
            step = 1 if c > 0 else -1
            for i in range(p):
                moved[i * n] = ((i + step) % p) * n
        else:
            k = base - 2
            for i in range(p):
                a = i * n + k
                moved[a] = a + 1
                moved[a + 1] = a
        newocc = occupant[:]
        for src, dst in moved.items():
            newocc[dst] = occupant[src]
        for slot in range(cols):
            strand = occupant[slot]
            if slot not in moved:
                extend(strand, xs[slot], y1)
                continue
            dst = moved[slot]
            x0, x1 = xs[slot], xs[dst]
            if base == _ROT:
                # the moving strand dives under every static column it crosses
                lo, hi = min(x0, x1), max(x0, x1)
                ts = [
                    (xs[s] - x0) / (x1 - x0)
                    for s in range(cols)
                    if s not in moved and lo < xs[s] < hi
                ]
                break_at(strand, x0, y0, x1, y1, ts)
            else:
                going_right = dst > slot
                over = going_right if c > 0 else not going_right
                if over:
                    extend(strand, x1, y1)
                else:
                    break_at(strand, x0, y0, x1, y1, [0.5])
        occupant = newocc

    body = []
    for strand in range(cols):
        i, j = divmod(strand, n)
        d = " ".join(
            "M " + " L ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in sub)
            for sub in paths[strand]
            if len(sub) >= 2
        )
        if not d:  # degenerate sub-band geometry; keep the column visible
            d = f"M {_fmt(xs[strand])},{_fmt(ys[0])} L {_fmt(xs[strand])},{_fmt(ys[-1])}"
        color = style.palette[j % len(style.palette)]
        dash = style.dashes[i % len(style.dashes)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        body.append(
            f'<path d="{d}" fill="none" stroke="{color}" stroke-width="2"{dash_attr}/>'
        )
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}">'
    )
    return head + "\n" + "\n".join(body) + "\n</svg>\n"
