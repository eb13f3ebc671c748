"""Plain-text pictures of walks, weighted paths, matchings and permutations."""
from __future__ import annotations

from .core import (
    ASYM,
    COLOURED,
    DYCK,
    FALL,
    LEVEL,
    MATCHING,
    MOTZKIN,
    PERMUTATION,
    RISE,
    SYM,
    kind_of,
)


def render_ascii(obj) -> str:
    kind = kind_of(obj)
    if kind in (SYM, ASYM):
        return _walk(obj.ys, upper=(kind == SYM))
    if kind in (DYCK, MOTZKIN):
        return _path(obj.steps, weights_on=(FALL,) if kind == DYCK else None)
    if kind == MATCHING:
        return _arcs(obj.pairs, 2 * obj.n)
    if kind == PERMUTATION:
        return _permutation(obj.images)
    raise TypeError(kind)


def _walk(ys, upper: bool) -> str:
    """East steps as '_', vertical runs as '|' and the wedge border as '/' '\\'.

    Column 2i-2 holds east step i, column 2i-1 the vertical run after it.
    The final descent to (n, -n) is implied and not drawn.
    """
    if not ys:
        return ""
    n = len(ys)
    top, bottom = max(ys), min(ys)
    width = 2 * n - 1
    rows = {y: [" "] * width for y in range(top, bottom - 1, -1)}
    for i in range(1, n + 1):
        col = 2 * i - 2
        if upper and bottom <= i - 1 <= top:
            rows[i - 1][col] = "/"
        if bottom <= -(i - 1) <= top:
            rows[-(i - 1)][col] = "\\"
        rows[ys[i - 1]][col] = "_"
    for i in range(1, n):
        a, b = ys[i - 1], ys[i]
        for y in range(min(a, b) + 1, max(a, b) + 1):
            rows[y][2 * i - 1] = "|"
    return "\n".join("".join(r).rstrip() for r in rows.values())


_GLYPH = {RISE: "/", FALL: "\\", LEVEL: "_", COLOURED: "="}


def _path(steps, weights_on=None) -> str:
    """Weighted path with its weights on a line beneath.

    ``weights_on`` limits which step kinds show a weight (None: all).
    """
    if not steps:
        return ""
    labels = [
        str(s.weight) if weights_on is None or s.kind in weights_on else ""
        for s in steps
    ]
    width = max(1, max(len(lab) for lab in labels))
    h = 0
    cells = []
    for s in steps:
        if s.kind == RISE:
            cells.append((h, "/"))
            h += 1
        elif s.kind == FALL:
            h -= 1
            cells.append((h, "\\"))
        else:
            cells.append((h, _GLYPH[s.kind]))
    top = max(r for r, _ in cells)
    lines = []
    for row in range(top, -1, -1):
        line = "".join((g if r == row else " ").rjust(width) for r, g in cells)
        lines.append(line.rstrip())
    lines.append("".join(lab.rjust(width) for lab in labels).rstrip())
    return "\n".join(lines)


def _levels(pairs) -> dict[tuple[int, int], int]:
    """Stack arcs so that no two overlapping spans share a level."""
    placed: dict[tuple[int, int], int] = {}
    for a, b in sorted(pairs, key=lambda p: (p[1] - p[0], p[0])):
        used = {lv for (c, d), lv in placed.items() if not (d < a or b < c)}
        level = 1
        while level in used:
            level += 1
        placed[(a, b)] = level
    return placed


def _arc_rows(pairs, points, mark="o"):
    """Rows above the baseline, highest first, plus the baseline itself."""
    width = 2 * points - 1
    levels = _levels(pairs)
    height = max(levels.values(), default=0)
    grid = [[" "] * width for _ in range(height)]
    for (a, b), lv in levels.items():
        row = height - lv
        ca, cb = 2 * (a - 1), 2 * (b - 1)
        for c in range(ca + 1, cb):
            if grid[row][c] == " ":
                grid[row][c] = "-"
        grid[row][ca] = grid[row][cb] = "+"
        for r in range(row + 1, height):
            grid[r][ca] = grid[r][cb] = "|"
    base = [" "] * width
    for p in range(points):
        base[2 * p] = mark
    return grid, base


def _arcs(pairs, points) -> str:
    if not points:
        return ""
    grid, base = _arc_rows(pairs, points)
    return "\n".join("".join(r).rstrip() for r in grid + [base])


def _permutation(images) -> str:
    """Arcs i -> s(i) above the line when s(i) > i, below when s(i) < i.

    Fixed points are marked '*' on the baseline.
    """
    n = len(images)
    if not n:
        return ""
    upper = [(i, s) for i, s in enumerate(images, 1) if s > i]
    lower = [(s, i) for i, s in enumerate(images, 1) if s < i]
    up, base = _arc_rows(upper, n)
    down, _ = _arc_rows(lower, n)
    for i, s in enumerate(images, 1):
        if s == i:
            base[2 * (i - 1)] = "*"
    down = list(reversed(down))
    return "\n".join("".join(r).rstrip() for r in up + [base] + down)
