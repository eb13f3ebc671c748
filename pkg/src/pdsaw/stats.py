"""Statistics transported by the bijections.

All of these are direct O(n^2) scans of the definitions so they can serve
as oracles for the bijections module.
"""
from __future__ import annotations

from .core import (
    ASYM,
    DYCK,
    FALL,
    LEVEL,
    MATCHING,
    MOTZKIN,
    PERMUTATION,
    SYM,
    AsymPdsaw,
    Matching,
    Permutation,
    SymPdsaw,
    WeightedDyckPath,
    WeightedMotzkinPath,
    kind_of,
    motzkin_capacity,
)

Walk = SymPdsaw | AsymPdsaw
Path = WeightedDyckPath | WeightedMotzkinPath


def north_steps(walk: Walk) -> int:
    ys = walk.ys
    return sum(max(b - a, 0) for a, b in zip(ys, ys[1:]))


def last_descent(walk: Walk) -> int:
    """Number of south steps after the final east step."""
    if walk.n == 0:
        raise ValueError("empty walk")
    return walk.ys[-1] + walk.n


def area_sym(walk: SymPdsaw) -> int:
    """Full unit squares between the walk and the line y = -x."""
    return sum(y + i for i, y in enumerate(walk.ys))


def nestings(obj: Matching | Permutation) -> int:
    if isinstance(obj, Matching):
        pairs = obj.pairs
        return sum(1 for i, j in pairs for k, l in pairs if i < k < l < j)
    s = obj.images
    n = len(s)
    count = 0
    for i in range(1, n + 1):
        si = s[i - 1]
        for j in range(1, n + 1):
            sj = s[j - 1]
            if j < i <= si < sj or j > i > si > sj:
                count += 1
    return count


def crossings(obj: Matching | Permutation) -> int:
    if isinstance(obj, Matching):
        pairs = obj.pairs
        return sum(1 for i, j in pairs for k, l in pairs if i < k < j < l)
    s = obj.images
    n = len(s)
    count = 0
    for i in range(1, n + 1):
        si = s[i - 1]
        for j in range(1, n + 1):
            sj = s[j - 1]
            # the middle inequality of the first clause is weak
            if i < j <= si < sj or sj < si < j < i:
                count += 1
    return count


def pattern_31_2(perm: Permutation) -> int:
    """Occurrences of the generalised pattern 31-2.

    Counts pairs (i, k) with i + 1 < k and s(i+1) < s(k) < s(i).
    """
    s = perm.images
    n = len(s)
    return sum(
        1
        for i in range(n - 1)
        for k in range(i + 2, n)
        if s[i + 1] < s[k] < s[i]
    )


def total_weight(path: Path) -> int:
    return sum(s.weight for s in path.steps)


def _capacities(path: Path) -> list[int]:
    heights = path.heights()
    if isinstance(path, WeightedDyckPath):
        return [h if s.kind == FALL else 0 for s, h in zip(path.steps, heights)]
    return [motzkin_capacity(s.kind, h) for s, h in zip(path.steps, heights)]


def complementary_weight(path: Path) -> int:
    """Sum over steps of (capacity - weight)."""
    return sum(c - s.weight for s, c in zip(path.steps, _capacities(path)))


def first_zero_position(path: Path) -> int:
    """1-based position of the first zero-weight fall (or level, for Motzkin)."""
    closers = (FALL,) if isinstance(path, WeightedDyckPath) else (FALL, LEVEL)
    for pos, s in enumerate(path.steps, 1):
        if s.kind in closers and s.weight == 0:
            return pos
    raise ValueError("no zero-weight closer")


def factor_boundaries(obj) -> list[int]:
    """Cut points 0 = b_0 < b_1 < ... < b_k = size of the prime factorisation."""
    kind = kind_of(obj)
    if kind == SYM:
        ys = obj.ys
        n = len(ys)
        return [b for b in range(n + 1) if all(ys[i - 1] < i - 2 * b for i in range(b + 1, n + 1))]
    if kind == ASYM:
        ys = obj.ys
        n = len(ys)
        return [
            b
            for b in range(n + 1)
            if b == n or (ys[b] == -b and all(y <= -b for y in ys[b:]))
        ]
    if kind == MATCHING:
        size = len(obj.partner)
        cuts = [0]
        reach = 0
        for p in range(1, size + 1):
            reach = max(reach, obj(p))
            if reach == p:
                cuts.append(p)
        return cuts
    if kind == PERMUTATION:
        cuts = [0]
        reach = 0
        for i, v in enumerate(obj.images, 1):
            reach = max(reach, v)
            if reach == i:
                cuts.append(i)
        return cuts
    heights = obj.heights()
    return [0] + [p for p, h in enumerate(heights, 1) if h == 0]


def factor_sizes(obj) -> tuple[int, ...]:
    cuts = factor_boundaries(obj)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


_FIELDS = {
    SYM: ("north", "last_descent", "area", "factors"),
    ASYM: ("north", "last_descent", "factors"),
    MATCHING: ("nestings", "crossings", "factors"),
    PERMUTATION: ("nestings", "crossings", "pattern31_2", "factors"),
    DYCK: ("total_weight", "comp_weight", "first_zero", "factors"),
    MOTZKIN: ("total_weight", "comp_weight", "first_zero", "factors"),
}

_STATS = {
    "north": north_steps,
    "last_descent": last_descent,
    "area": area_sym,
    "nestings": nestings,
    "crossings": crossings,
    "pattern31_2": pattern_31_2,
    "total_weight": total_weight,
    "comp_weight": complementary_weight,
    "first_zero": first_zero_position,
    "factors": lambda obj: list(factor_sizes(obj)),
}

INTEGER_STATS = tuple(k for k in _STATS if k != "factors")


def stat_names(kind: str) -> tuple[str, ...]:
    return _FIELDS[kind]


def statistic(obj, name: str) -> int:
    kind = kind_of(obj)
    if name not in _FIELDS[kind]:
        raise ValueError(f"statistic {name!r} is not defined for {kind}")
    return _STATS[name](obj)


def stat_report(obj) -> dict:
    """Flat JSON-ready report of every statistic defined for the object.

    ``last_descent`` and ``first_zero`` are left out for size-0 objects,
    where they are undefined.
    """
    kind = kind_of(obj)
    report: dict = {"kind": kind, "n": obj.n}
    for name in _FIELDS[kind]:
        if obj.n == 0 and name in ("last_descent", "first_zero"):
            continue
        report[name] = _STATS[name](obj)
    return report
