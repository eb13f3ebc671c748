"""Slow, obviously-correct generators used as independent oracles."""
from itertools import permutations, product

from pdsaw.core import (
    AsymPdsaw,
    Matching,
    Permutation,
    Step,
    SymPdsaw,
    WeightedDyckPath,
    WeightedMotzkinPath,
)


def sym_walks(n):
    ranges = [range(-(i - 1), i) for i in range(1, n + 1)]
    return [SymPdsaw(ys) for ys in product(*ranges)]


def asym_walks(n):
    ranges = [range(-(i - 1), 1) for i in range(1, n + 1)]
    return [AsymPdsaw(ys) for ys in product(*ranges)]


def matchings(n):
    def pairings(points):
        if not points:
            yield []
            return
        a, rest = points[0], points[1:]
        for k, b in enumerate(rest):
            for tail in pairings(rest[:k] + rest[k + 1:]):
                yield [(a, b)] + tail

    return [Matching.from_pairs(p) for p in pairings(list(range(1, 2 * n + 1)))]


def perms(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def _heights_ok(kinds):
    h = 0
    for k in kinds:
        if k == "D":
            h -= 1
            if h < 0:
                return False
        if k == "U":
            h += 1
    return h == 0


def dyck_paths(n):
    out = []
    for kinds in product("UD", repeat=2 * n):
        if not _heights_ok(kinds):
            continue
        # a fall ending at height h takes a weight in 0..h
        ends, h = [], 0
        for k in kinds:
            h += 1 if k == "U" else -1
            ends.append(h)
        choices = [range(h + 1) if k == "D" else range(1) for k, h in zip(kinds, ends)]
        for ws in product(*choices):
            out.append(WeightedDyckPath([Step(k, w) for k, w in zip(kinds, ws)]))
    return out


def motzkin_paths(n):
    out = []
    for kinds in product("UDFC", repeat=n):
        if not _heights_ok(kinds):
            continue
        choices, h = [], 0
        for k in kinds:
            if k == "U":
                h += 1
                choices.append(range(h))
            elif k == "D":
                h -= 1
                choices.append(range(h + 1))
            elif k == "F":
                choices.append(range(h + 1))
            else:
                choices.append(range(h))
        for ws in product(*choices):
            out.append(WeightedMotzkinPath([Step(k, w) for k, w in zip(kinds, ws)]))
    return out


def free_walks(steps):
    """All E/N/S words of the given length staying in |y| <= x with no N next to S."""
    found = []
    for word in product("ENS", repeat=steps):
        if "NS" in "".join(word) or "SN" in "".join(word):
            continue
        x = y = 0
        ok = True
        for m in word:
            if m == "E":
                x += 1
            else:
                y += 1 if m == "N" else -1
            if abs(y) > x:
                ok = False
                break
        if ok:
            found.append("".join(word))
    return found
