"""Bijections between wedge walks, weighted paths, matchings and permutations.

    sym walk  <-> weighted Dyck path   <-> matching      (local rules I-V)
    asym walk <-> weighted Motzkin path <-> permutation  (local rules i-iv)
    asym walk <-> permutation                            (Nadeau)

The walk-to-path maps are built one east step at a time: the new step is
first placed at its lowest position, which prepends a fixed prefix to the
path, and is then raised one unit at a time, each raise being a single
local rewrite next to the first zero-weight closing step.
"""
from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    COLOURED,
    FALL,
    LEVEL,
    RISE,
    AsymPdsaw,
    Matching,
    Permutation,
    Step,
    SymPdsaw,
    WeightedDyckPath,
    WeightedMotzkinPath,
)


class InvariantError(RuntimeError):
    """A bijection met a configuration that valid input cannot produce."""


class RuleApplication(NamedTuple):
    step: int  # east step being raised
    rule: str
    at: int  # 1-based position of the first zero-weight closer before the rewrite


@dataclass(frozen=True)
class RuleTrace:
    applied: tuple[RuleApplication, ...] = ()

    def labels(self) -> list[str]:
        return [a.rule for a in self.applied]

    def groups(self) -> list[list[RuleApplication]]:
        """Applications split by the east step they belong to."""
        out: dict[int, list[RuleApplication]] = {}
        for a in self.applied:
            out.setdefault(a.step, []).append(a)
        return list(out.values())

    def to_json(self) -> list[dict]:
        return [{"rule": a.rule, "at": a.at} for a in self.applied]


# Transitions of the two rule automata.  A raise sequence for one east step
# must start in one of the start states and follow the edges.
SYM_AUTOMATON = {
    "start": {"I"},
    "edges": {
        "I": {"I", "II", "III"},
        "II": {"I", "II", "III"},
        "III": {"IV", "V"},
        "IV": {"IV", "V"},
        "V": {"IV", "V"},
    },
}
ASYM_AUTOMATON = {
    "start": {"i", "ii"},
    "edges": {
        "i": {"i", "ii", "iii"},
        "ii": {"iv"},
        "iii": {"iv"},
        "iv": {"iv"},
    },
}


def trace_accepted(trace: RuleTrace, automaton: dict) -> bool:
    """Check every per-step group walks the automaton with M rising by one."""
    for group in trace.groups():
        if group[0].rule not in automaton["start"]:
            return False
        for a, b in zip(group, group[1:]):
            if b.rule not in automaton["edges"][a.rule] or b.at != a.at + 1:
                return False
    return True


R0 = Step(RISE, 0)
D0 = Step(FALL, 0)
L0 = Step(LEVEL, 0)


def _first_zero(steps, closers) -> int:
    """0-based index of the first zero-weight step among ``closers``."""
    for idx, s in enumerate(steps):
        if s.weight == 0 and s.kind in closers:
            return idx
    raise InvariantError("no zero-weight closer")


# --- matchings and weighted Dyck paths --------------------------------------


def matching_to_dyck(m: Matching) -> WeightedDyckPath:
    """Openers rise; a closer falls with weight = open arcs opened before its partner."""
    opened: list[int] = []
    steps = []
    for p in range(1, 2 * m.n + 1):
        q = m(p)
        if q > p:
            insort(opened, p)
            steps.append(R0)
        else:
            k = opened.index(q)
            steps.append(Step(FALL, k))
            del opened[k]
    return WeightedDyckPath(tuple(steps))


def dyck_to_matching(d: WeightedDyckPath) -> Matching:
    opened: list[int] = []
    partner = [0] * len(d.steps)
    for p, s in enumerate(d.steps, 1):
        if s.kind == RISE:
            opened.append(p)
            continue
        if s.weight >= len(opened):
            raise InvariantError(f"fall weight {s.weight} at {p} exceeds open arcs")
        o = opened.pop(s.weight)
        partner[p - 1], partner[o - 1] = o, p
    return Matching(tuple(partner))


# --- symmetric wedge and weighted Dyck paths ---------------------------------


def _sym_rule(steps: list[Step], m: int) -> str:
    """Rewrite the triple around the first zero fall at index ``m``."""
    before, after = steps[m - 1], steps[m + 1]
    if before.kind == RISE:
        if after.kind == RISE:
            steps[m - 1 : m + 2] = [R0, R0, D0]
            return "I"
        if after.weight > 0:
            steps[m - 1 : m + 2] = [after, R0, D0]
            return "II"
        steps[m - 1 : m + 2] = [R0, Step(FALL, 1), D0]
        return "III"
    if after.kind == FALL:
        steps[m - 1 : m + 2] = [before, Step(FALL, after.weight + 1), D0]
        return "IV"
    steps[m - 1 : m + 2] = [R0, Step(FALL, before.weight + 1), D0]
    return "V"


def _sym_unrule(steps: list[Step], m: int) -> str:
    """Undo the rule whose result ends at the first zero fall, index ``m``."""
    a, b = steps[m - 2], steps[m - 1]
    if b.kind == RISE:
        if a.kind == RISE:
            steps[m - 2 : m + 1] = [R0, D0, R0]
            return "I"
        steps[m - 2 : m + 1] = [R0, D0, a]
        return "II"
    if b.weight < 1:
        raise InvariantError(f"zero-weight fall before position {m + 1}")
    if a.kind == RISE:
        if b.weight == 1:
            steps[m - 2 : m + 1] = [R0, D0, D0]
            return "III"
        steps[m - 2 : m + 1] = [Step(FALL, b.weight - 1), D0, R0]
        return "V"
    steps[m - 2 : m + 1] = [a, D0, Step(FALL, b.weight - 1)]
    return "IV"


def sym_pdsaw_to_dyck(walk: SymPdsaw) -> tuple[WeightedDyckPath, RuleTrace]:
    steps: list[Step] = []
    trace = []
    for i, y in enumerate(walk.ys, 1):
        steps[:0] = [R0, D0]
        for _ in range(y + i - 1):
            m = _first_zero(steps, (FALL,))
            if m + 1 >= len(steps):
                raise InvariantError(f"no step after the first zero fall (east step {i})")
            trace.append(RuleApplication(i, _sym_rule(steps, m), m + 1))
    return WeightedDyckPath(tuple(steps)), RuleTrace(tuple(trace))


def dyck_to_sym_pdsaw(d: WeightedDyckPath) -> SymPdsaw:
    steps = list(d.steps)
    n = d.n
    ys = [0] * n
    for i in range(n, 0, -1):
        raises = 0
        m = _first_zero(steps, (FALL,))
        while m >= 2:
            _sym_unrule(steps, m)
            raises += 1
            m = _first_zero(steps, (FALL,))
        if steps[:2] != [R0, D0]:
            raise InvariantError(f"path does not start with U D0 at east step {i}")
        del steps[:2]
        ys[i - 1] = -(i - 1) + raises
    return SymPdsaw(tuple(ys))


# --- permutations and weighted Motzkin paths ---------------------------------


def perm_to_motzkin(perm: Permutation) -> WeightedMotzkinPath:
    s = (0,) + perm.images
    inv = (0,) + perm.inverse().images
    n = perm.n

    def nests(i, j):
        # arc (i, s(i)) is nested by arc (j, s(j))
        return j < i <= s[i] < s[j] or j > i > s[i] > s[j]

    steps = []
    for i in range(1, n + 1):
        lo, hi = min(s[i], inv[i]), max(s[i], inv[i])
        if i < lo:
            kind = RISE
        elif i > hi:
            kind = FALL
        elif inv[i] <= i <= s[i]:
            kind = LEVEL
        else:
            kind = COLOURED
        a = inv[i]
        weight = sum(1 for j in range(1, n + 1) if nests(a, j))
        steps.append(Step(kind, weight))
    return WeightedMotzkinPath(tuple(steps))


def motzkin_to_perm(path: WeightedMotzkinPath) -> Permutation:
    """Rebuild a permutation from its Motzkin path in two independent scans.

    Arcs with s(i) >= i are resolved left to right from level and fall
    weights; arcs with s(i) < i right to left from rise and coloured weights.
    """
    n = path.n
    s = [0] * (n + 1)
    upper: list[int] = []
    for i, step in enumerate(path.steps, 1):
        if step.kind in (RISE, LEVEL):
            upper.append(i)
        if step.kind in (LEVEL, FALL):
            if step.weight >= len(upper):
                raise InvariantError(f"selection out of range at step {i}")
            s[upper.pop(step.weight)] = i
    lower: list[int] = []  # descending
    for i in range(n, 0, -1):
        step = path.steps[i - 1]
        if step.kind in (RISE, COLOURED):
            if step.weight >= len(lower):
                raise InvariantError(f"selection out of range at step {i}")
            s[lower.pop(step.weight)] = i
        if step.kind in (FALL, COLOURED):
            lower.append(i)
    if upper or lower:
        raise InvariantError("unresolved arcs at the end of the path")
    return Permutation(tuple(s[1:]))


# --- asymmetric wedge and weighted Motzkin paths -----------------------------


def _asym_rule(steps: list[Step], m: int) -> str:
    first, second = steps[m], steps[m + 1]
    if first.kind == LEVEL:
        if second == L0:
            steps[m : m + 2] = [R0, D0]
            return "ii"
        if second == D0:
            steps[m : m + 2] = [Step(COLOURED, 0), D0]
            return "iii"
        steps[m : m + 2] = [second, first]
        return "i"
    steps[m : m + 2] = [Step(second.kind, second.weight + 1), D0]
    return "iv"


def _asym_unrule(steps: list[Step], m: int) -> str:
    x, last = steps[m - 1], steps[m]
    if last == L0:
        steps[m - 1 : m + 1] = [L0, x]
        return "i"
    if x == R0:
        steps[m - 1 : m + 1] = [L0, L0]
        return "ii"
    if x == Step(COLOURED, 0):
        steps[m - 1 : m + 1] = [L0, D0]
        return "iii"
    if x.weight < 1:
        raise InvariantError(f"cannot undo a rule at position {m + 1}")
    steps[m - 1 : m + 1] = [D0, Step(x.kind, x.weight - 1)]
    return "iv"


def asym_pdsaw_to_motzkin(walk: AsymPdsaw) -> tuple[WeightedMotzkinPath, RuleTrace]:
    steps: list[Step] = []
    trace = []
    for i, y in enumerate(walk.ys, 1):
        steps.insert(0, L0)
        for _ in range(y + i - 1):
            m = _first_zero(steps, (FALL, LEVEL))
            if m + 1 >= len(steps):
                raise InvariantError(f"no step after the first zero closer (east step {i})")
            trace.append(RuleApplication(i, _asym_rule(steps, m), m + 1))
    return WeightedMotzkinPath(tuple(steps)), RuleTrace(tuple(trace))


def motzkin_to_asym_pdsaw(path: WeightedMotzkinPath) -> AsymPdsaw:
    steps = list(path.steps)
    n = path.n
    ys = [0] * n
    for i in range(n, 0, -1):
        raises = 0
        m = _first_zero(steps, (FALL, LEVEL))
        while m >= 1:
            _asym_unrule(steps, m)
            raises += 1
            m = _first_zero(steps, (FALL, LEVEL))
        if steps[0] != L0:
            raise InvariantError(f"path does not start with F0 at east step {i}")
        del steps[0]
        ys[i - 1] = -(i - 1) + raises
    return AsymPdsaw(tuple(ys))


# --- Nadeau's bijection -------------------------------------------------------


def nadeau(walk: AsymPdsaw) -> Permutation:
    """s(i) is the h-th largest unused value, h = 1 - (height of east step n-i+1)."""
    n = walk.n
    remaining = list(range(1, n + 1))
    images = []
    for i in range(1, n + 1):
        h = 1 - walk.ys[n - i]
        images.append(remaining.pop(len(remaining) - h))
    return Permutation(tuple(images))


def nadeau_inverse(perm: Permutation) -> AsymPdsaw:
    n = perm.n
    remaining = list(range(1, n + 1))
    ys = [0] * n
    for i, v in enumerate(perm.images, 1):
        idx = remaining.index(v)
        h = len(remaining) - idx
        ys[n - i] = 1 - h
        del remaining[idx]
    return AsymPdsaw(tuple(ys))
