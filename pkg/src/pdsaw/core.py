"""Walks in the two wedges, matchings, permutations and weighted paths.

Every object is an immutable value with a canonical one-line text form::

    sym:0,-1,2          asym:0,0,-2
    match:1-3,2-4       perm:3 1 2
    dyck:U U D1 D0      motzkin:U0 F1 D0

An empty body after the prefix is the size-0 object.  ``enumerate_objects``
streams all objects of a given size in lexicographic order of that text.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Union

SYM = "sym-pdsaw"
ASYM = "asym-pdsaw"
MATCHING = "matching"
PERMUTATION = "permutation"
DYCK = "weighted-dyck"
MOTZKIN = "weighted-motzkin"
KINDS = (SYM, ASYM, MATCHING, PERMUTATION, DYCK, MOTZKIN)

PREFIXES = {
    SYM: "sym",
    ASYM: "asym",
    MATCHING: "match",
    PERMUTATION: "perm",
    DYCK: "dyck",
    MOTZKIN: "motzkin",
}
KIND_OF_PREFIX = {v: k for k, v in PREFIXES.items()}

DEFAULT_CAP = 10**8

RISE, FALL, LEVEL, COLOURED = "U", "D", "F", "C"
STEP_NAMES = {RISE: "Rise", FALL: "Fall", LEVEL: "Level", COLOURED: "ColouredLevel"}


class ParseError(ValueError):
    """Malformed canonical text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(ValueError):
    def __init__(self, kind: str, violations: list[str]):
        super().__init__(f"invalid {kind}: " + "; ".join(violations))
        self.kind = kind
        self.violations = violations


class CapExceeded(RuntimeError):
    """Raised when an enumeration would emit more objects than the cap allows."""


class Step(NamedTuple):
    kind: str
    weight: int = 0

    def token(self, dyck: bool = False) -> str:
        if dyck and self.kind == RISE:
            return RISE
        return f"{self.kind}{self.weight}"


@dataclass(frozen=True)
class SymPdsaw:
    """Walk in the wedge |y| <= x, stored as the heights of its east steps."""

    ys: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ys", tuple(self.ys))

    @property
    def n(self) -> int:
        return len(self.ys)

    def moves(self) -> str:
        """Full step word over E/N/S, ending at (n, -n)."""
        return _moves(self.ys)


@dataclass(frozen=True)
class AsymPdsaw:
    """Walk between the x-axis and y = -x, stored as east-step heights."""

    ys: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ys", tuple(self.ys))

    @property
    def n(self) -> int:
        return len(self.ys)

    def moves(self) -> str:
        return _moves(self.ys)


def _moves(ys) -> str:
    out = []
    targets = list(ys[1:]) + [-len(ys)]
    for y, nxt in zip(ys, targets):
        out.append("E")
        out.append(("N" if nxt > y else "S") * abs(nxt - y))
    return "".join(out)


@dataclass(frozen=True)
class Matching:
    """Perfect matching of {1..2n}; ``partner[p - 1]`` is the partner of p."""

    partner: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "partner", tuple(self.partner))

    @classmethod
    def from_pairs(cls, pairs) -> "Matching":
        pairs = list(pairs)
        partner = [0] * (2 * len(pairs))
        for a, b in pairs:
            partner[a - 1] = b
            partner[b - 1] = a
        return cls(tuple(partner))

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, q) for p, q in enumerate(self.partner, 1) if p < q)

    def __call__(self, p: int) -> int:
        return self.partner[p - 1]


@dataclass(frozen=True)
class Permutation:
    """One-line notation: ``images[i - 1]`` is sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, s in enumerate(self.images, 1):
            inv[s - 1] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class WeightedDyckPath:
    """Dyck path with a weight on each fall; rises carry weight 0."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(*s) for s in self.steps))

    @property
    def n(self) -> int:
        """Number of falls."""
        return sum(1 for s in self.steps if s.kind == FALL)

    def heights(self) -> list[int]:
        return _heights(self.steps)


@dataclass(frozen=True)
class WeightedMotzkinPath:
    """Bicoloured Motzkin path with a weight on every step."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(*s) for s in self.steps))

    @property
    def n(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        return _heights(self.steps)


Obj = Union[SymPdsaw, AsymPdsaw, Matching, Permutation, WeightedDyckPath, WeightedMotzkinPath]

_TYPES = {
    SYM: SymPdsaw,
    ASYM: AsymPdsaw,
    MATCHING: Matching,
    PERMUTATION: Permutation,
    DYCK: WeightedDyckPath,
    MOTZKIN: WeightedMotzkinPath,
}
_KIND_OF_TYPE = {t: k for k, t in _TYPES.items()}


def kind_of(obj: Obj) -> str:
    try:
        return _KIND_OF_TYPE[type(obj)]
    except KeyError:
        raise TypeError(f"not a combinatorial object: {obj!r}") from None


def size_of(obj: Obj) -> int:
    return obj.n


def _heights(steps) -> list[int]:
    h = 0
    out = []
    for s in steps:
        if s.kind == RISE:
            h += 1
        elif s.kind == FALL:
            h -= 1
        out.append(h)
    return out


# --- validation -------------------------------------------------------------


def validate(obj: Obj) -> list[str]:
    """Return the violated invariants of ``obj``; an empty list means valid."""
    kind = kind_of(obj)
    return _VALIDATORS[kind](obj)


def check(obj: Obj) -> Obj:
    violations = validate(obj)
    if violations:
        raise ValidationError(kind_of(obj), violations)
    return obj


def _validate_walk(ys, upper) -> list[str]:
    out = []
    if ys and ys[0] != 0:
        out.append("ys[1] must be 0")
    for i, y in enumerate(ys, 1):
        if not isinstance(y, int):
            out.append(f"ys[{i}] is not an integer")
            continue
        hi = i - 1 if upper else 0
        if i > 1 and not -(i - 1) <= y <= hi:
            out.append(f"ys[{i}]={y} outside [{-(i - 1)}, {hi}]")
    return out


def _validate_sym(w: SymPdsaw) -> list[str]:
    return _validate_walk(w.ys, upper=True)


def _validate_asym(w: AsymPdsaw) -> list[str]:
    return _validate_walk(w.ys, upper=False)


def _validate_matching(m: Matching) -> list[str]:
    size = len(m.partner)
    if size % 2:
        return [f"odd number of points {size}"]
    out = []
    for p, q in enumerate(m.partner, 1):
        if not isinstance(q, int) or not 1 <= q <= size:
            out.append(f"partner({p})={q} outside [1, {size}]")
        elif q == p:
            out.append(f"partner({p}) = {p} is a fixed point")
        elif m.partner[q - 1] != p:
            out.append(f"partner(partner({p})) = {m.partner[q - 1]} != {p}")
    return out


def _validate_permutation(s: Permutation) -> list[str]:
    n = s.n
    out = []
    seen = set()
    for i, v in enumerate(s.images, 1):
        if not isinstance(v, int) or not 1 <= v <= n:
            out.append(f"sigma({i})={v} outside [1, {n}]")
        elif v in seen:
            out.append(f"sigma({i})={v} repeated")
        seen.add(v)
    return out


def _validate_path(steps, allowed, capacity) -> list[str]:
    out = []
    h = 0
    for pos, s in enumerate(steps, 1):
        if s.kind not in allowed:
            out.append(f"step {pos}: kind {s.kind!r} not allowed")
            continue
        if s.kind == RISE:
            h += 1
        elif s.kind == FALL:
            h -= 1
        if h < 0:
            out.append(f"step {pos}: height {h} < 0")
            continue
        if not isinstance(s.weight, int) or s.weight < 0:
            out.append(f"step {pos}: negative weight {s.weight}")
            continue
        cap = capacity(s.kind, h)
        if s.kind == COLOURED and h < 1:
            out.append(f"step {pos}: ColouredLevel at height {h}")
        elif s.weight > cap:
            bound = f"height {h}" if cap == h else f"capacity {cap}"
            out.append(f"step {pos}: {STEP_NAMES[s.kind]} weight {s.weight} > {bound}")
    if h != 0:
        out.append(f"final height {h} != 0")
    return out


def dyck_capacity(kind: str, height: int) -> int:
    return height if kind == FALL else 0


def motzkin_capacity(kind: str, height: int) -> int:
    """Largest admissible weight of a step ending at ``height``."""
    if kind in (FALL, LEVEL):
        return height
    return height - 1


def _validate_dyck(d: WeightedDyckPath) -> list[str]:
    return _validate_path(d.steps, (RISE, FALL), dyck_capacity)


def _validate_motzkin(m: WeightedMotzkinPath) -> list[str]:
    return _validate_path(m.steps, (RISE, FALL, LEVEL, COLOURED), motzkin_capacity)


_VALIDATORS: dict[str, Callable[[Obj], list[str]]] = {
    SYM: _validate_sym,
    ASYM: _validate_asym,
    MATCHING: _validate_matching,
    PERMUTATION: _validate_permutation,
    DYCK: _validate_dyck,
    MOTZKIN: _validate_motzkin,
}


# --- text encoding ----------------------------------------------------------


def render_text(obj: Obj) -> str:
    kind = kind_of(obj)
    return f"{PREFIXES[kind]}:{_body(obj, kind)}"


def _body(obj, kind) -> str:
    if kind in (SYM, ASYM):
        return ",".join(str(y) for y in obj.ys)
    if kind == MATCHING:
        return ",".join(f"{p}-{q}" for p, q in obj.pairs)
    if kind == PERMUTATION:
        return " ".join(str(v) for v in obj.images)
    if kind == DYCK:
        return " ".join(s.token(dyck=True) for s in obj.steps)
    return " ".join(s.token() for s in obj.steps)


def _int(text: str, pos: int) -> int:
    body = text[1:] if text[:1] in "+-" else text
    if not body.isdigit():
        raise ParseError(f"expected an integer, got {text!r}", pos)
    return int(text)


def _tokens(body: str, offset: int, sep: str | None):
    """Yield (token, absolute position) pairs of ``body``."""
    if sep is None:
        pos = 0
        for tok in body.split():
            pos = body.index(tok, pos)
            yield tok, offset + pos
            pos += len(tok)
        return
    if not body.strip():
        return
    pos = 0
    for tok in body.split(sep):
        stripped = tok.strip()
        lead = len(tok) - len(tok.lstrip())
        if not stripped:
            raise ParseError("empty field", offset + pos)
        yield stripped, offset + pos + lead
        pos += len(tok) + 1


def parse(text: str, kind: str | None = None) -> Obj:
    """Parse canonical text and validate the result.

    ``kind`` is optional; when given it must agree with the prefix.
    """
    text = text.strip()
    prefix, colon, body = text.partition(":")
    if not colon:
        raise ParseError("missing ':' after kind prefix", 0)
    if prefix not in KIND_OF_PREFIX:
        raise ParseError(f"unknown prefix {prefix!r}", 0)
    found = KIND_OF_PREFIX[prefix]
    if kind is not None and kind != found:
        raise ParseError(f"expected a {kind}, got prefix {prefix!r}", 0)
    offset = len(prefix) + 1
    obj = _PARSERS[found](body, offset)
    return check(obj)


def _parse_walk(cls):
    def parser(body, offset):
        return cls(tuple(_int(t, p) for t, p in _tokens(body, offset, ",")))
    return parser


def _parse_matching(body, offset):
    pairs = []
    for tok, pos in _tokens(body, offset, ","):
        a, dash, b = tok.partition("-")
        if not dash:
            raise ParseError(f"expected p-q, got {tok!r}", pos)
        pairs.append((_int(a, pos), _int(b, pos + len(a) + 1)))
    size = 2 * len(pairs)
    partner = [0] * size
    for (a, b) in pairs:
        for p, q in ((a, b), (b, a)):
            if not 1 <= p <= size:
                raise ValidationError(MATCHING, [f"point {p} outside [1, {size}]"])
            if partner[p - 1]:
                raise ValidationError(MATCHING, [f"point {p} matched twice"])
            partner[p - 1] = q
    return Matching(tuple(partner))


def _parse_perm(body, offset):
    return Permutation(tuple(_int(t, p) for t, p in _tokens(body, offset, None)))


def _parse_steps(allowed, dyck):
    def parser(body, offset):
        steps = []
        for tok, pos in _tokens(body, offset, None):
            k = tok[0]
            if k not in allowed:
                raise ParseError(f"unknown step {tok!r}", pos)
            if dyck and k == RISE and tok == RISE:
                steps.append(Step(RISE, 0))
                continue
            w = _int(tok[1:], pos + 1) if len(tok) > 1 else None
            if w is None:
                raise ParseError(f"step {tok!r} needs a weight", pos)
            if dyck and k == RISE and w != 0:
                raise ParseError("Dyck rises carry no weight", pos)
            steps.append(Step(k, w))
        return (WeightedDyckPath if dyck else WeightedMotzkinPath)(tuple(steps))
    return parser


_PARSERS = {
    SYM: _parse_walk(SymPdsaw),
    ASYM: _parse_walk(AsymPdsaw),
    MATCHING: _parse_matching,
    PERMUTATION: _parse_perm,
    DYCK: _parse_steps((RISE, FALL), dyck=True),
    MOTZKIN: _parse_steps((RISE, FALL, LEVEL, COLOURED), dyck=False),
}


# --- counting and enumeration -----------------------------------------------


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1 * 3 * ... * (2n-1); 1 for n = 0."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def count_objects(kind: str, n: int) -> int:
    """Closed-form cardinality of the size-``n`` objects of ``kind``.

    Python integers are unbounded, so no overflow can occur.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind in (SYM, MATCHING, DYCK):
        return double_factorial_odd(n)
    if kind in (ASYM, PERMUTATION, MOTZKIN):
        return math.factorial(n)
    raise ValueError(f"unknown kind {kind!r}")


def enumerate_objects(kind: str, n: int, cap: int = DEFAULT_CAP) -> Iterator[Obj]:
    """Stream every valid object of size ``n`` once, in canonical-text order."""
    total = count_objects(kind, n)
    if total > cap:
        raise CapExceeded(f"{total} {kind} objects of size {n} exceed the cap {cap}")
    return _GENERATORS[kind](n)


def _by_token(items, token=str):
    return sorted(items, key=token)


def _gen_walks(cls, upper):
    def gen(n):
        stack_choices = [
            _by_token(range(-(i - 1), (i - 1 if upper else 0) + 1)) for i in range(1, n + 1)
        ]
        yield from _product(cls, stack_choices)
    return gen


def _product(cls, choices):
    for ys in itertools.product(*choices):
        yield cls(ys)


def _gen_matchings(n):
    size = 2 * n
    partner = [0] * size

    def rec():
        try:
            p = partner.index(0) + 1
        except ValueError:
            yield Matching(tuple(partner))
            return
        free = [q for q in range(p + 1, size + 1) if partner[q - 1] == 0]
        for q in _by_token(free):
            partner[p - 1], partner[q - 1] = q, p
            yield from rec()
            partner[p - 1] = partner[q - 1] = 0

    yield from rec()


def _gen_permutations(n):
    images: list[int] = []
    remaining = set(range(1, n + 1))

    def rec():
        if not remaining:
            yield Permutation(tuple(images))
            return
        for v in _by_token(remaining):
            remaining.remove(v)
            images.append(v)
            yield from rec()
            images.pop()
            remaining.add(v)

    yield from rec()


def _gen_dyck(n):
    length = 2 * n
    steps: list[Step] = []

    def rec(h):
        left = length - len(steps)
        if left == 0:
            yield WeightedDyckPath(tuple(steps))
            return
        options = []
        if h + 1 <= left - 1:
            options.append(Step(RISE, 0))
        if h >= 1:
            options.extend(Step(FALL, w) for w in range(h))
        for s in _by_token(options, lambda s: s.token(dyck=True)):
            steps.append(s)
            yield from rec(h + (1 if s.kind == RISE else -1))
            steps.pop()

    yield from rec(0)


def _gen_motzkin(n):
    steps: list[Step] = []

    def rec(h):
        left = n - len(steps)
        if left == 0:
            yield WeightedMotzkinPath(tuple(steps))
            return
        options = []
        if h + 1 <= left - 1:
            options.extend(Step(RISE, w) for w in range(h + 1))
        if h >= 1:
            options.extend(Step(FALL, w) for w in range(h))
        if h <= left - 1:
            options.extend(Step(LEVEL, w) for w in range(h + 1))
            if h >= 1:
                options.extend(Step(COLOURED, w) for w in range(h))
        for s in _by_token(options, Step.token):
            steps.append(s)
            delta = {RISE: 1, FALL: -1}.get(s.kind, 0)
            yield from rec(h + delta)
            steps.pop()

    yield from rec(0)


_GENERATORS = {
    SYM: _gen_walks(SymPdsaw, upper=True),
    ASYM: _gen_walks(AsymPdsaw, upper=False),
    MATCHING: _gen_matchings,
    PERMUTATION: _gen_permutations,
    DYCK: _gen_dyck,
    MOTZKIN: _gen_motzkin,
}


def count_free_sym_walks(max_steps: int) -> list[int]:
    """Count walks in the symmetric wedge by total number of steps.

    Walks start at the origin, use unit E/N/S steps with N never next to S,
    stay in |y| <= x and may end anywhere.  ``c[s]`` counts those with
    exactly ``s`` steps, for s = 0..max_steps.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    # state: (x, y, last move); last is None only for the empty walk
    states: dict[tuple[int, int, str | None], int] = {(0, 0, None): 1}
    counts = [1]
    for _ in range(max_steps):
        nxt: dict[tuple[int, int, str | None], int] = {}
        for (x, y, last), c in states.items():
            for move, (nx, ny) in (("E", (x + 1, y)), ("N", (x, y + 1)), ("S", (x, y - 1))):
                if (move, last) in (("N", "S"), ("S", "N")):
                    continue
                if abs(ny) > nx:
                    continue
                key = (nx, ny, move)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
        counts.append(sum(states.values()))
    return counts
