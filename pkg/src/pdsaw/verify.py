"""Exhaustive verification suites.

Each suite is split into independent units (usually one object size), so a
run can be spread over worker processes and the reports merged afterwards.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bijections as bij
from . import core, qseries, stats
from .core import ASYM, DYCK, MATCHING, MOTZKIN, PERMUTATION, SYM, render_text

MAX_STORED_FAILURES = 100


@dataclass
class VerifyReport:
    suite: str
    sizes: tuple[int, int]
    cases: int = 0
    checks: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    failure_count: int = 0
    seconds: float = 0.0
    diagnostics: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def fail(self, inp, expected, actual):
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append((str(inp), str(expected), str(actual)))

    def expect(self, inp, expected, actual):
        self.checks += 1
        if expected != actual:
            self.fail(inp, expected, actual)

    def merge(self, other: "VerifyReport"):
        self.cases += other.cases
        self.checks += other.checks
        self.failure_count += other.failure_count
        room = MAX_STORED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[: max(room, 0)])
        for k, v in other.diagnostics.items():
            self.diagnostics[k] = v

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "sizes": list(self.sizes),
            "cases": self.cases,
            "checks": self.checks,
            "ok": self.ok,
            "failure_count": self.failure_count,
            "failures": [
                {"input": i, "expected": e, "actual": a} for i, e, a in self.failures
            ],
            "seconds": round(self.seconds, 3),
            **({"diagnostics": self.diagnostics} if self.diagnostics else {}),
        }


def _unit(name: str, lo: int, hi: int) -> VerifyReport:
    return VerifyReport(name, (lo, hi))


# --- per-size checks ----------------------------------------------------------


def check_counts(n: int) -> VerifyReport:
    r = _unit("counts", n, n)
    for kind in core.KINDS:
        previous = None
        emitted = 0
        for obj in core.enumerate_objects(kind, n):
            emitted += 1
            r.cases += 1
            text = render_text(obj)
            violations = core.validate(obj)
            if violations:
                r.fail(text, "valid", violations)
            if previous is not None and not previous < text:
                r.fail(text, f"after {previous}", "out of order")
            previous = text
        r.expect(f"{kind} n={n}", core.count_objects(kind, n), emitted)
    return r


def check_roundtrip_sym(n: int) -> VerifyReport:
    r = _unit("roundtrip", n, n)
    for w in core.enumerate_objects(SYM, n):
        r.cases += 1
        d, _ = bij.sym_pdsaw_to_dyck(w)
        r.expect(render_text(w), w, bij.dyck_to_sym_pdsaw(d))
    for d in core.enumerate_objects(DYCK, n):
        r.cases += 1
        text = render_text(d)
        r.expect(text, d, bij.sym_pdsaw_to_dyck(bij.dyck_to_sym_pdsaw(d))[0])
        r.expect(text, d, bij.matching_to_dyck(bij.dyck_to_matching(d)))
    for m in core.enumerate_objects(MATCHING, n):
        r.cases += 1
        r.expect(render_text(m), m, bij.dyck_to_matching(bij.matching_to_dyck(m)))
    return r


def check_roundtrip_asym(n: int) -> VerifyReport:
    r = _unit("roundtrip", n, n)
    for w in core.enumerate_objects(ASYM, n):
        r.cases += 1
        text = render_text(w)
        m, _ = bij.asym_pdsaw_to_motzkin(w)
        r.expect(text, w, bij.motzkin_to_asym_pdsaw(m))
        r.expect(text, w, bij.nadeau_inverse(bij.nadeau(w)))
    for m in core.enumerate_objects(MOTZKIN, n):
        r.cases += 1
        text = render_text(m)
        r.expect(text, m, bij.asym_pdsaw_to_motzkin(bij.motzkin_to_asym_pdsaw(m))[0])
        r.expect(text, m, bij.perm_to_motzkin(bij.motzkin_to_perm(m)))
    for p in core.enumerate_objects(PERMUTATION, n):
        r.cases += 1
        text = render_text(p)
        r.expect(text, p, bij.motzkin_to_perm(bij.perm_to_motzkin(p)))
        r.expect(text, p, bij.nadeau(bij.nadeau_inverse(p)))
    return r


def _doubled_reverse(sizes):
    return tuple(2 * s for s in reversed(sizes))


def check_thm1(n: int) -> VerifyReport:
    r = _unit("thm1", n, n)
    for w in core.enumerate_objects(SYM, n):
        r.cases += 1
        text = render_text(w)
        d, trace = bij.sym_pdsaw_to_dyck(w)
        m = bij.dyck_to_matching(d)
        r.expect(text + " north/nestings", stats.north_steps(w), stats.nestings(m))
        r.expect(text + " north/weight", stats.north_steps(w), stats.total_weight(d))
        r.expect(
            text + " area/crossings parity",
            stats.area_sym(w) % 2,
            stats.crossings(m) % 2,
        )
        r.expect(
            text + " area/comp weight parity",
            stats.area_sym(w) % 2,
            stats.complementary_weight(d) % 2,
        )
        if n:
            r.expect(text + " last descent", stats.last_descent(w), m(1) - 1)
            r.expect(text + " first zero", stats.last_descent(w) + 1, stats.first_zero_position(d))
        r.expect(
            text + " factors",
            _doubled_reverse(stats.factor_sizes(w)),
            stats.factor_sizes(m),
        )
        r.expect(text + " automaton", True, bij.trace_accepted(trace, bij.SYM_AUTOMATON))
    return r


def check_thm2(n: int) -> VerifyReport:
    r = _unit("thm2", n, n)
    for w in core.enumerate_objects(ASYM, n):
        r.cases += 1
        text = render_text(w)
        path, trace = bij.asym_pdsaw_to_motzkin(w)
        p = bij.motzkin_to_perm(path)
        r.expect(text + " north/nestings", stats.north_steps(w), stats.nestings(p))
        r.expect(text + " north/weight", stats.north_steps(w), stats.total_weight(path))
        if n:
            r.expect(text + " last descent", stats.last_descent(w), p(1))
            r.expect(text + " first zero", stats.last_descent(w), stats.first_zero_position(path))
        rev = tuple(reversed(stats.factor_sizes(w)))
        r.expect(text + " factors", rev, stats.factor_sizes(p))
        r.expect(text + " path factors", rev, stats.factor_sizes(path))
        r.expect(text + " automaton", True, bij.trace_accepted(trace, bij.ASYM_AUTOMATON))
    return r


def check_thm3(n: int) -> VerifyReport:
    r = _unit("thm3", n, n)
    for w in core.enumerate_objects(ASYM, n):
        r.cases += 1
        text = render_text(w)
        p = bij.nadeau(w)
        r.expect(text + " north/31-2", stats.north_steps(w), stats.pattern_31_2(p))
        if n:
            r.expect(text + " last descent", stats.last_descent(w), p(1))
        r.expect(text + " factors", tuple(reversed(stats.factor_sizes(w))), stats.factor_sizes(p))
    return r


def check_kz(n: int) -> VerifyReport:
    r = _unit("kz", n, n)
    for m in core.enumerate_objects(MATCHING, n):
        r.cases += 1
        text = render_text(m)
        d = bij.matching_to_dyck(m)
        r.expect(text + " valid path", [], core.validate(d))
        r.expect(text + " nestings", stats.nestings(m), stats.total_weight(d))
        r.expect(text + " crossings", stats.crossings(m), stats.complementary_weight(d))
        if n:
            r.expect(text + " partner(1)", m(1), stats.first_zero_position(d))
        r.expect(text + " factors", stats.factor_sizes(m), stats.factor_sizes(d))
    return r


def check_fz(n: int) -> VerifyReport:
    r = _unit("fz", n, n)
    for p in core.enumerate_objects(PERMUTATION, n):
        r.cases += 1
        text = render_text(p)
        path = bij.perm_to_motzkin(p)
        r.expect(text + " valid path", [], core.validate(path))
        r.expect(text + " nestings", stats.nestings(p), stats.total_weight(path))
        r.expect(text + " crossings", stats.crossings(p), stats.complementary_weight(path))
        if n:
            r.expect(text + " s(1)", p(1), stats.first_zero_position(path))
        r.expect(text + " factors", stats.factor_sizes(p), stats.factor_sizes(path))
    return r


def check_touchard(n: int) -> VerifyReport:
    r = _unit("touchard", n, n)
    formula = qseries.touchard_riordan(n)
    label = f"n={n}"
    r.expect(label + " matchings/nestings", formula, qseries.statistic_distribution(MATCHING, "nestings", n))
    r.expect(label + " matchings/crossings", formula, qseries.statistic_distribution(MATCHING, "crossings", n))
    r.expect(label + " walks/north", formula, qseries.statistic_distribution(SYM, "north", n))
    r.expect(label + " q=1", core.count_objects(MATCHING, n), formula.at_one())
    r.cases = r.checks
    return r


def check_williams(n: int) -> VerifyReport:
    r = _unit("williams", n, n)
    formula = qseries.williams(n)
    label = f"n={n}"
    r.expect(label + " perms/nestings", formula, qseries.statistic_distribution(PERMUTATION, "nestings", n))
    r.expect(label + " perms/crossings", formula, qseries.statistic_distribution(PERMUTATION, "crossings", n))
    r.expect(label + " perms/31-2", formula, qseries.statistic_distribution(PERMUTATION, "pattern31_2", n))
    r.expect(label + " walks/north", formula, qseries.statistic_distribution(ASYM, "north", n))
    r.expect(label + " q=1", core.count_objects(PERMUTATION, n), formula.at_one())
    r.cases = r.checks
    return r


def check_cf(n: int) -> VerifyReport:
    r = _unit("cf", n, n)
    label = f"n={n}"
    herm = qseries.touchard_riordan(n)
    r.expect(label + " hermite fraction", herm, qseries.cf_moments("hermite", n))
    r.expect(label + " hermite transfer", herm, qseries.transfer_distribution("hermite", n))
    lag_cf = qseries.cf_moments("laguerre", n)
    r.expect(label + " laguerre transfer", lag_cf, qseries.transfer_distribution("laguerre", n))
    if n >= 1:
        r.expect(label + " laguerre fraction", qseries.williams(n), lag_cf)
    r.cases = r.checks
    return r


FREE_PREFIX = [1, 1, 3, 5, 13]


def check_free_gf(order: int) -> VerifyReport:
    r = _unit("free-gf", 0, order)
    series = qseries.free_walk_series(order).integer_coeffs()
    dp = core.count_free_sym_walks(order)
    for k, (a, b) in enumerate(zip(series, dp)):
        r.expect(f"t^{k}", b, a)
    for k, v in enumerate(FREE_PREFIX[: order + 1]):
        r.expect(f"t^{k} printed", v, series[k])
    r.cases = r.checks
    return r


def _symmetric(joint: dict) -> bool:
    return all(joint.get((b, a), 0) == c for (a, b), c in joint.items())


def check_symmetry_matchings(n: int) -> VerifyReport:
    r = _unit("symmetry", n, n)
    joint = qseries.joint_distribution(MATCHING, n)
    r.expect(f"matchings n={n}", True, _symmetric(joint))
    r.cases = r.checks
    return r


def check_symmetry_permutations(n: int) -> VerifyReport:
    r = _unit("symmetry", n, n)
    joint = qseries.joint_distribution(PERMUTATION, n)
    r.expect(f"permutations n={n}", True, _symmetric(joint))
    r.cases = r.checks
    return r


# --- suites -------------------------------------------------------------------

# suite -> list of (per-unit check, default largest size, smallest size)
SUITES = {
    "counts": [(check_counts, 7, 0)],
    "roundtrip": [(check_roundtrip_sym, 6, 0), (check_roundtrip_asym, 7, 0)],
    "thm1": [(check_thm1, 6, 0)],
    "thm2": [(check_thm2, 7, 0)],
    "thm3": [(check_thm3, 7, 0)],
    "kz": [(check_kz, 6, 0)],
    "fz": [(check_fz, 7, 0)],
    "touchard": [(check_touchard, 7, 0)],
    "williams": [(check_williams, 7, 1)],
    "cf": [(check_cf, 7, 0)],
    "free-gf": [(check_free_gf, 18, None)],
    "symmetry": [(check_symmetry_matchings, 5, 0), (check_symmetry_permutations, 6, 0)],
}


def _units(suite: str, max_n: int | None):
    for fn, default, lo in SUITES[suite]:
        top = default if max_n is None else max_n
        if lo is None:
            yield fn, top
        else:
            for n in range(lo, top + 1):
                yield fn, n


def _call(job):
    fn, n = job
    return fn(n)


def run_suite(suite: str, max_n: int | None = None, jobs: int = 1) -> VerifyReport:
    """Run one suite over every size up to ``max_n`` (suite defaults if None)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    start = time.perf_counter()
    units = list(_units(suite, max_n))
    report = VerifyReport(suite, (0, 0))
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_call, units))
    else:
        parts = [_call(u) for u in units]
    report.sizes = (min(p.sizes[0] for p in parts), max(p.sizes[1] for p in parts))
    for part in parts:
        report.merge(part)
    report.seconds = time.perf_counter() - start
    return report


def nadeau_agreement(max_n: int) -> dict:
    """How often Nadeau's map equals the Motzkin-route composition, per size."""
    out = {}
    for n in range(max_n + 1):
        agree = total = 0
        for w in core.enumerate_objects(ASYM, n):
            total += 1
            via_path = bij.motzkin_to_perm(bij.asym_pdsaw_to_motzkin(w)[0])
            agree += via_path == bij.nadeau(w)
        out[str(n)] = {"agree": agree, "total": total}
    return out
