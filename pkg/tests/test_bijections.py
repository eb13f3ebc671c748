import pytest
from hypothesis import given, strategies as st

from worked_examples import DYCK_A, MATCHING_A, MOTZKIN_B, PERM_B, WALK_A, WALK_B
from pdsaw import bijections as bij
from pdsaw import stats
from pdsaw.core import (
    ASYM,
    DYCK,
    MATCHING,
    MOTZKIN,
    PERMUTATION,
    SYM,
    AsymPdsaw,
    Matching,
    Permutation,
    SymPdsaw,
    enumerate_objects,
    parse,
    render_text,
    validate,
)


def text(obj):
    return render_text(obj)


# --- matchings and weighted Dyck paths ------------------------------------------


def test_example_matching_to_dyck():
    assert text(bij.matching_to_dyck(parse(MATCHING_A))) == DYCK_A


def test_example_dyck_to_matching():
    assert text(bij.dyck_to_matching(parse(DYCK_A))) == MATCHING_A


@pytest.mark.parametrize(
    "matching, path",
    [
        ("match:1-2", "dyck:U D0"),
        ("match:1-4,2-3", "dyck:U U D1 D0"),
        ("match:1-3,2-4", "dyck:U U D0 D0"),
    ],
)
def test_small_matchings(matching, path):
    assert text(bij.matching_to_dyck(parse(matching))) == path
    assert text(bij.dyck_to_matching(parse(path))) == matching


# --- walks and weighted Dyck paths --------------------------------------------


def test_example_walk_to_dyck():
    path, trace = bij.sym_pdsaw_to_dyck(parse(WALK_A))
    assert text(path) == DYCK_A
    assert bij.trace_accepted(trace, bij.SYM_AUTOMATON)


def test_example_dyck_to_walk():
    assert text(bij.dyck_to_sym_pdsaw(parse(DYCK_A))) == WALK_A


@pytest.mark.parametrize(
    "ys, path, rules",
    [
        ((0,), "dyck:U D0", []),
        ((0, 0), "dyck:U U D0 D0", ["I"]),
        ((0, 1), "dyck:U U D1 D0", ["I", "III"]),
        ((0, -1), "dyck:U D0 U D0", []),
    ],
)
def test_small_walks(ys, path, rules):
    d, trace = bij.sym_pdsaw_to_dyck(SymPdsaw(ys))
    assert text(d) == path
    assert trace.labels() == rules
    assert bij.dyck_to_sym_pdsaw(d).ys == ys


def test_crossing_matching_from_two_step_walk():
    d, _ = bij.sym_pdsaw_to_dyck(SymPdsaw((0, 0)))
    m = bij.dyck_to_matching(d)
    assert m == Matching.from_pairs([(1, 3), (2, 4)])
    assert (stats.nestings(m), stats.crossings(m), m(1)) == (0, 1, 3)


# --- permutations and weighted Motzkin paths ------------------------------------


def test_example_perm_to_motzkin():
    assert text(bij.perm_to_motzkin(parse(PERM_B))) == MOTZKIN_B


def test_example_motzkin_to_perm():
    assert text(bij.motzkin_to_perm(parse(MOTZKIN_B))) == PERM_B


@pytest.mark.parametrize(
    "perm, path",
    [
        ("perm:1 2 3", "motzkin:F0 F0 F0"),
        ("perm:2 1", "motzkin:U0 D0"),
        ("perm:3 2 1", "motzkin:U0 F1 D0"),
        ("perm:1", "motzkin:F0"),
    ],
)
def test_small_permutations(perm, path):
    assert text(bij.perm_to_motzkin(parse(perm))) == path
    assert text(bij.motzkin_to_perm(parse(path))) == perm


# --- walks and weighted Motzkin paths -------------------------------------------


def test_example_walk_to_motzkin():
    path, trace = bij.asym_pdsaw_to_motzkin(parse(WALK_B))
    assert text(path) == MOTZKIN_B
    assert bij.trace_accepted(trace, bij.ASYM_AUTOMATON)


def test_example_motzkin_to_walk():
    assert text(bij.motzkin_to_asym_pdsaw(parse(MOTZKIN_B))) == WALK_B


@pytest.mark.parametrize(
    "ys, path, rules",
    [
        ((0,), "motzkin:F0", []),
        ((0, 0), "motzkin:U0 D0", ["ii"]),
        ((0, -1), "motzkin:F0 F0", []),
        ((0, -1, 0), "motzkin:U0 F1 D0", ["ii", "iv"]),
    ],
)
def test_small_asym_walks(ys, path, rules):
    m, trace = bij.asym_pdsaw_to_motzkin(AsymPdsaw(ys))
    assert text(m) == path
    assert trace.labels() == rules
    assert bij.motzkin_to_asym_pdsaw(m).ys == ys


def test_two_step_walk_gives_transposition():
    m, _ = bij.asym_pdsaw_to_motzkin(AsymPdsaw((0, 0)))
    assert bij.motzkin_to_perm(m) == Permutation((2, 1))


# --- Nadeau's map ---------------------------------------------------------------


@pytest.mark.parametrize("ys, images", [((0,), (1,)), ((0, -1, -1), (2, 1, 3))])
def test_nadeau_small(ys, images):
    assert bij.nadeau(AsymPdsaw(ys)) == Permutation(images)
    assert bij.nadeau_inverse(Permutation(images)) == AsymPdsaw(ys)


def test_nadeau_example_first_value():
    perm = bij.nadeau(parse(WALK_B))
    assert perm(1) == 7
    assert stats.pattern_31_2(perm) == 4


# --- exhaustive round trips -----------------------------------------------------


@pytest.mark.parametrize("n", range(5))
def test_sym_side_round_trips(n):
    for w in enumerate_objects(SYM, n):
        d, trace = bij.sym_pdsaw_to_dyck(w)
        assert validate(d) == []
        assert bij.dyck_to_sym_pdsaw(d) == w
        assert bij.trace_accepted(trace, bij.SYM_AUTOMATON)
    for d in enumerate_objects(DYCK, n):
        assert bij.sym_pdsaw_to_dyck(bij.dyck_to_sym_pdsaw(d))[0] == d
        assert bij.matching_to_dyck(bij.dyck_to_matching(d)) == d
    for m in enumerate_objects(MATCHING, n):
        assert bij.dyck_to_matching(bij.matching_to_dyck(m)) == m


def test_all_105_dyck_paths_round_trip():
    paths = list(enumerate_objects(DYCK, 4))
    assert len(paths) == 105
    assert all(bij.sym_pdsaw_to_dyck(bij.dyck_to_sym_pdsaw(d))[0] == d for d in paths)


@pytest.mark.parametrize("n", range(6))
def test_asym_side_round_trips(n):
    for w in enumerate_objects(ASYM, n):
        m, trace = bij.asym_pdsaw_to_motzkin(w)
        assert validate(m) == []
        assert bij.motzkin_to_asym_pdsaw(m) == w
        assert bij.trace_accepted(trace, bij.ASYM_AUTOMATON)
        assert bij.nadeau_inverse(bij.nadeau(w)) == w
    for m in enumerate_objects(MOTZKIN, n):
        assert bij.asym_pdsaw_to_motzkin(bij.motzkin_to_asym_pdsaw(m))[0] == m
        assert bij.perm_to_motzkin(bij.motzkin_to_perm(m)) == m
    for p in enumerate_objects(PERMUTATION, n):
        assert bij.motzkin_to_perm(bij.perm_to_motzkin(p)) == p


def test_nadeau_inverse_on_all_of_s6():
    perms = list(enumerate_objects(PERMUTATION, 6))
    assert len(perms) == 720
    assert all(bij.nadeau(bij.nadeau_inverse(p)) == p for p in perms)


def test_trace_rejected_when_edge_missing():
    bad = bij.RuleTrace((bij.RuleApplication(1, "I", 2), bij.RuleApplication(1, "IV", 3)))
    assert not bij.trace_accepted(bad, bij.SYM_AUTOMATON)
    wrong_start = bij.RuleTrace((bij.RuleApplication(1, "iv", 1),))
    assert not bij.trace_accepted(wrong_start, bij.ASYM_AUTOMATON)


# --- property tests at larger sizes --------------------------------------------


@st.composite
def walks(draw, cls, upper, max_n=14):
    n = draw(st.integers(0, max_n))
    return cls(tuple(draw(st.integers(-(i - 1), (i - 1) if upper else 0)) for i in range(1, n + 1)))


@st.composite
def perfect_matchings(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    order = draw(st.permutations(range(1, 2 * n + 1)))
    return Matching.from_pairs(zip(order[::2], order[1::2]))


@given(walks(SymPdsaw, upper=True))
def test_sym_walk_statistics_transport(walk):
    d, trace = bij.sym_pdsaw_to_dyck(walk)
    m = bij.dyck_to_matching(d)
    assert bij.dyck_to_sym_pdsaw(d) == walk
    assert stats.north_steps(walk) == stats.nestings(m)
    assert stats.area_sym(walk) % 2 == stats.crossings(m) % 2
    assert stats.factor_sizes(m) == tuple(2 * s for s in reversed(stats.factor_sizes(walk)))
    if walk.n:
        assert stats.last_descent(walk) == m(1) - 1


@given(walks(AsymPdsaw, upper=False))
def test_asym_walk_statistics_transport(walk):
    path, _ = bij.asym_pdsaw_to_motzkin(walk)
    perm = bij.motzkin_to_perm(path)
    assert bij.motzkin_to_asym_pdsaw(path) == walk
    assert stats.north_steps(walk) == stats.nestings(perm)
    nad = bij.nadeau(walk)
    assert stats.north_steps(walk) == stats.pattern_31_2(nad)
    assert bij.nadeau_inverse(nad) == walk
    if walk.n:
        assert stats.last_descent(walk) == perm(1) == nad(1)


@given(perfect_matchings())
def test_matching_round_trip_and_weights(m):
    d = bij.matching_to_dyck(m)
    assert bij.dyck_to_matching(d) == m
    assert stats.total_weight(d) == stats.nestings(m)
    assert stats.complementary_weight(d) == stats.crossings(m)


@given(st.integers(0, 11).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_permutation_round_trip_and_weights(images):
    p = Permutation(tuple(images))
    path = bij.perm_to_motzkin(p)
    assert bij.motzkin_to_perm(path) == p
    assert stats.total_weight(path) == stats.nestings(p)
    assert stats.complementary_weight(path) == stats.crossings(p)
    assert bij.nadeau(bij.nadeau_inverse(p)) == p
