"""Characters, exact root-of-unity sums, the Katz bound, and epsilon*."""

from __future__ import annotations

import cmath
import math
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayley_cliques import (
    Character,
    NoValidTheta,
    NotADivisor,
    NotASubfield,
    OddD,
    RootOfUnitySum,
    TrivialCharacter,
    ZeroArgument,
    ZeroEncountered,
    build_field,
    epsilon_star,
    half_circle_points,
    katz_bound_check,
    line_sum,
    restrict_character,
    unit_root,
    verify_lemma_bound,
)

# ---------------------------------------------------------------------------
# characters

def test_cubic_residue_classes_mod_13(gf13):
    chi = Character(gf13, 3)
    assert chi.chi_class(5) == 0
    classes = {x: chi.chi_class(x) for x in range(1, 13)}
    assert {x for x, c in classes.items() if c == 0} == {1, 5, 8, 12}
    assert sorted(classes.values()).count(0) == 4


def test_character_is_multiplicative(gf81):
    chi = Character(gf81, 8)
    for x in range(1, gf81.q, 5):
        for y in range(1, gf81.q, 7):
            lhs = chi.chi_class(gf81.mul(x, y))
            assert lhs == (chi.chi_class(x) + chi.chi_class(y)) % 8


def test_character_value_is_unit_root(gf13):
    chi = Character(gf13, 4)
    for x in range(1, 13):
        v = chi.value(x)
        assert abs(abs(v) - 1.0) < 1e-12
        assert abs(v - unit_root(4, chi.chi_class(x))) < 1e-12


def test_character_errors(gf13):
    with pytest.raises(NotADivisor):
        Character(gf13, 5)
    with pytest.raises(ZeroArgument):
        Character(gf13, 3).chi_class(0)
    assert Character(gf13, 1).is_trivial


def test_nontrivial_character_sums_to_zero(gf81):
    for d in (2, 4, 5, 8, 16, 80):
        chi = Character(gf81, d)
        acc = RootOfUnitySum.zero(d)
        for x in range(1, gf81.q):
            acc.add_class(chi.chi_class(x))
        assert acc.total == gf81.q - 1
        assert acc.counts == [(gf81.q - 1) // d] * d
        assert acc.magnitude() < 1e-9


def test_root_sum_matches_direct_complex_arithmetic():
    acc = RootOfUnitySum.zero(6)
    for j, mult in [(0, 3), (1, 2), (4, 5), (5, 1)]:
        acc.add_class(j, mult)
    direct = 3 + 2 * unit_root(6, 1) + 5 * unit_root(6, 4) + unit_root(6, 5)
    assert abs(acc.value() - direct) < 1e-12
    assert abs(acc.magnitude() - abs(direct)) < 1e-12
    assert acc.total == 11


# ---------------------------------------------------------------------------
# line sums and the Katz bound

def test_line_sum_matches_cmath_oracle(gf81):
    chi = Character(gf81, 5)
    base = gf81.subfield_elements(1)
    for theta in (3, 9, 30, 77):
        got = line_sum(chi, theta, base)
        expected = sum(chi.value(gf81.add(theta, a)) for a in base)
        assert got.total == len(base)
        assert abs(got.value() - expected) < 1e-9


def test_line_sum_rejects_zero_term(gf81):
    chi = Character(gf81, 5)
    base = gf81.subfield_elements(1)
    with pytest.raises(ZeroEncountered):
        line_sum(chi, gf81.neg(1), base)


def _katz_oracle_max_ratio(table, r, d):
    """Recompute the scan with plain complex arithmetic."""
    chi = Character(table, d)
    n = table.e // r
    base = table.subfield_elements(r)
    bound = (n - 1) * math.sqrt(table.p**r)
    worst = 0.0
    for theta in table.elements():
        if table.degree_over_base(theta, r) != n:
            continue
        total = sum(chi.value(table.add(theta, a)) for a in base)
        worst = max(worst, abs(total) / bound)
    return worst


@pytest.mark.parametrize("r,d", [(1, 2), (1, 5), (1, 8), (2, 16), (2, 80)])
def test_katz_report_matches_oracle(gf81, r, d):
    report = katz_bound_check(gf81, r, d)
    assert report.bound_satisfied
    assert report.max_ratio <= 1 + 1e-9
    assert abs(report.max_ratio - _katz_oracle_max_ratio(gf81, r, d)) < 1e-9
    assert report.n == 4 // r
    assert abs(report.bound - (report.n - 1) * math.sqrt(3**r)) < 1e-12


def test_katz_worst_theta_is_deterministic(gf81):
    a = katz_bound_check(gf81, 1, 8)
    b = katz_bound_check(gf81, 1, 8)
    assert (a.worst_theta, a.max_ratio) == (b.worst_theta, b.max_ratio)
    assert gf81.degree_over_base(a.worst_theta, 1) == 4


def test_katz_errors(gf81):
    with pytest.raises(TrivialCharacter):
        katz_bound_check(gf81, 1, 1)
    with pytest.raises(NotADivisor):
        katz_bound_check(gf81, 3, 2)
    with pytest.raises(NoValidTheta):
        katz_bound_check(gf81, 4, 2)


# ---------------------------------------------------------------------------
# restriction to subfields

def test_restriction_to_f9_is_nontrivial(gf81):
    chi = Character(gf81, 4)
    restricted, trivial = restrict_character(chi, 2, 1)
    assert not trivial
    assert restricted.generator_class == 2
    assert restricted.order == 2


def test_restriction_to_f3_is_trivial(gf81):
    # (81-1)/(3-1) = 40 and 4 | 40: the clique question for F_3 cannot be
    # settled by this character
    chi = Character(gf81, 4)
    restricted, trivial = restrict_character(chi, 1, 1)
    assert trivial
    assert restricted.generator_class == 0
    assert restricted.order == 1


def test_restriction_agrees_with_parent_on_subfield(gf81):
    chi = Character(gf81, 8)
    restricted, _ = restrict_character(chi, 2, 1)
    h = gf81.pow(gf81.g, gf81.qm1 // (9 - 1))
    y = 1
    for k in range(8):
        assert restricted.class_from_subfield_log(k) == chi.chi_class(y)
        y = gf81.mul(y, h)


def test_restriction_rejects_non_subfield(gf81):
    with pytest.raises(NotASubfield):
        restrict_character(Character(gf81, 4), 3, 1)


# ---------------------------------------------------------------------------
# epsilon-lower-bounded sets

def test_epsilon_single_point_is_one():
    result = epsilon_star([1 + 0j])
    assert result.epsilon_star == pytest.approx(1.0, abs=1e-12)
    assert result.weights == (1.0,)


def test_epsilon_quarter_circle():
    result = epsilon_star([1, 1j])
    assert result.epsilon_star == pytest.approx(math.sqrt(2) / 2, abs=1e-12)


def test_epsilon_antipodal_pair_is_zero():
    result = epsilon_star([1, -1])
    assert result.epsilon_star == 0.0
    assert result.weights == (0.5, 0.5)


def test_epsilon_full_triangle_is_zero():
    result = epsilon_star([unit_root(3, j) for j in range(3)])
    assert result.epsilon_star == 0.0


def test_epsilon_validation():
    with pytest.raises(ValueError):
        epsilon_star([])
    with pytest.raises(ValueError):
        epsilon_star([0.5 + 0j])


@pytest.mark.parametrize("points", [
    [1 + 0j],
    [1, 1j],
    [1, -1],
    half_circle_points(6),
    half_circle_points(8),
    [unit_root(5, j) for j in (0, 1)],
    [unit_root(12, j) for j in (0, 2, 5)],
])
def test_epsilon_weights_attain_the_distance(points):
    result = epsilon_star(points)
    assert len(result.weights) == len(points)
    assert all(w >= -1e-12 for w in result.weights)
    assert math.fsum(result.weights) == pytest.approx(1.0, abs=1e-9)
    combo = sum(w * z for w, z in zip(result.weights, points))
    assert abs(combo) == pytest.approx(result.epsilon_star, abs=1e-9)


@pytest.mark.parametrize("d", [4, 6, 8])
def test_no_multiset_beats_epsilon(d):
    points = half_circle_points(d)
    eps = epsilon_star(points).epsilon_star
    for size in range(1, 7):
        for combo in combinations_with_replacement(points, size):
            assert abs(sum(combo)) / size >= eps - 1e-9


@given(data=st.data())
@settings(max_examples=150, deadline=None)
def test_epsilon_shrinks_when_points_are_added(data):
    d = data.draw(st.integers(2, 12))
    classes = sorted(data.draw(st.sets(st.integers(0, d - 1), min_size=1, max_size=d)))
    extra = data.draw(st.integers(0, d - 1))
    base = [unit_root(d, j) for j in classes]
    eps_small = epsilon_star(base).epsilon_star
    eps_big = epsilon_star(base + [unit_root(d, extra)]).epsilon_star
    assert eps_big <= eps_small + 1e-12


def test_duplicate_points_do_not_change_epsilon():
    pts = half_circle_points(6)
    assert epsilon_star(pts + pts).epsilon_star == pytest.approx(
        epsilon_star(pts).epsilon_star, abs=1e-12
    )


# ---------------------------------------------------------------------------
# the half-circle set bound

def _chord_distance(d: int) -> float:
    # distance from the origin to the segment joining the two extreme
    # points of the half-circle arc
    lo, hi = unit_root(d, 0), unit_root(d, d // 2 - 1)
    t = max(0.0, min(1.0, ((-lo) * (hi - lo).conjugate()).real / abs(hi - lo) ** 2))
    return abs(lo + t * (hi - lo))


@pytest.mark.parametrize("d", [4, 6, 10, 62])
def test_half_circle_epsilon_is_the_chord_distance(d):
    eps = epsilon_star(half_circle_points(d)).epsilon_star
    assert eps == pytest.approx(_chord_distance(d), abs=1e-9)
    assert eps == pytest.approx(math.sin(math.pi / d), abs=1e-9)


@pytest.mark.parametrize("d", [4, 6, 62])
def test_lemma_bound_report(d):
    report = verify_lemma_bound(d)
    assert report.d == d
    assert report.analytic == pytest.approx(math.sin(math.pi / d), abs=1e-12)
    assert report.paper_bound == pytest.approx(math.pi / d - math.pi / d**2, abs=1e-12)
    assert report.epsilon_star >= report.paper_bound


def test_lemma_bound_validation():
    with pytest.raises(OddD):
        verify_lemma_bound(7)
    with pytest.raises(ValueError):
        verify_lemma_bound(2)
    with pytest.raises(OddD):
        half_circle_points(5)
