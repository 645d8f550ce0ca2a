"""Brace structure built from the degree-truncated pre-Lie algebra."""

import random
from fractions import Fraction

import pytest

from ordexp.brace import (
    GradedPreLieElement,
    bch,
    brace_mul,
    circle_assoc_residual,
    exp_flow,
    flow_composition_residual,
    left_brace_residual,
    omega_map,
    w_map,
)
from ordexp.errors import BackendMismatch, DimensionMismatch
from ordexp.expansion import FORWARD, SiteOperatorFamily, magnus_oracle, prefix_monodromy
from ordexp.freealg import FreeElement
from ordexp.matrix import Matrix
from ordexp.rotabaxter import SiteSequence, prelie_left
from ordexp.series import AlphaSeries


def seq_prelie(a, b):
    return prelie_left(a, b)


def assoc_prod(a, b):
    return a * b


def trivial_prod(a, b):
    return a * Fraction(0)


def free_seq(n_sites, tag):
    return SiteSequence(
        [FreeElement.gen(f"{tag}{n}", site=n) for n in range(1, n_sites + 1)]
    )


def rand_seq(rng, n_sites=3, size=2):
    return SiteSequence(
        [
            Matrix(
                [
                    [Fraction(rng.randint(-2, 2)) for _ in range(size)]
                    for _ in range(size)
                ]
            )
            for _ in range(n_sites)
        ]
    )


def rand_element(rng, order=4, degrees=(1, 2)):
    comps = {d: rand_seq(rng) for d in degrees}
    return GradedPreLieElement(order, comps, seq_prelie)


def test_constructor_validation():
    s = free_seq(2, "a")
    with pytest.raises(DimensionMismatch):
        GradedPreLieElement(0, {1: s}, seq_prelie)
    with pytest.raises(DimensionMismatch):
        GradedPreLieElement(3, {0: s}, seq_prelie)
    with pytest.raises(DimensionMismatch):
        GradedPreLieElement(3, {}, seq_prelie)
    elt = GradedPreLieElement(3, {5: s, 1: s}, seq_prelie)
    assert 5 not in elt.components  # beyond truncation


def test_mismatched_products_rejected():
    s = free_seq(2, "a")
    x = GradedPreLieElement(3, {1: s}, seq_prelie)
    y = GradedPreLieElement(3, {1: s}, assoc_prod)
    with pytest.raises(BackendMismatch):
        x + y


def test_trivial_product_flows_are_identity():
    a = GradedPreLieElement(4, {1: free_seq(2, "a")}, trivial_prod)
    b = GradedPreLieElement(4, {2: free_seq(2, "b")}, trivial_prod)
    assert w_map(a) == a
    assert omega_map(a) == a
    assert brace_mul(a, b) == a + b
    assert bch(a, b) == a + b


def test_w_printed_coefficients():
    s = free_seq(3, "a")
    a = GradedPreLieElement.homogeneous(s, 1, 3, seq_prelie)
    w = w_map(a)
    ss = prelie_left(s, s)
    assert w.component(1) == s
    assert w.component(2) == Fraction(1, 2) * ss
    assert w.component(3) == Fraction(1, 6) * prelie_left(s, ss)


def test_omega_printed_coefficients():
    s = free_seq(3, "a")
    a = GradedPreLieElement.homogeneous(s, 1, 3, seq_prelie)
    om = omega_map(a)
    ss = prelie_left(s, s)
    assert om.component(1) == s
    assert om.component(2) == Fraction(-1, 2) * ss
    expected3 = Fraction(1, 4) * prelie_left(ss, s) + Fraction(1, 12) * prelie_left(s, ss)
    assert om.component(3) == expected3


def test_round_trips_matrix_backend():
    rng = random.Random(41)
    for _ in range(6):
        a = rand_element(rng, order=4)
        assert omega_map(w_map(a)) == a
        assert w_map(omega_map(a)) == a


def test_round_trips_free_backend():
    a = GradedPreLieElement(
        4, {1: free_seq(2, "a"), 2: free_seq(2, "u")}, seq_prelie
    )
    assert omega_map(w_map(a)) == a
    assert w_map(omega_map(a)) == a


def test_bch_scalar_sequences_commute():
    a = GradedPreLieElement.homogeneous(
        SiteSequence([Fraction(1), Fraction(2)]), 1, 3, seq_prelie
    )
    b = GradedPreLieElement.homogeneous(
        SiteSequence([Fraction(5), Fraction(-1)]), 1, 3, seq_prelie
    )
    assert a.bracket(b).is_zero()
    assert bch(a, b) == a + b


def test_bch_degree_two():
    rng = random.Random(43)
    a = GradedPreLieElement.homogeneous(rand_seq(rng), 1, 2, seq_prelie)
    b = GradedPreLieElement.homogeneous(rand_seq(rng), 1, 2, seq_prelie)
    assert bch(a, b) == a + b + a.bracket(b).scale(Fraction(1, 2))


def test_bch_degree_three_hand_terms():
    rng = random.Random(47)
    a = GradedPreLieElement.homogeneous(rand_seq(rng), 1, 3, seq_prelie)
    b = GradedPreLieElement.homogeneous(rand_seq(rng), 1, 3, seq_prelie)
    c = bch(a, b)
    expected3 = (
        a.bracket(a.bracket(b)) + b.bracket(b.bracket(a))
    ).scale(Fraction(1, 12))
    assert c.component(3) == expected3.component(3)


def test_bch_matches_associative_log_through_degree_four():
    # in an associative carrier the induced bracket is the commutator, so
    # the bracket-reduced series must reproduce log(exp(x)exp(y)) verbatim
    x = GradedPreLieElement.homogeneous(FreeElement.gen("x"), 1, 4, assoc_prod)
    y = GradedPreLieElement.homogeneous(FreeElement.gen("y"), 1, 4, assoc_prod)
    c = bch(x, y)
    one = FreeElement.one()
    ex = AlphaSeries.from_parts(4, {1: FreeElement.gen("x")}, like=one).exp()
    ey = AlphaSeries.from_parts(4, {1: FreeElement.gen("y")}, like=one).exp()
    logs = (ex * ey).log()
    for k in range(1, 5):
        assert c.component(k) == logs.coeff(k)


def test_zero_is_circle_identity():
    rng = random.Random(53)
    b = rand_element(rng)
    zero = b.zero()
    assert brace_mul(zero, b) == b
    assert brace_mul(b, zero) == b


def test_left_brace_law():
    rng = random.Random(59)
    for _ in range(6):
        a, b, c = (rand_element(rng) for _ in range(3))
        assert left_brace_residual(a, b, c).is_zero()


def test_circle_associative():
    rng = random.Random(61)
    for _ in range(4):
        a, b, c = (rand_element(rng) for _ in range(3))
        assert circle_assoc_residual(a, b, c).is_zero()


def test_flow_composition_lemma():
    rng = random.Random(67)
    for _ in range(6):
        a = rand_element(rng)
        b = rand_element(rng)
        assert flow_composition_residual(a, b).is_zero()


def test_brace_mul_expands_as_printed():
    rng = random.Random(71)
    a = rand_element(rng, order=3, degrees=(1,))
    b = rand_element(rng, order=3, degrees=(1, 2))
    om = omega_map(a)
    expected = a + b + om.prod(b)
    expected = expected + om.prod(om.prod(b)).scale(Fraction(1, 2))
    expected = expected + om.prod(om.prod(om.prod(b))).scale(Fraction(1, 6))
    assert brace_mul(a, b) == expected


def test_omega_gives_per_site_magnus_increments():
    # the per-site pieces of Omega on a linear chain are the increments of
    # the prefix-product logarithms, and they sum to the full expansion
    rng = random.Random(73)
    n_sites = 4
    entries = {}
    for n in range(1, n_sites + 1):
        entries[(n, 1)] = Matrix(
            [[Fraction(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)]
        )
    fam = SiteOperatorFamily(n_sites, entries, direction=FORWARD)
    order = 3
    a = GradedPreLieElement.homogeneous(
        fam.degree_sequence(1), 1, order, seq_prelie
    )
    om = omega_map(a)
    logs = [
        prefix_monodromy(fam, j, order).log() for j in range(1, n_sites + 2)
    ]
    for k in range(1, order + 1):
        comp = om.component(k)
        for n in range(1, n_sites + 1):
            assert comp.at(n) == logs[n].coeff(k) - logs[n - 1].coeff(k)
    totals = magnus_oracle(fam, order)
    for k in range(1, order + 1):
        acc = None
        for n in range(1, n_sites + 1):
            acc = om.component(k).at(n) if acc is None else acc + om.component(k).at(n)
        assert acc == totals[k - 1]


def test_exp_flow_is_group_action_inverse():
    rng = random.Random(79)
    a = rand_element(rng, degrees=(1,))
    b = rand_element(rng)
    moved = exp_flow(a, b)
    back = exp_flow(a.scale(Fraction(-1)), moved)
    assert back == b
