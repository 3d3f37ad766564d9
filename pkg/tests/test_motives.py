from fractions import Fraction

import pytest

from hassewitt.cohomology import SquareClass
from hassewitt.errors import DomainError
from hassewitt.forms import diagonal_form, invariants
from hassewitt.motives import (
    CompleteIntersectionSpec,
    SymbolicClass,
    betti_middle,
    betti_w_invariants,
    binary_divided_disc,
    cubic_surface_form,
    cubic_surface_refinement,
    delta_expressions,
    epsilon_prime,
    euler_characteristic,
    hypersurface_chi_closed_form,
    hypersurface_w,
    motive_report,
    tau_mod8,
)
from hassewitt.numberfield import Poly, discriminant


def test_spec_validation():
    with pytest.raises(DomainError):
        CompleteIntersectionSpec(3, [2])
    with pytest.raises(DomainError):
        CompleteIntersectionSpec(2, [])
    with pytest.raises(DomainError):
        CompleteIntersectionSpec(2, [0])


def test_euler_characteristic_cubic_surface():
    assert euler_characteristic(CompleteIntersectionSpec(2, [3])) == 9


def test_euler_characteristic_quadrics():
    for n in (2, 4, 6, 8, 10):
        assert euler_characteristic(CompleteIntersectionSpec(n, [2])) == n + 2


def test_euler_characteristic_closed_form():
    for n in (2, 4, 6, 8, 10):
        for d in range(1, 11):
            assert euler_characteristic(CompleteIntersectionSpec(n, [d])) == hypersurface_chi_closed_form(n, d)


def test_euler_characteristic_surfaces_in_p4():
    for d1 in range(1, 7):
        for d2 in range(1, 7):
            chi = euler_characteristic(CompleteIntersectionSpec(2, [d1, d2]))
            expected = d1 * d2 * (d1**2 + d2**2 + d1 * d2 - 5 * (d1 + d2) + 10)
            assert chi == expected


def test_betti_middle():
    assert betti_middle(CompleteIntersectionSpec(2, [3])) == 7
    for n in (2, 4, 6, 8):
        assert betti_middle(CompleteIntersectionSpec(n, [2])) == 2
    assert 2 + Fraction((1 - 3) ** 4 - 1, 3) == 7  # cross-check of the closed form


def test_tau_mod8():
    assert tau_mod8(CompleteIntersectionSpec(2, [3])) == 3
    assert tau_mod8(CompleteIntersectionSpec(4, [2])) == 2
    # d even and n = 2 mod 4 kills the binomial parity
    assert tau_mod8(CompleteIntersectionSpec(2, [2])) == 0
    assert tau_mod8(CompleteIntersectionSpec(6, [4])) == 0
    assert tau_mod8(CompleteIntersectionSpec(2, [5])) == 5


def test_betti_w_invariants_quadrics():
    m, m_prime, w1, w2 = betti_w_invariants(CompleteIntersectionSpec(4, [2]))
    assert (m, m_prime) == (0, 0)
    assert w1.is_trivial and w2.is_zero
    m, m_prime, w1, w2 = betti_w_invariants(CompleteIntersectionSpec(2, [2]))
    assert m_prime == 1
    assert w1 == SquareClass(-1) and w2.is_zero


def test_betti_w_invariants_cubic_surface():
    m, m_prime, w1, w2 = betti_w_invariants(CompleteIntersectionSpec(2, [3]))
    assert (m, m_prime) == (4, 2)
    assert w1.is_trivial
    assert w2.to_json() == [2, "inf"]


def test_m_is_even():
    for n in (2, 4, 6, 8):
        for degrees in _degree_lists():
            m, _, _, _ = betti_w_invariants(CompleteIntersectionSpec(n, degrees))
            assert m % 2 == 0, (n, degrees)


def _degree_lists():
    single = [[d] for d in range(1, 6)]
    double = [[d1, d2] for d1 in range(1, 6) for d2 in range(1, 6)]
    triple = [[2, 3, 5], [1, 1, 1], [4, 4, 2], [5, 5, 5], [3, 2, 2]]
    return single + double + triple


def test_hypersurface_w_examples():
    w1, w2 = hypersurface_w(2, 3)
    assert w1.is_trivial and w2.to_json() == [2, "inf"]
    w1, w2 = hypersurface_w(4, 2)
    assert w1.is_trivial and w2.is_zero
    w1, w2 = hypersurface_w(2, 2)
    assert w1 == SquareClass(-1) and w2.is_zero


def test_hypersurface_w_matches_lattice_route():
    for n in (2, 4, 6, 8, 10):
        for d in range(1, 11):
            closed = hypersurface_w(n, d)
            _, _, w1, w2 = betti_w_invariants(CompleteIntersectionSpec(n, [d]))
            assert closed == (w1, w2), (n, d)


def test_quadric_forms_agree_with_symbolic():
    # n = 0 mod 4: the rank-2 lattice is x^2 + y^2; n = 2 mod 4: x^2 - y^2
    plus = invariants(diagonal_form([1, 1]))
    minus = invariants(diagonal_form([1, -1]))
    for n in (4, 8):
        _, _, w1, w2 = betti_w_invariants(CompleteIntersectionSpec(n, [2]))
        assert (w1, w2) == (plus.w1, plus.w2)
    for n in (2, 6, 10):
        _, _, w1, w2 = betti_w_invariants(CompleteIntersectionSpec(n, [2]))
        assert (w1, w2) == (minus.w1, minus.w2)


def test_cubic_surface_refinement():
    assert cubic_surface_refinement() == -5
    with pytest.raises(DomainError):
        cubic_surface_refinement(2, 4)
    form = cubic_surface_form()
    inv = invariants(form)
    assert inv.rank == 7
    assert inv.signature == (1, 6)  # index -5
    assert inv.w1.is_trivial
    assert inv.w2.to_json() == [2, "inf"]
    _, _, w1, w2 = betti_w_invariants(CompleteIntersectionSpec(2, [3]))
    assert (inv.w1, inv.w2) == (w1, w2)


def test_delta_expressions_cubic_surface():
    d1, d2 = delta_expressions(2, 3)
    assert d1.numeric == SquareClass(-1)
    assert d1.tokens == ("disc_d(f)",)
    assert d2.numeric.to_json() == [2, "inf"]
    assert d2.tokens == ("w2(q_dR)",)


def test_delta_expressions_quadrics():
    d1, d2 = delta_expressions(4, 2)
    assert d2.numeric.is_zero
    assert d2.tokens == ("w2(q_dR)",)
    d1, d2 = delta_expressions(2, 2)
    assert d2.numeric.is_zero
    assert d2.tokens == ("w2(q_dR)", "(-1,disc_d(f))")
    assert d1.numeric == SquareClass(1)  # (d/2)((n+2)/2) = 2, even


def test_delta1_sign_branches():
    # odd d: sign (-1)^((d-1)/2)
    assert delta_expressions(2, 3)[0].numeric == SquareClass(-1)
    assert delta_expressions(2, 5)[0].numeric == SquareClass(1)
    # even d: sign (-1)^((d/2)((n+2)/2)); for (4, 2) the exponent is 3
    assert delta_expressions(4, 2)[0].numeric == SquareClass(-1)


def test_epsilon_prime_consistency():
    # w1(Betti) * epsilon_prime must reproduce the delta1 sign
    for n in (2, 4, 6, 8):
        for d in range(1, 9):
            w1, _ = hypersurface_w(n, d)
            d1, _ = delta_expressions(n, d)
            assert w1 * SquareClass(epsilon_prime(n, d)) == d1.numeric, (n, d)


def test_symbolic_token_vocabulary():
    with pytest.raises(Exception):
        SymbolicClass(SquareClass(1), ("bogus",))


def test_binary_divided_disc():
    a = Fraction(5)
    assert binary_divided_disc(Poly([-a, 0, 1])) == 4 * a
    assert binary_divided_disc(Poly([-1, 1, 0, 0, 1])) == -283
    assert binary_divided_disc(Poly([9, 1])) == 1
    with pytest.raises(DomainError):
        binary_divided_disc(Poly([0, 0, 1]))  # x^2 is not squarefree
    # matches the monic discriminant on monic squarefree inputs
    for coeffs in ([-2, 0, 1], [1, 1, 1], [-1, -4, -2, 0, 1]):
        f = Poly(coeffs)
        assert binary_divided_disc(f) == discriminant(f)


def test_motive_report_hypersurface():
    report = motive_report(CompleteIntersectionSpec(2, [3]))
    assert report.chi == 9
    assert report.b_n == 7
    assert report.tau_mod8 == 3
    assert report.delta1 is not None and report.delta2 is not None
    payload = report.to_json()
    assert payload["w2_qB"] == [2, "inf"]
    assert payload["delta1"] == {"numeric": -1, "tokens": ["disc_d(f)"]}


def test_motive_report_complete_intersection():
    report = motive_report(CompleteIntersectionSpec(2, [2, 3]))
    assert report.chi == 6 * (4 + 9 + 6 - 25 + 10)
    assert report.delta1 is None and report.delta2 is None
    assert report.to_json()["delta1"] is None
