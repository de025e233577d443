from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fsbcat.fsb_core import hom_count
from fsbcat.series import (
    InsufficientTerms,
    LimitDiverges,
    NoFit,
    Polynomial,
    RationalFunction,
    fit_rational,
    partial_fraction_coefficient,
    pole_set,
    residue_at,
    split_denominator,
)

t = Polynomial([0, 1])


def lin(j):
    return Polynomial([1, -j])


def rf(num, den):
    return RationalFunction.from_polys(num, den)


def test_polynomial_arithmetic():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1 and p.to_list() == [1, 2]
    q = Polynomial([-1, 1])
    assert (p * q).to_list() == [-1, -1, 2]
    quo, rem = divmod(p * q + 3, q)
    assert quo == p and rem == Polynomial([3])
    assert (q ** 3)(2) == 1
    assert Polynomial([3, -4, 1]).format() == "t^2 - 4t + 3"
    assert Polynomial().is_zero() and str(Polynomial()) == "0"
    with pytest.raises(TypeError):
        Polynomial([0.5])


@given(st.lists(st.integers(-5, 5), max_size=5), st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_polynomial_divmod(a, b):
    A, B = Polynomial(a), Polynomial(b)
    if B.is_zero():
        return
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.is_zero() or r.degree < B.degree


def test_split_denominator():
    den = lin(1) ** 3 * lin(3) * lin(7)
    assert split_denominator(den) == {1: 3, 3: 1, 7: 1}
    with pytest.raises(ValueError):
        split_denominator(Polynomial([1, 0, 1]))


def test_rational_basics():
    r = rf(t * 2, lin(1) * lin(3))
    assert r.den_factors() == {1: 1, 3: 1}
    assert [int(x) for x in r.series(6)] == [3 ** n - 1 for n in range(6)]
    assert str(r) == "(2t) / (1-t) (1-3t)"
    assert RationalFunction.from_json(r.to_json()) == r
    assert r.to_json() == {"num": [0, 2], "den": [[1, 1], [3, 1]]}
    assert rf(lin(1), lin(1) * lin(2)) == RationalFunction.geometric(2)
    assert (r - r).is_zero()
    with pytest.raises(ZeroDivisionError):
        rf(t, Polynomial())


def test_fit_geometric_example():
    terms = [3 ** n - 1 for n in range(12)]
    fit = fit_rational(terms, 3, 3)
    assert fit == RationalFunction.geometric(3, 3, 1) - RationalFunction.geometric(1, 1, 1)
    assert fit == rf(2 * t, lin(1) * lin(3))
    # the shape 2t^2/((1-t)(1-3t)) describes the shifted sequence 3^(n-1) - 1
    assert rf(2 * t * t, lin(1) * lin(3)).series(5) == [0, 0, 2, 8, 26]


def test_fit_zero_and_constant():
    assert fit_rational([0] * 8, 3, 2).is_zero()
    one = fit_rational([1] * 8, 1, 1)
    assert one == RationalFunction.geometric(1)
    assert residue_at(one, 1) == 1
    assert pole_set(RationalFunction.polynomial(t + 1)) == set()


def test_fit_d1_matches_displayed_function():
    terms = [(3 ** n - 1) // 2 - n * n for n in range(13)]
    fit = fit_rational(terms, 3, 3)
    shown = (RationalFunction.geometric(3, Fraction(1, 2)) - RationalFunction.geometric(1, Fraction(1, 2))
             - rf(t, lin(1) ** 2) - rf(2 * t * t, lin(1) ** 3))
    assert fit == shown
    assert pole_set(fit) == {1, 3}
    assert residue_at(fit, 3) == Fraction(1, 2)


def test_fit_errors():
    with pytest.raises(InsufficientTerms):
        fit_rational([1, 3, 9, 27], 3, 1)
    with pytest.raises(NoFit):
        fit_rational([n ** 4 for n in range(14)], 1, 2)


def test_fit_holdout_verification():
    terms = [hom_count(n, 2) for n in range(20)]
    fit = fit_rational(terms, 5, 2)
    assert [int(x) for x in fit.series(20)] == terms
    # a corrupted late term is caught
    bad = terms[:]
    bad[-1] += 1
    with pytest.raises(NoFit):
        fit_rational(bad, 5, 1)


@pytest.mark.parametrize("d", [0, 1, 2])
def test_projective_series(d):
    fit = fit_rational([hom_count(n, d) for n in range(20)], 2 * d + 1, 2)
    assert pole_set(fit) <= set(range(1, 2 * d + 2))
    assert residue_at(fit, 2 * d + 1) == 1


def test_residue_rules():
    r = rf(Polynomial([1]), lin(3) * lin(1) ** 2)
    assert residue_at(r, 3) == partial_fraction_coefficient(r, 3)
    with pytest.raises(LimitDiverges):
        residue_at(r, 1)
    with pytest.raises(LimitDiverges):
        residue_at(rf(Polynomial([1]), lin(3) ** 2), 3)
    with pytest.raises(LimitDiverges):
        residue_at(rf(Polynomial([1]), lin(3) * lin(-3)), 3)
    assert residue_at(RationalFunction.geometric(1), 1) == 1


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 2))
def test_residue_invariant_under_smaller_poles(a, b, e):
    base = RationalFunction.geometric(5, Fraction(2, 3)) + rf(Polynomial([1, 1]), lin(1) ** 2)
    extra = rf(Polynomial([a, b]), lin(3) ** e * lin(1))
    assert residue_at(base + extra, 5) == residue_at(base, 5) == Fraction(2, 3)
