import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from t237.exact_algebra import (
    INF,
    PowerSeries,
    UniPoly,
    WeightedBiPoly,
    as_fraction,
    chart_and_budget,
    coprime_refinement,
    series_expand,
    squarefree_decomposition,
    upoly_gcd,
    upoly_xgcd,
)

from conftest import polys, rationals

u = sympy.Symbol("u")


def to_sympy(p: UniPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], u, domain="QQ")


def from_sympy(p) -> UniPoly:
    return UniPoly(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs()))


def test_as_fraction():
    assert as_fraction("3/6") == Fraction(1, 2)
    assert as_fraction(4) == Fraction(4)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_zero_polynomial_degree_and_order():
    z = UniPoly()
    assert z.degree == -INF
    assert z.order_at(UniPoly.linear(0)) == INF
    assert 8 - z.degree == INF


def test_str_and_eval():
    p = UniPoly([1] + [0] * 77 + [-1])
    assert str(p) == "-u^78 + 1"
    assert p(1) == 0
    assert str(UniPoly([Fraction(-1, 2), 0, 3])) == "3*u^2 - 1/2"


def test_division_and_exact_div():
    p = UniPoly.linear(2) ** 3 * UniPoly([1, 0, 1])
    q, r = divmod(p, UniPoly.linear(2))
    assert r.is_zero() and q * UniPoly.linear(2) == p
    assert p.order_at(UniPoly.linear(2)) == 3
    with pytest.raises(ArithmeticError):
        UniPoly([1, 1]).exact_div(UniPoly([0, 1]))
    with pytest.raises(ZeroDivisionError):
        divmod(p, UniPoly())


@given(polys(), polys())
def test_ring_axioms_exact(p, q):
    r = UniPoly([Fraction(1, 3), -2])
    assert (p + q) * r == p * r + q * r
    assert p - p == 0
    assert (p * q).degree == p.degree + q.degree


@given(polys(), polys(max_deg=4))
def test_divmod_identity(p, q):
    assume(not q.is_zero())
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(polys(), polys())
def test_gcd_matches_sympy(p, q):
    g = upoly_gcd(p, q)
    if p.is_zero() and q.is_zero():
        assert g.is_zero()
        return
    assert g == from_sympy(sympy.gcd(to_sympy(p), to_sympy(q)).monic())


@given(polys(), polys())
def test_xgcd_bezout(p, q):
    assume(not (p.is_zero() and q.is_zero()))
    g, s, t = upoly_xgcd(p, q)
    assert s * p + t * q == g
    assert g.lc == 1


@given(st.lists(st.tuples(polys(max_deg=2), st.integers(1, 3)), min_size=1, max_size=3))
def test_squarefree_reconstructs(factors):
    p = UniPoly([Fraction(3, 2)])
    for f, m in factors:
        assume(not f.is_zero())
        p = p * f**m
    parts = squarefree_decomposition(p)
    prod = UniPoly([p.lc])
    for s, m in parts:
        prod = prod * s**m
        assert s.lc == 1
        assert upoly_gcd(s, s.derivative()).degree == 0
    assert prod == p
    mults = [m for _, m in parts]
    assert mults == sorted(set(mults))
    for (a, _), (b, _) in itertools.combinations(parts, 2):
        assert upoly_gcd(a, b).degree == 0


def test_squarefree_matches_sympy():
    p = UniPoly.linear(1) ** 3 * UniPoly([2, 0, 1]) ** 2 * UniPoly.linear(Fraction(-1, 7))
    ours = {m: s for s, m in squarefree_decomposition(p)}
    _, theirs = sympy.sqf_list(to_sympy(p))
    assert {m: from_sympy(f.monic()) for f, m in theirs} == ours
    with pytest.raises(ValueError):
        squarefree_decomposition(UniPoly())


@given(st.lists(polys(max_deg=4), min_size=1, max_size=4))
def test_coprime_refinement(fs):
    assume(all(not f.is_zero() for f in fs))
    basis = coprime_refinement(fs)
    for a, b in itertools.combinations(basis, 2):
        assert upoly_gcd(a, b).degree == 0
    for f in fs:
        rest = f
        for b in basis:
            rest = rest.exact_div(b ** rest.order_at(b)) if b.degree > 0 else rest
        assert rest.degree <= 0
    assert coprime_refinement(list(reversed(fs))) == basis


def test_coprime_refinement_example():
    a, b, c = UniPoly.linear(0), UniPoly.linear(1), UniPoly.linear(2)
    assert coprime_refinement([a * b, b * c]) == sorted([a, b, c], key=lambda q: q.coeffs)
    with pytest.raises(ValueError):
        coprime_refinement([UniPoly()])


def test_power_series_truncation():
    s = PowerSeries.from_poly(UniPoly([1, 1]), 5)
    t = PowerSeries((1, -1, 1))
    prod = s * t
    assert prod.order == 2
    assert prod.coeffs == (1, 0, 0)
    assert (s + t).order == 2


def count_monomials(weights, n):
    """Number of exponent vectors k with sum k_i * w_i == n, by enumeration."""
    if not weights:
        return int(n == 0)
    w, rest = weights[0], weights[1:]
    return sum(count_monomials(rest, n - k * w) for k in range(n // w + 1))


def brute_force_hypersurface(weights, degree, N):
    counts = [count_monomials(tuple(weights), n) for n in range(N + 1)]
    return [counts[n] - (counts[n - degree] if n >= degree else 0) for n in range(N + 1)]


@pytest.mark.parametrize("weights", [(1,), (1, 2), (2, 3, 5), (1, 6, 14, 21), (1, 11, 26, 39)])
def test_series_expand_brute_force(weights):
    N = 60
    counts = [count_monomials(weights, n) for n in range(N + 1)]
    assert list(series_expand(UniPoly([1]), weights, N).coeffs) == counts


@given(st.lists(st.integers(1, 9), min_size=1, max_size=4), st.integers(1, 30))
def test_series_expand_property(weights, degree):
    N = 40
    shifted = brute_force_hypersurface(weights, degree, N)
    num = UniPoly([1] + [0] * (degree - 1) + [-1])
    assert list(series_expand(num, weights, N).coeffs) == shifted


def test_series_expand_rejects_bad_input():
    with pytest.raises(ValueError):
        series_expand(UniPoly([1]), [0], 5)
    with pytest.raises(ValueError):
        series_expand(UniPoly([1]), [1], -1)


W = (1, 6)


def test_weighted_homogeneity_enforced():
    with pytest.raises(ValueError):
        WeightedBiPoly(W, 12, {(1, 1): 1})
    p = WeightedBiPoly(W, 12, {(12, 0): 1, (6, 1): 0, (0, 2): 3})
    assert (6, 1) not in p.terms


@given(rationals(), rationals())
def test_weighted_product_degree_and_chart(a, b):
    x = WeightedBiPoly.monomial(W, 0, 1)
    w = WeightedBiPoly.monomial(W, 1, 0)
    ell = x - w**6 * b
    P = ell**2 * (x * a + w**6)
    assert P.degree == 18
    chart, order = chart_and_budget(P, 3)
    expected = UniPoly.linear(b) ** 2 * UniPoly([1, a])
    assert chart == expected
    assert order == 3 - expected.degree


def test_chart_of_zero_and_budget_check():
    z = WeightedBiPoly(W, 24, {})
    assert chart_and_budget(z, 4) == (UniPoly(), INF)
    assert z == WeightedBiPoly(W, 12, {})
    assert hash(z) == hash(WeightedBiPoly(W, 12, {}))
    with pytest.raises(ValueError):
        chart_and_budget(WeightedBiPoly.monomial(W, 0, 4), 3)
