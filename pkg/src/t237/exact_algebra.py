"""Exact arithmetic: univariate polynomials, weighted bihomogeneous polynomials
and truncated power series over the rationals.

Rationals are :class:`fractions.Fraction` throughout.  A univariate polynomial
is a dense tuple of coefficients, index = degree in ``u``; the zero polynomial
has degree ``-INF`` so that ``budget - degree`` is ``+INF`` for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

INF = math.inf

Number = int | Fraction


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    c = [as_fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Polynomial in one variable ``u`` with rational coefficients.

    Immutable.  ``coeffs[k]`` is the coefficient of ``u**k``; the leading
    coefficient is nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def const(cls, c: Number) -> UniPoly:
        return cls([c])

    @classmethod
    def u(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def linear(cls, root: Number) -> UniPoly:
        """The monic linear polynomial ``u - root``."""
        return cls([-as_fraction(root), 1])

    @classmethod
    def _coerce(cls, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return cls([other])
        return NotImplemented

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else -INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative degree")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        other = UniPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if mono and abs(c) == 1:
                s = mono
            elif mono:
                s = f"{abs(c)}*{mono}"
            else:
                s = str(abs(c))
            terms.append(("-" if c < 0 else "+", s))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, s in terms[1:]:
            out += f" {sign} {s}"
        return out

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = UniPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = UniPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = UniPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = UniPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        if len(rem) - 1 < dq:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return UniPoly(c * inv for c in self.coeffs)

    def derivative(self) -> UniPoly:
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def order_at(self, place: UniPoly) -> int | float:
        """Largest m with ``place**m`` dividing self (``INF`` for zero)."""
        if place.degree < 1:
            raise ValueError("place must be nonconstant")
        if self.is_zero():
            return INF
        m, p = 0, self
        while True:
            q, r = divmod(p, place)
            if not r.is_zero():
                return m
            m, p = m + 1, q


def upoly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor; ``gcd(0, 0) = 0``."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def upoly_xgcd(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return ``(g, s, t)`` with ``g = s*p + t*q`` and ``g`` monic."""
    r0, r1 = p, q
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: ``p = lc * prod(S_k ** m_k)``.

    The ``S_k`` are monic, squarefree, pairwise coprime and the multiplicities
    strictly increase.  Factors equal to 1 are omitted.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = p.monic()
    if f.degree == 0:
        return []
    df = f.derivative()
    a = upoly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        s = upoly_gcd(b, d)
        b = b.exact_div(s)
        c = d.exact_div(s)
        d = c - b.derivative()
        if s.degree > 0:
            out.append((s, i))
        i += 1
    return out


def coprime_refinement(fs: Sequence[UniPoly]) -> list[UniPoly]:
    """Gcd-free basis of ``fs``.

    Returns pairwise-coprime monic nonconstant polynomials such that each
    input is a constant times a product of powers of the outputs.  The
    result is sorted by (degree, coefficients) for determinism.
    """
    if any(f.is_zero() for f in fs):
        raise ValueError("coprime refinement of the zero polynomial")
    basis: list[UniPoly] = []
    work = [f.monic() for f in fs if f.degree > 0]
    while work:
        f = work.pop()
        for i, b in enumerate(basis):
            g = upoly_gcd(f, b)
            if g.degree > 0:
                del basis[i]
                # total degree of the pieces is deg f + deg b - deg g
                for piece in (g, b.exact_div(g), f.exact_div(g)):
                    if piece.degree > 0:
                        work.append(piece.monic())
                break
        else:
            basis.append(f)
    return sorted(basis, key=lambda q: (q.degree, q.coeffs))


@dataclass(frozen=True)
class PowerSeries:
    """Power series truncated after ``t**order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> PowerSeries:
        return cls(tuple(p[k] for k in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self.coeffs[: order + 1])

    def as_poly(self) -> UniPoly:
        return UniPoly(self.coeffs)


def series_expand(numerator: UniPoly, denominator_exponents: Sequence[int], N: int) -> PowerSeries:
    """Taylor coefficients of ``numerator / prod(1 - t**e)`` up to ``t**N``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    if any(e < 1 for e in denominator_exponents):
        raise ValueError("denominator exponents must be positive")
    c = [numerator[k] for k in range(N + 1)]
    for e in denominator_exponents:
        # multiply by 1/(1 - t^e) in place
        for n in range(e, N + 1):
            c[n] += c[n - e]
    return PowerSeries(tuple(c))


@dataclass(frozen=True)
class WeightedBiPoly:
    """Weighted-homogeneous polynomial in ``(w, x)``.

    ``terms`` maps ``(i, j)`` to the coefficient of ``w**i * x**j``; every
    stored term has ``i*wt_w + j*wt_x == degree`` and a nonzero coefficient.
    """

    weights: tuple[int, int]
    degree: int
    terms: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        wt_w, wt_x = self.weights
        if wt_w < 1 or wt_x < 1:
            raise ValueError("weights must be positive")
        clean = {}
        for (i, j), c in self.terms.items():
            c = as_fraction(c)
            if c == 0:
                continue
            if i < 0 or j < 0 or i * wt_w + j * wt_x != self.degree:
                raise ValueError(
                    f"term w^{i} x^{j} has weighted degree {i * wt_w + j * wt_x}, "
                    f"expected {self.degree}"
                )
            clean[(i, j)] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def monomial(cls, weights, i: int, j: int, c: Number = 1) -> WeightedBiPoly:
        return cls(tuple(weights), i * weights[0] + j * weights[1], {(i, j): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, WeightedBiPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (self.weights, self.degree, self.terms) == (other.weights, other.degree, other.terms)

    def __hash__(self):
        if self.is_zero():
            return hash((self.weights, ()))
        return hash((self.weights, self.degree, tuple(self.terms.items())))

    def __add__(self, other: WeightedBiPoly) -> WeightedBiPoly:
        if self.weights != other.weights:
            raise ValueError("weight mismatch")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("sum of polynomials of different weighted degrees")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return WeightedBiPoly(self.weights, self.degree, out)

    def __neg__(self):
        return WeightedBiPoly(self.weights, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: WeightedBiPoly) -> WeightedBiPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WeightedBiPoly(self.weights, self.degree, {k: c * other for k, c in self.terms.items()})
        if self.weights != other.weights:
            raise ValueError("weight mismatch")
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return WeightedBiPoly(self.weights, self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> WeightedBiPoly:
        result = WeightedBiPoly(self.weights, 0, {(0, 0): 1})
        for _ in range(e):
            result = result * self
        return result

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))


def chart_and_budget(P: WeightedBiPoly, budget: int) -> tuple[UniPoly, int | float]:
    """Dehomogenize at ``w = 1`` (``u = x / w**wt_x``).

    Returns the finite chart and the order at ``w = 0`` on the coarse line,
    which is ``budget - deg(chart)`` (``INF`` when ``P`` is zero).
    """
    wt_w, wt_x = P.weights
    if wt_w != 1:
        raise ValueError("the chart u = x/w^k needs weight 1 on w")
    if P.is_zero():
        return UniPoly(), INF
    if budget < P.degree // wt_x:
        raise ValueError(f"budget {budget} below the maximal chart degree {P.degree // wt_x}")
    top = max(j for (_, j) in P.terms)
    chart = UniPoly(P.coefficient(P.degree - j * wt_x, j) for j in range(top + 1))
    return chart, budget - chart.degree
