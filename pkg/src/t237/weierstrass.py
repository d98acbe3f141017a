"""Weierstrass models ``y^2 = x^3 + A x + B`` over the projective line.

A model stores the affine charts ``a(u)``, ``b(u)`` of ``A in H^0(O(4N))``
and ``B in H^0(O(6N))``; the discriminant is ``4A^3 + 27B^2`` in
``H^0(O(12N))``.  Orders at the point at infinity are ``budget - deg(chart)``.

Places are coprime-refined monic factors of the charts rather than complex
points: conjugate roots share their orders and Kodaira type, and
``residual_degree`` counts them.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from typing import Mapping

from .exact_algebra import (
    INF,
    UniPoly,
    WeightedBiPoly,
    as_fraction,
    chart_and_budget,
    coprime_refinement,
    squarefree_decomposition,
    upoly_xgcd,
)

J_CONSTANT = 1728  # 12^3


class ZeroDiscriminantError(ValueError):
    """The discriminant vanishes identically (the total space is not reduced)."""


class NotMinimalizableError(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassModel:
    a: UniPoly
    b: UniPoly
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("budget N must be at least 1")
        if self.a.degree > 4 * self.N or self.b.degree > 6 * self.N:
            raise ValueError(f"chart degrees ({self.a.degree}, {self.b.degree}) exceed budgets (4N, 6N) with N={self.N}")
        if self.a.is_zero() and self.b.is_zero():
            raise ValueError("A and B both vanish identically")

    @property
    def budgets(self) -> tuple[int, int, int]:
        return 4 * self.N, 6 * self.N, 12 * self.N


@dataclass(frozen=True)
class Place:
    """A finite place (monic squarefree polynomial) or infinity (``poly is None``)."""

    poly: UniPoly | None = None

    @classmethod
    def infinity(cls) -> Place:
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def residual_degree(self) -> int:
        return 1 if self.poly is None else int(self.poly.degree)

    def __str__(self):
        return "infinity" if self.poly is None else str(self.poly)


@dataclass(frozen=True)
class KodairaType:
    """``symbol`` is one of I, II, III, IV, I*, IV*, III*, II*, NonMinimal."""

    symbol: str
    n: int = 0

    _EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}

    @property
    def euler(self) -> int:
        if self.symbol == "I":
            return self.n
        if self.symbol == "I*":
            return self.n + 6
        if self.symbol == "NonMinimal":
            raise ValueError("non-minimal places have no Kodaira fibre")
        return self._EULER[self.symbol]

    def __str__(self):
        if self.symbol == "I":
            return f"I{self.n}"
        if self.symbol == "I*":
            return f"I{self.n}*"
        return self.symbol

    @classmethod
    def parse(cls, text: str) -> KodairaType:
        if text in ("II", "III", "IV", "IV*", "III*", "II*", "NonMinimal"):
            return cls(text)
        if text.startswith("I") and text.endswith("*"):
            return cls("I*", int(text[1:-1]))
        if text.startswith("I"):
            return cls("I", int(text[1:]))
        raise ValueError(f"unknown Kodaira symbol {text!r}")


NON_MINIMAL = KodairaType("NonMinimal")


class JSpecial(enum.Enum):
    INFINITY = "infinity"
    UNDEFINED = "undefined"


JValue = Fraction | UniPoly | JSpecial


@dataclass(frozen=True)
class FiberReport:
    place: Place
    ord_a: int | float
    ord_b: int | float
    ord_delta: int | float
    kodaira: KodairaType | None = None
    j: JValue | None = None

    @property
    def residual_degree(self) -> int:
        return self.place.residual_degree


def discriminant(m: WeierstrassModel) -> UniPoly:
    d = 4 * m.a**3 + 27 * m.b**2
    if d.is_zero():
        raise ZeroDiscriminantError("discriminant 4A^3 + 27B^2 vanishes identically")
    return d


def _squarefree_pieces(p: UniPoly) -> list[UniPoly]:
    return [s for s, _ in squarefree_decomposition(p)] if not p.is_zero() else []


def finite_places(m: WeierstrassModel) -> list[Place]:
    """Places over which the discriminant vanishes, refined so that the
    orders of ``a``, ``b`` and the discriminant are constant on each."""
    d = discriminant(m)
    pieces = _squarefree_pieces(d) + _squarefree_pieces(m.a) + _squarefree_pieces(m.b)
    return [Place(p) for p in coprime_refinement(pieces) if (d % p).is_zero()]


def _orders(m: WeierstrassModel, d: UniPoly, place: Place) -> tuple:
    if place.is_infinity:
        ba, bb, bd = m.budgets
        return ba - m.a.degree, bb - m.b.degree, bd - d.degree
    p = place.poly
    return m.a.order_at(p), m.b.order_at(p), d.order_at(p)


def analyze_places(m: WeierstrassModel) -> list[FiberReport]:
    """Order triples at every discriminant place, infinity last."""
    d = discriminant(m)
    places = finite_places(m) + [Place.infinity()]
    return [FiberReport(pl, *_orders(m, d, pl)) for pl in places]


def classify(ord_a, ord_b, ord_delta) -> KodairaType:
    """Kodaira type from the order triple (Tate's table, characteristic 0)."""
    a, b, d = ord_a, ord_b, ord_delta
    if min(a, b, d) < 0 or d == INF:
        raise ValueError(f"invalid order triple {(a, b, d)}")
    low = min(3 * a, 2 * b)
    if d < low or (3 * a != 2 * b and d != low):
        raise ValueError(f"inconsistent order triple {(a, b, d)}")
    if a >= 4 and b >= 6:
        return NON_MINIMAL
    if d == 0:
        return KodairaType("I", 0)
    if a == 0 and b == 0:
        return KodairaType("I", int(d))
    if a >= 1 and b == 1 and d == 2:
        return KodairaType("II")
    if a == 1 and b >= 2 and d == 3:
        return KodairaType("III")
    if a >= 2 and b == 2 and d == 4:
        return KodairaType("IV")
    if a >= 2 and b >= 3 and d == 6:
        return KodairaType("I*", 0)
    if a == 2 and b == 3 and d > 6:
        return KodairaType("I*", int(d) - 6)
    if a >= 3 and b == 4 and d == 8:
        return KodairaType("IV*")
    if a == 3 and b >= 5 and d == 9:
        return KodairaType("III*")
    if a >= 4 and b == 5 and d == 10:
        return KodairaType("II*")
    raise ValueError(f"inconsistent order triple {(a, b, d)}")


def _residue(num: UniPoly, den: UniPoly, p: UniPoly) -> JValue:
    """``num/den`` reduced modulo ``p`` (den must be a unit mod p)."""
    g, s, _ = upoly_xgcd(den % p, p)
    if g.degree != 0:
        raise ArithmeticError("denominator is not invertible at the place")
    r = (num * s) % p
    return r[0] if p.degree == 1 else r


def j_invariant(m: WeierstrassModel, place: Place) -> JValue:
    """Value of ``1728 * 4A^3 / Delta`` at the place."""
    d = discriminant(m)
    num = 4 * J_CONSTANT * m.a**3
    oa, ob, od = _orders(m, d, place)
    if oa >= 4 and ob >= 6:
        return JSpecial.UNDEFINED
    if num.is_zero():
        return Fraction(0)
    o_num = 3 * oa
    if o_num > od:
        return Fraction(0)
    if o_num < od:
        return JSpecial.INFINITY
    if place.is_infinity:
        # equal orders: ratio of the coefficients at the common degree
        k = num.degree
        return num.lc / d[k]
    p = place.poly
    if od:
        pk = p ** int(od)
        num, d = num.exact_div(pk), d.exact_div(pk)
    return _residue(num, d, p)


def classify_places(m: WeierstrassModel) -> list[FiberReport]:
    out = []
    for r in analyze_places(m):
        kt = classify(r.ord_a, r.ord_b, r.ord_delta)
        out.append(replace(r, kodaira=kt, j=j_invariant(m, r.place)))
    return out


def euler_sum(reports: list[FiberReport]) -> int:
    """``sum residual_degree * ord(Delta)`` over the reported places."""
    return sum(r.residual_degree * int(r.ord_delta) for r in reports)


def fiber_counts(reports: list[FiberReport]) -> Counter:
    """Singular fibres counted over the algebraic closure (I0 omitted)."""
    c: Counter = Counter()
    for r in reports:
        if r.kodaira is not None and str(r.kodaira) != "I0":
            c[str(r.kodaira)] += r.residual_degree
    return c


def minimalize(m: WeierstrassModel, place: Place) -> WeierstrassModel:
    """Divide out ``l^4`` from A and ``l^6`` from B at a non-minimal place."""
    d = discriminant(m)
    oa, ob, _ = _orders(m, d, place)
    if not (oa >= 4 and ob >= 6):
        raise NotMinimalizableError(f"place {place} is minimal (orders {oa}, {ob})")
    drop = place.residual_degree
    if m.N - drop < 1:
        raise NotMinimalizableError("minimalization would drop the budget below 1")
    if place.is_infinity:
        return WeierstrassModel(m.a, m.b, m.N - drop)
    p = place.poly
    return WeierstrassModel(m.a.exact_div(p**4), m.b.exact_div(p**6), m.N - drop)


# -- Brieskorn's family -------------------------------------------------------

A_KEYS = ("t4", "t10", "t16", "t22", "t28")
B_KEYS = ("t12", "t18", "t24", "t30", "t36", "t42")
WEIGHTS = (1, 6)


@dataclass(frozen=True)
class BrieskornParams:
    t4: Fraction = Fraction(0)
    t10: Fraction = Fraction(0)
    t12: Fraction = Fraction(0)
    t16: Fraction = Fraction(0)
    t18: Fraction = Fraction(0)
    t22: Fraction = Fraction(0)
    t24: Fraction = Fraction(0)
    t28: Fraction = Fraction(0)
    t30: Fraction = Fraction(0)
    t36: Fraction = Fraction(0)
    t42: Fraction = Fraction(0)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_fraction(getattr(self, f.name)))
        if all(v == 0 for v in self.as_dict().values()):
            raise ValueError("all-zero parameters give the non-log-canonical x^7 + y^3 + z^2 = 0")

    @staticmethod
    def keys() -> tuple[str, ...]:
        return tuple(f.name for f in fields(BrieskornParams))

    def as_dict(self) -> dict[str, Fraction]:
        return {k: getattr(self, k) for k in self.keys()}

    @classmethod
    def from_mapping(cls, data: Mapping[str, object]) -> BrieskornParams:
        return cls(**{k: as_fraction(v) for k, v in data.items()})


def brieskorn_polys(t: BrieskornParams) -> tuple[WeightedBiPoly, WeightedBiPoly]:
    """``A_28(w, x)`` and ``B_42(w, x)`` with weights ``(1, 6)``."""
    A = {(28 - 6 * j, j): getattr(t, k) for j, k in zip(range(4, -1, -1), A_KEYS)}
    B = {(0, 7): Fraction(1)}
    B.update({(42 - 6 * j, j): getattr(t, k) for j, k in zip((5, 4, 3, 2, 1, 0), B_KEYS)})
    return WeightedBiPoly(WEIGHTS, 28, A), WeightedBiPoly(WEIGHTS, 42, B)


def brieskorn_model(t: BrieskornParams) -> WeierstrassModel:
    A, B = brieskorn_polys(t)
    a, _ = chart_and_budget(A, 8)
    b, _ = chart_and_budget(B, 12)
    return WeierstrassModel(a, b, 2)


def special_locus_polys(a, b) -> tuple[WeightedBiPoly, WeightedBiPoly, WeightedBiPoly]:
    """``l = x - (b/7) w^6``, ``A = a l^4 w^4`` and ``B = l^6 (l + b w^6)``."""
    a, b = as_fraction(a), as_fraction(b)
    x = WeightedBiPoly.monomial(WEIGHTS, 0, 1)
    w6 = WeightedBiPoly.monomial(WEIGHTS, 6, 0)
    w4 = WeightedBiPoly.monomial(WEIGHTS, 4, 0)
    ell = x - w6 * (b / 7)
    A = (ell**4) * w4 * a
    B = (ell**6) * (ell + w6 * b)
    return ell, A, B


def special_locus_params(a, b) -> BrieskornParams:
    """Brieskorn parameters of the surface with a simple elliptic or cusp point."""
    _, A, B = special_locus_polys(a, b)
    if B.coefficient(6, 6) != 0 or B.coefficient(0, 7) != 1:
        raise AssertionError("special locus left the normal form")
    params = {k: A.coefficient(28 - 6 * j, j) for j, k in zip(range(4, -1, -1), A_KEYS)}
    params.update({k: B.coefficient(42 - 6 * j, j) for j, k in zip((5, 4, 3, 2, 1, 0), B_KEYS)})
    return BrieskornParams(**params)


@dataclass(frozen=True)
class SurfaceReport:
    surface_type: str  # "I", "II" or "III"
    k3_fibers: tuple[FiberReport, ...]
    k3_euler: int
    special_place: Place | None = None
    minimal_fibers: tuple[FiberReport, ...] = ()
    minimal_euler: int | None = None
    j: JValue | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def classify_surface(t: BrieskornParams) -> SurfaceReport:
    """Type I (K3 with ADE points), II (simple elliptic point) or III (cusp)."""
    m = brieskorn_model(t)
    k3 = classify_places(m)
    bad = [r for r in k3 if r.kodaira == NON_MINIMAL]
    if k3[-1].kodaira != KodairaType("II*"):
        raise AssertionError(f"fibre at infinity is {k3[-1].kodaira}, expected II*")
    if not bad:
        return SurfaceReport("I", tuple(k3), euler_sum(k3))
    if len(bad) > 1:
        raise NotMinimalizableError("more than one non-minimal place: input is not log canonical")
    place = bad[0].place
    mm = minimalize(m, place)
    minimal = classify_places(mm)
    if any(r.kodaira == NON_MINIMAL for r in minimal):
        raise NotMinimalizableError("minimal model is still non-minimal")
    d_hat = discriminant(mm)
    oa, ob, od = _orders(mm, d_hat, place)
    fiber = classify(oa, ob, od)
    j = j_invariant(mm, place)
    if od == 0:
        kind = "II"
    elif fiber == KodairaType("I", 1):
        kind = "III"
    else:
        raise ValueError(f"unexpected fibre {fiber} over the contracted curve")
    return SurfaceReport(
        kind, tuple(k3), euler_sum(k3), place, tuple(minimal), euler_sum(minimal), j
    )
