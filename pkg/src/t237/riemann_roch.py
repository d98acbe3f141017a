"""Plurigenera of normal surfaces with quotient singularities.

Two modes are supported:

``canonical``
    ``P_n = h^0(n K_X)`` with ``chi(nK) = chi(O) + n(n-1)/2 K^2 + sum delta(nK)``
    for ``n >= 2`` and ``P_1 = p_g``.
``pair``
    ``K_X ~ 0`` and a boundary curve ``D`` through the singular points;
    ``P_n = h^0(n D) = chi(O) + n^2/2 D^2 + sum delta(nD)`` for ``n >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_algebra import PowerSeries, UniPoly, as_fraction, series_expand
from .quotient_sing import HJChain, SingularityIncidence, delta, delta_canonical

MODES = ("canonical", "pair")


@dataclass(frozen=True)
class SurfaceRRData:
    chi_O: Fraction
    vol: Fraction
    p_g: int
    mode: str
    singularities: tuple[HJChain | SingularityIncidence, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "chi_O", as_fraction(self.chi_O))
        object.__setattr__(self, "vol", as_fraction(self.vol))
        object.__setattr__(self, "singularities", tuple(self.singularities))
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.vol <= 0:
            raise ValueError("volume must be positive")
        want = HJChain if self.mode == "canonical" else SingularityIncidence
        for s in self.singularities:
            if not isinstance(s, want):
                raise ValueError(f"{self.mode} mode expects {want.__name__} singularity data, got {s!r}")


@dataclass(frozen=True)
class PlurigeneraTable:
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def runs(self) -> list[tuple[int, int, int]]:
        """Maximal runs ``(first n, last n, value)`` for n >= 1."""
        out: list[tuple[int, int, int]] = []
        for n, v in enumerate(self.values[1:], start=1):
            if out and out[-1][2] == v:
                out[-1] = (out[-1][0], n, v)
            else:
                out.append((n, n, v))
        return out


class NonIntegralEulerCharacteristic(ValueError):
    pass


def chi_of_multiple(data: SurfaceRRData, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if data.mode == "canonical":
        value = data.chi_O + Fraction(n * (n - 1), 2) * data.vol
        value += sum((delta_canonical(c, n) for c in data.singularities), Fraction(0))
    else:
        value = data.chi_O + Fraction(n * n, 2) * data.vol
        value += sum((delta(inc, n) for inc in data.singularities), Fraction(0))
    if value.denominator != 1:
        raise NonIntegralEulerCharacteristic(f"chi at n={n} is {value}; the input data is inconsistent")
    return int(value)


def plurigenera(data: SurfaceRRData, N: int) -> PlurigeneraTable:
    if N < 0:
        raise ValueError("N must be nonnegative")
    values = [1]
    for n in range(1, N + 1):
        if n == 1 and data.mode == "canonical":
            # chi(K) = p_g - q + 1 counts h^2(K) = 1, so take h^0(K) directly
            values.append(data.p_g)
        else:
            values.append(chi_of_multiple(data, n))
    return PlurigeneraTable(tuple(values))


def hilbert_numerator(table: PlurigeneraTable | Sequence[int], weights: Sequence[int], N: int) -> UniPoly:
    """``(sum P_n t^n) * prod(1 - t^w)`` truncated after ``t^N``."""
    values = table.values if isinstance(table, PlurigeneraTable) else tuple(table)
    if len(values) < N + 1:
        raise ValueError(f"table has {len(values)} entries, need {N + 1}")
    c = [Fraction(v) for v in values[: N + 1]]
    for w in weights:
        # multiply by (1 - t^w) in place, high degrees first
        for n in range(N, w - 1, -1):
            c[n] -= c[n - w]
    return UniPoly(c)


def hypersurface_hilbert(weights: Sequence[int], degree: int, N: int) -> PowerSeries:
    """Hilbert series ``(1 - t^d) / prod(1 - t^w)`` of a weighted hypersurface."""
    if degree < 1 or any(w < 1 for w in weights):
        raise ValueError("degree and weights must be positive")
    num = UniPoly([1]) - UniPoly([0] * degree + [1])
    return series_expand(num, weights, N)


_SEVEN_THIRTEENTHS = Fraction(7, 13)
_SIX_ELEVENTHS = Fraction(6, 11)


def min_volume(c) -> Fraction:
    """Minimal volume of a stable pair with p_g = 1 and boundary coefficient c."""
    c = as_fraction(c)
    if not 0 < c <= 1:
        raise ValueError("c must lie in (0, 1]")
    if c <= _SEVEN_THIRTEENTHS:
        return c * c / 42
    if c < _SIX_ELEVENTHS:
        return -Fraction(11, 6) * c * c + 2 * c - _SEVEN_THIRTEENTHS
    return Fraction(1, 143)


# -- named datasets -----------------------------------------------------------

def min_volume_surface_data() -> SurfaceRRData:
    """p_g = 1, K^2 = 1/143, singularities 1/13(1,6) and 1/11(1,7)."""
    return SurfaceRRData(
        chi_O=Fraction(2),
        vol=Fraction(1, 143),
        p_g=1,
        mode="canonical",
        singularities=(HJChain((3, 2, 2, 2, 2, 2)), HJChain((2, 3, 2, 2))),
    )


def boundary_pair_data() -> SurfaceRRData:
    """K ~ 0, D^2 = 1/42, D through A1, A2, A6 points meeting a chain end."""
    return SurfaceRRData(
        chi_O=Fraction(2),
        vol=Fraction(1, 42),
        p_g=1,
        mode="pair",
        singularities=(
            SingularityIncidence(HJChain((2,)), (1,)),
            SingularityIncidence(HJChain((2, 2)), (1, 0)),
            SingularityIncidence(HJChain((2,) * 6), (0,) * 5 + (1,)),
        ),
    )
