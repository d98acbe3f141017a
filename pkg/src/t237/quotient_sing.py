"""Cyclic quotient surface singularities.

A singularity ``1/n(1, q)`` is resolved by a Hirzebruch-Jung chain of smooth
rational curves with self-intersections ``-b_1, ..., -b_k`` where
``n/q = b_1 - 1/(b_2 - 1/(... - 1/b_k))``.  The chain Gram matrix has
``-b_i`` on the diagonal and ``1`` between neighbours.

The Riemann-Roch correction term of a Weil divisor at the singular point is
computed from the rational pullback over the chain: writing the pullback of
``n D`` as ``n D~ + sum v_i E_i``,

    delta = -1/2 * {v} . (n D~ + floor(v) - K)

with ``K . E_i = b_i - 2`` by adjunction.  For multiples of the canonical
class the discrepancy divisor ``B`` (``pi^* K = K~ + B``) gives
``delta(nK) = 1/2 {nB} . ({nB} + K)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .linalg import solve


@dataclass(frozen=True)
class CyclicQuotient:
    """The class of ``1/n(1, q)``, stored with ``q = min(q, q^-1 mod n)``."""

    n: int
    q: int

    def __post_init__(self):
        n, q = self.n, self.q
        if n < 2 or not 0 < q < n or math.gcd(n, q) != 1:
            raise ValueError(f"1/{n}(1,{q}) is not a cyclic quotient type")
        object.__setattr__(self, "q", min(q, pow(q, -1, n)))

    def chain(self) -> HJChain:
        return hj_expand(self.n, self.q)

    def __str__(self):
        return f"1/{self.n}(1,{self.q})"


@dataclass(frozen=True)
class HJChain:
    selfints: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.selfints)
        if not b:
            raise ValueError("empty chain")
        if any(x < 2 for x in b):
            raise ValueError(f"chain entries must be >= 2, got {list(b)}")
        object.__setattr__(self, "selfints", b)

    def __len__(self):
        return len(self.selfints)

    def __iter__(self):
        return iter(self.selfints)

    def reversed(self) -> HJChain:
        return HJChain(self.selfints[::-1])

    @cached_property
    def gram(self) -> list[list[int]]:
        k = len(self.selfints)
        M = [[0] * k for _ in range(k)]
        for i, b in enumerate(self.selfints):
            M[i][i] = -b
            if i + 1 < k:
                M[i][i + 1] = M[i + 1][i] = 1
        return M

    @property
    def canonical_degrees(self) -> list[int]:
        """``K . E_i = b_i - 2`` (adjunction on smooth rational curves)."""
        return [b - 2 for b in self.selfints]


@dataclass(frozen=True)
class SingularityIncidence:
    """Chain plus the transversal intersection numbers of a strict transform."""

    chain: HJChain
    strict_mult: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.chain, HJChain):
            object.__setattr__(self, "chain", HJChain(tuple(self.chain)))
        m = tuple(int(x) for x in self.strict_mult)
        if len(m) != len(self.chain):
            raise ValueError("incidence vector length differs from chain length")
        if any(x < 0 for x in m):
            raise ValueError("incidence multiplicities must be nonnegative")
        object.__setattr__(self, "strict_mult", m)

    def reversed(self) -> SingularityIncidence:
        return SingularityIncidence(self.chain.reversed(), self.strict_mult[::-1])


def hj_expand(n: int, q: int) -> HJChain:
    """Negative-regular continued fraction of ``n/q``."""
    if not 0 < q < n or math.gcd(n, q) != 1:
        raise ValueError(f"(n, q) = ({n}, {q}) must satisfy 0 < q < n and gcd(n, q) = 1")
    out = []
    while q:
        b = -(-n // q)
        out.append(b)
        n, q = q, b * q - n
    return HJChain(tuple(out))


def chain_fraction(chain: HJChain | Sequence[int]) -> Fraction:
    """Value of ``b_1 - 1/(b_2 - ...)``."""
    b = list(chain)
    x = Fraction(b[-1])
    for bi in reversed(b[:-1]):
        x = bi - 1 / x
    return x


def hj_evaluate(chain: HJChain | Sequence[int]) -> CyclicQuotient:
    x = chain_fraction(chain)
    return CyclicQuotient(x.numerator, x.denominator)


def _as_chain(chain) -> HJChain:
    return chain if isinstance(chain, HJChain) else HJChain(tuple(chain))


def discrepancies(chain: HJChain | Sequence[int]) -> list[Fraction]:
    """Coefficients of ``B`` with ``pi^* K = K~ + B`` along the chain."""
    chain = _as_chain(chain)
    return solve(chain.gram, [-k for k in chain.canonical_degrees])


def pullback_coefficients(inc: SingularityIncidence, n_mult: int = 1) -> list[Fraction]:
    """Exceptional coefficients of the pullback of ``n_mult * D``."""
    return solve(inc.chain.gram, [-n_mult * m for m in inc.strict_mult])


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


def delta(inc: SingularityIncidence, n_mult: int) -> Fraction:
    """Correction term of ``n_mult * D`` at the singular point."""
    M = inc.chain.gram
    K = inc.chain.canonical_degrees
    v = pullback_coefficients(inc, n_mult)
    fl = [math.floor(x) for x in v]
    total = Fraction(0)
    for i, vi in enumerate(v):
        fi = _frac(vi)
        if fi:
            pairing = n_mult * inc.strict_mult[i] + sum(fl[j] * M[i][j] for j in range(len(v))) - K[i]
            total += fi * pairing
    return -total / 2


def delta_canonical(chain: HJChain | Sequence[int], n_mult: int) -> Fraction:
    """Correction term of ``n_mult * K`` at the singular point."""
    chain = _as_chain(chain)
    M = chain.gram
    K = chain.canonical_degrees
    x = [_frac(n_mult * b) for b in discrepancies(chain)]
    k = len(x)
    quad = sum(x[i] * M[i][j] * x[j] for i in range(k) for j in range(k))
    lin = sum(xi * ki for xi, ki in zip(x, K))
    return Fraction(quad + lin) / 2


def _denominator_lcm(values) -> int:
    r = 1
    for v in values:
        r = math.lcm(r, Fraction(v).denominator)
    return r


def local_index(inc: SingularityIncidence) -> int:
    """Smallest r with ``r * D`` Cartier at the point: lcm of pullback denominators."""
    return _denominator_lcm(pullback_coefficients(inc, 1))


def canonical_index(chain: HJChain | Sequence[int]) -> int:
    """Cartier index of ``K`` at the point."""
    return _denominator_lcm(discrepancies(chain))
