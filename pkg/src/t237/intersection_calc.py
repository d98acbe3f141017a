"""Intersection calculus on configurations of curves and on integral lattices.

A :class:`CurveConfig` is a labelled set of curves with its Gram matrix
``diag(selfint) + adjacency``.  Divisors with rational coefficients are
:class:`QDivisor` objects keyed by curve label.  All curves are assumed to be
smooth rational, so ``K . C = -2 - C^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .exact_algebra import as_fraction


class NotContractibleError(ValueError):
    """The curves to be contracted do not span a negative definite lattice."""


@dataclass(frozen=True)
class CurveConfig:
    names: tuple[str, ...]
    selfint: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.names)
        object.__setattr__(self, "names", tuple(str(x) for x in self.names))
        object.__setattr__(self, "selfint", tuple(int(x) for x in self.selfint))
        object.__setattr__(self, "adjacency", tuple(tuple(int(x) for x in row) for row in self.adjacency))
        if len(set(self.names)) != n:
            raise ValueError("curve labels must be unique")
        if len(self.selfint) != n or len(self.adjacency) != n or any(len(r) != n for r in self.adjacency):
            raise ValueError("configuration dimensions do not match")
        for i in range(n):
            if self.adjacency[i][i] != 0:
                raise ValueError("adjacency must have zero diagonal")
            for j in range(n):
                if self.adjacency[i][j] != self.adjacency[j][i] or self.adjacency[i][j] < 0:
                    raise ValueError("adjacency must be symmetric and nonnegative")

    @classmethod
    def from_edges(cls, names: Sequence[str], selfint: Sequence[int], edges: Iterable[tuple[int, int]]) -> CurveConfig:
        n = len(names)
        adj = [[0] * n for _ in range(n)]
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at curve {i}")
            adj[i][j] += 1
            adj[j][i] += 1
        return cls(tuple(names), tuple(selfint), tuple(tuple(r) for r in adj))

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"unknown curve {label!r}") from None

    def edges(self) -> list[tuple[int, int]]:
        n = len(self.names)
        return [(i, j) for i in range(n) for j in range(i + 1, n) for _ in range(self.adjacency[i][j])]

    def canonical_degree(self, label: str) -> int:
        return -2 - self.selfint[self.index(label)]


@dataclass(frozen=True)
class QDivisor:
    """Rational linear combination of labelled curves (zero terms dropped)."""

    coefficients: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {str(k): as_fraction(v) for k, v in self.coefficients.items()}
        object.__setattr__(self, "coefficients", {k: v for k, v in clean.items() if v != 0})

    def __getitem__(self, label: str) -> Fraction:
        return self.coefficients.get(label, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, QDivisor):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __add__(self, other: QDivisor) -> QDivisor:
        out = dict(self.coefficients)
        for k, v in other.coefficients.items():
            out[k] = out.get(k, 0) + v
        return QDivisor(out)

    def __mul__(self, c) -> QDivisor:
        c = as_fraction(c)
        return QDivisor({k: v * c for k, v in self.coefficients.items()})

    __rmul__ = __mul__

    def support(self) -> set[str]:
        return set(self.coefficients)

    def vector(self, config: CurveConfig) -> list[Fraction]:
        unknown = self.support() - set(config.names)
        if unknown:
            raise KeyError(f"divisor supported on unknown curves {sorted(unknown)}")
        return [self[name] for name in config.names]


def gram(config: CurveConfig) -> list[list[int]]:
    n = len(config.names)
    return [[config.selfint[i] if i == j else config.adjacency[i][j] for j in range(n)] for i in range(n)]


def determinant(G) -> int | Fraction:
    return linalg.bareiss_det(G)


def signature(G) -> tuple[int, int, int]:
    """Inertia triple (positive, negative, zero)."""
    return linalg.inertia(G)


def intersect(config: CurveConfig, D1: QDivisor, D2: QDivisor) -> Fraction:
    return Fraction(linalg.bilinear(gram(config), D1.vector(config), D2.vector(config)))


def self_intersection(config: CurveConfig, D: QDivisor) -> Fraction:
    return intersect(config, D, D)


def _contracted_block(config: CurveConfig, contracted: Iterable[str]) -> tuple[list[int], list[list[int]]]:
    idx = [config.index(c) for c in contracted]
    if len(set(idx)) != len(idx):
        raise ValueError("contracted curves listed twice")
    G = gram(config)
    block = [[G[i][j] for j in idx] for i in idx]
    if idx and not linalg.is_negative_definite(block):
        raise NotContractibleError(
            "contracted curves " + ", ".join(config.names[i] for i in idx) + " are not negative definite"
        )
    return idx, block


def _solve_exceptional(config, contracted, rhs_pairings) -> dict[str, Fraction]:
    idx, block = _contracted_block(config, contracted)
    if not idx:
        return {}
    v = linalg.solve(block, [-x for x in rhs_pairings(idx)])
    return {config.names[i]: c for i, c in zip(idx, v)}


def pullback(config: CurveConfig, contracted: Sequence[str], strict: QDivisor) -> QDivisor:
    """Numerical pullback of ``strict`` under contraction of ``contracted``.

    The result is ``strict + sum v_i E_i`` with ``result . E_i = 0`` for every
    contracted curve ``E_i``.
    """
    contracted = list(contracted)
    if strict.support() & set(contracted):
        raise ValueError("strict transform must not involve contracted curves")
    G = gram(config)
    s = strict.vector(config)

    def pairings(idx):
        return [sum(G[i][j] * s[j] for j in range(len(s))) for i in idx]

    return strict + QDivisor(_solve_exceptional(config, contracted, pairings))


def pullback_canonical(config: CurveConfig, contracted: Sequence[str], K_incidence: QDivisor | None = None) -> QDivisor:
    """``K_incidence + B`` where ``(K + B) . E_i = 0`` on the contracted curves.

    ``K . E_i`` is taken from adjunction; ``K_incidence`` is an optional
    representative of ``K`` away from the contracted curves, returned
    alongside ``B`` so that the result represents ``pi^* K``.
    """
    contracted = list(contracted)
    K_incidence = K_incidence or QDivisor()
    if K_incidence.support() & set(contracted):
        raise ValueError("canonical representative must not involve contracted curves")

    def pairings(idx):
        return [-2 - config.selfint[i] for i in idx]

    return K_incidence + QDivisor(_solve_exceptional(config, contracted, pairings))


# -- lattices ---------------------------------------------------------------

LatticeVector = tuple[int, ...]


def pairing(G, v: Sequence[int], w: Sequence[int]) -> int:
    if len(v) != len(G) or len(w) != len(G):
        raise ValueError("vector length does not match the lattice rank")
    return linalg.bilinear(G, v, w)


def weyl_reflect(G, v: Sequence[int], root: Sequence[int]) -> LatticeVector:
    """Reflection ``v -> v + (v . r) r`` in a root with ``r . r = -2``."""
    if pairing(G, root, root) != -2:
        raise ValueError("reflection vector must have square -2")
    c = pairing(G, v, root)
    return tuple(a + c * b for a, b in zip(v, root))


def in_fundamental_chamber(G, v: Sequence[int], simple_roots: Iterable[Sequence[int]]) -> bool:
    return all(pairing(G, v, r) >= 0 for r in simple_roots)


@dataclass(frozen=True)
class HyperbolicSplitting:
    e: LatticeVector
    e_dual: LatticeVector
    complement_basis: tuple[LatticeVector, ...]
    complement_gram: tuple[tuple[int, ...], ...]


def _check_even_unimodular(G):
    if any(G[i][i] % 2 for i in range(len(G))):
        raise ValueError("lattice is not even")
    if abs(determinant(G)) != 1:
        raise ValueError("lattice is not unimodular")


def split_hyperbolic(G, e: Sequence[int]) -> HyperbolicSplitting:
    """Split off the hyperbolic plane spanned by a primitive isotropic ``e``.

    Finds ``e'`` with ``e'^2 = 0`` and ``e . e' = 1`` and a Z-basis of the
    orthogonal complement of ``<e, e'>``.
    """
    _check_even_unimodular(G)
    e = tuple(int(x) for x in e)
    if pairing(G, e, e) != 0:
        raise ValueError("vector is not isotropic")
    if linalg.content(e) != 1:
        raise ValueError("vector is not primitive")
    functional = linalg.mat_vec(G, e)
    v = linalg.solve_unit_functional(functional)
    half = pairing(G, v, v) // 2
    e_dual = tuple(a - half * b for a, b in zip(v, e))
    n = len(G)
    images = []
    for k in range(n):
        x = [int(i == k) for i in range(n)]
        a, b = pairing(G, x, e_dual), pairing(G, x, e)
        images.append([xi - a * ei - b * fi for xi, ei, fi in zip(x, e, e_dual)])
    basis = tuple(tuple(r) for r in linalg.integer_row_basis(images))
    cg = tuple(tuple(pairing(G, r, s) for s in basis) for r in basis)
    return HyperbolicSplitting(e, e_dual, basis, cg)


# -- the configurations used by the minimal-volume surfaces -----------------

T237_NAMES = tuple(f"Theta{i}" for i in range(10))


def t237_config() -> CurveConfig:
    """Ten (-2)-curves: chain Theta0 - ... - Theta8 with Theta9 on Theta6."""
    edges = [(i, i + 1) for i in range(8)] + [(6, 9)]
    return CurveConfig.from_edges(T237_NAMES, (-2,) * 10, edges)


def type_one_config() -> CurveConfig:
    """Blow-up of the T_{2,3,7} configuration at Theta5 meet Theta6.

    The exceptional (-1)-curve ``E`` separates Theta5 and Theta6, which become
    (-3)-curves.
    """
    names = T237_NAMES[:6] + ("E",) + T237_NAMES[6:]
    pos = {n: i for i, n in enumerate(names)}
    selfint = [-2] * 11
    selfint[pos["Theta5"]] = selfint[pos["Theta6"]] = -3
    selfint[pos["E"]] = -1
    chain = list(T237_NAMES[:6]) + ["E", "Theta6", "Theta7", "Theta8"]
    edges = [(pos[a], pos[b]) for a, b in zip(chain, chain[1:])]
    edges.append((pos["Theta6"], pos["Theta9"]))
    return CurveConfig.from_edges(names, selfint, edges)


def t237_gram() -> list[list[int]]:
    return gram(t237_config())


SIMPLE_ROOTS: tuple[LatticeVector, ...] = tuple(tuple(int(i == k) for i in range(10)) for k in range(10))

# polarization, section and fibre classes in the simple-root basis
H_VECTOR: LatticeVector = (6, 12, 18, 24, 30, 36, 42, 28, 14, 21)
S_VECTOR: LatticeVector = (1, 0, 0, 0, 0, 0, 0, 0, 0, 0)
F_VECTOR: LatticeVector = (0, 1, 2, 3, 4, 5, 6, 4, 2, 3)
