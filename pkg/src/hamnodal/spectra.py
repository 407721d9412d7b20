"""Laplacian spectrum of H(n, q): eigenvalues, multiplicities, eigenfunction checks
and tensor products."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .core import GraphParams, GridFunction, laplacian_apply
from .errors import AlphabetMismatch, IndexOutOfRange


@dataclass(frozen=True)
class EigenvalueId:
    params: GraphParams
    i: int

    @property
    def eigenvalue(self) -> int:
        return eigenvalue(self.params, self.i)

    @property
    def multiplicity(self) -> int:
        return multiplicity(self.params, self.i)


@dataclass(frozen=True)
class CourantPosition:
    """1-based rank ``k`` of the eigenvalue in the sorted spectrum, and its multiplicity ``r``."""

    k: int
    r: int


def _check_index(params: GraphParams, i: int, lowest: int = 0) -> None:
    if not isinstance(i, int) or not lowest <= i <= params.n:
        raise IndexOutOfRange(f"eigenvalue index {i!r} outside [{lowest}, {params.n}]")


def eigenvalue(params: GraphParams, i: int) -> int:
    _check_index(params, i)
    return params.q * i


def multiplicity(params: GraphParams, i: int) -> int:
    _check_index(params, i)
    return comb(params.n, i) * (params.q - 1) ** i


def courant_position(params: GraphParams, i: int) -> CourantPosition:
    _check_index(params, i)
    k = 1 + sum(multiplicity(params, j) for j in range(i))
    return CourantPosition(k, multiplicity(params, i))


def is_eigenfunction(f: GridFunction, lam) -> bool:
    """Exact check of ``L f == lam * f`` for a nonzero ``f``."""
    if f.is_zero():
        return False
    lf = laplacian_apply(f)
    return all(a == lam * b for a, b in zip(lf.values, f.values))


def tensor_product(f1: GridFunction, f2: GridFunction) -> GridFunction:
    """(f1 ⊗ f2)(x, y) = f1(x) f2(y); x takes the low coordinates, y the high ones."""
    if f1.params.q != f2.params.q:
        raise AlphabetMismatch(f"q={f1.params.q} vs q={f2.params.q}")
    params = GraphParams(f1.params.n + f2.params.n, f1.params.q)
    low = f1.values
    return GridFunction(params, tuple(b * a for b in f2.values for a in low))


def extend_by_constant(g: GridFunction, extra: int) -> GridFunction:
    """g ⊗ 1 ⊗ ... ⊗ 1 with ``extra`` new high coordinates."""
    if extra < 0:
        raise ValueError("extra must be non-negative")
    if extra == 0:
        return g
    params = GraphParams(g.params.n + extra, g.params.q)
    return GridFunction(params, g.values * (g.params.q**extra))


def _coordinate_difference(q: int, j: int) -> tuple:
    return tuple(1 if a == 0 else -1 if a == j else 0 for a in range(q))


def _colex_subsets(n: int, i: int):
    return sorted(itertools.combinations(range(n), i), key=lambda s: s[::-1])


def eigenspace_basis(params: GraphParams, i: int) -> list[GridFunction]:
    """Integer basis of the (q*i)-eigenspace.

    One element per i-subset S of coordinates (colex order) and map
    j: S -> {1..q-1} (lexicographic): the product over t in S of
    [x_t = 0] - [x_t = j(t)], constant on the other coordinates.
    """
    _check_index(params, i, lowest=1)
    n, q = params.n, params.q
    strides = params.strides
    basis = []
    for subset in _colex_subsets(n, i):
        for labels in itertools.product(range(1, q), repeat=i):
            factors = [(strides[t], _coordinate_difference(q, j)) for t, j in zip(subset, labels)]
            values = []
            for x in range(params.size):
                v = 1
                for stride, table in factors:
                    v *= table[(x // stride) % q]
                    if not v:
                        break
                values.append(v)
            basis.append(GridFunction(params, tuple(values)))
    return basis
