"""Equitable 2-partitions of Hamming graphs and their associated eigenfunctions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import GraphParams, GridFunction, VertexSet, decode, translate_set
from .errors import AlphabetTooSmall, BadLevel, NotAPartition, NotEquitable, ParamError


@dataclass(frozen=True)
class EquitablePartition2:
    """A verified equitable partition (C1, C2); C2 is always the complement of C1."""

    params: GraphParams
    c1: VertexSet
    quotient: tuple[tuple[int, int], tuple[int, int]]

    @property
    def c2(self) -> VertexSet:
        return self.c1.complement()

    def to_json(self) -> dict:
        return {
            "n": self.params.n,
            "q": self.params.q,
            "c1": self.c1.indices(),
            "quotient": [list(row) for row in self.quotient],
        }


def _neighbour_counts(params: GraphParams, flags: np.ndarray) -> np.ndarray:
    """Number of neighbours of every vertex inside the set given by ``flags``."""
    # A·1_C = deg·1_C − L·1_C
    ind = flags.astype(np.int64)
    return params.degree * ind - np.asarray(kernels.laplacian(ind, params.n, params.q))


def verify_equitable(params: GraphParams, c1: VertexSet, c2: VertexSet) -> EquitablePartition2:
    """Check that (c1, c2) is an equitable partition and compute its quotient matrix.

    Raises NotEquitable carrying the first vertex (in index order) whose counts
    differ from those of the first vertex of its cell.
    """
    if c1.params != params or c2.params != params:
        raise NotAPartition("cells live on a different graph")
    if not c1 or not c2:
        raise NotAPartition("both cells must be nonempty")
    if not c1.isdisjoint(c2):
        raise NotAPartition("cells overlap")
    if (c1 | c2).mask != VertexSet.full(params).mask:
        raise NotAPartition("cells do not cover every vertex")

    in1 = c1.to_bool().astype(bool)
    to1 = _neighbour_counts(params, in1)
    rows = []
    for cell in (in1, ~in1):
        members = np.flatnonzero(cell)
        ref = int(to1[members[0]])
        bad = members[to1[members] != ref]
        if bad.size:
            witness = decode(int(bad[0]), params)
            raise NotEquitable(
                f"vertex {witness.coords} has {int(to1[bad[0]])} neighbours in C1, expected {ref}",
                witness=witness,
            )
        rows.append((ref, params.degree - ref))
    return EquitablePartition2(params, c1, (rows[0], rows[1]))


def multiplication_construction(d: EquitablePartition2, k: int) -> EquitablePartition2:
    """Lift a partition of H(m, 2) to H(km, 2) by the parities of k-coordinate blocks.

    Block j covers coordinates (j-1)k+1 .. jk; x lies in C_i exactly when its
    vector of block parities lies in D_i. The quotient matrix becomes k·S.
    """
    if d.params.q != 2:
        raise ParamError("the multiplication construction needs a hypercube")
    if k < 1:
        raise ParamError("k must be positive")
    m = d.params.n
    params = GraphParams(k * m, 2)
    idx = np.arange(params.size, dtype=np.int64)
    reduced = np.zeros(params.size, dtype=np.int64)
    for j in range(m):
        block = (idx >> (j * k)) & ((1 << k) - 1)
        parity = np.zeros(params.size, dtype=np.int64)
        for b in range(k):
            parity ^= (block >> b) & 1
        reduced |= parity << j
    d1 = d.c1.to_bool().astype(bool)
    c1 = VertexSet.from_bool(params, d1[reduced])
    return verify_equitable(params, c1, c1.complement())


_D1_CODEWORDS = [(0, 0, 0), (1, 1, 1)]


def example_partition() -> EquitablePartition2:
    """({000, 111}, the other six words) in H(3, 2)."""
    params = GraphParams(3, 2)
    c1 = VertexSet.from_coords(params, _D1_CODEWORDS)
    return verify_equitable(params, c1, c1.complement())


def type_a_partition(k: int) -> EquitablePartition2:
    """Partition of H(3k, 2) with quotient matrix (0 3k; k 2k)."""
    base = example_partition()
    return base if k == 1 else multiplication_construction(base, k)


def gamma_level(params: GraphParams, a: int) -> VertexSet:
    """Γ_a: vertices whose coordinate sum is a modulo q."""
    if not isinstance(a, int) or not 0 <= a < params.q:
        raise BadLevel(f"level {a!r} outside Z_{params.q}")
    return VertexSet.from_bool(params, _levels(params) == a)


def _levels(params: GraphParams) -> np.ndarray:
    idx = np.arange(params.size, dtype=np.int64)
    total = np.zeros(params.size, dtype=np.int64)
    for stride in params.strides:
        total += (idx // stride) % params.q
    return total % params.q


def type_b_partition(params: GraphParams) -> EquitablePartition2:
    """(Γ_0, Γ_1 ∪ ... ∪ Γ_{q-1}) with quotient matrix (0 n(q-1); n n(q-2))."""
    c1 = gamma_level(params, 0)
    return verify_equitable(params, c1, c1.complement())


def level_band_partition(params: GraphParams) -> EquitablePartition2:
    """(Γ_0 ∪ Γ_1, Γ_2 ∪ ... ∪ Γ_{q-1}) for q >= 4; quotient (n n(q-2); 2n n(q-3))."""
    if params.q < 4:
        raise AlphabetTooSmall(f"level band partition needs q >= 4, got q={params.q}")
    c1 = VertexSet.from_bool(params, _levels(params) <= 1)
    return verify_equitable(params, c1, c1.complement())


def translate_partition(p: EquitablePartition2, t: int) -> EquitablePartition2:
    c3 = translate_set(p.c1, t)
    return verify_equitable(p.params, c3, c3.complement())


def associated_function(p: EquitablePartition2) -> GridFunction:
    """s12 on C1 and -s21 on C2; an (s12 + s21)-eigenfunction."""
    s12 = p.quotient[0][1]
    s21 = p.quotient[1][0]
    return GridFunction(p.params, tuple(s12 if b else -s21 for b in p.c1.to_bool().tolist()))


def edge_identity_holds(p: EquitablePartition2) -> bool:
    """|C1|·s12 == |C2|·s21 (double counting of the edges between the cells)."""
    return len(p.c1) * p.quotient[0][1] == len(p.c2) * p.quotient[1][0]
