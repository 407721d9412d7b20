import random
from math import comb

import pytest

import oracles
from hamnodal import catalog
from hamnodal.core import GraphParams, GridFunction, encode
from hamnodal.errors import AlphabetMismatch, IndexOutOfRange
from hamnodal.linalg import rank
from hamnodal.nodal import snd
from hamnodal.spectra import (
    courant_position,
    eigenspace_basis,
    eigenvalue,
    extend_by_constant,
    is_eigenfunction,
    multiplicity,
    tensor_product,
)

GRAPHS = [(n, q) for q in range(2, 7) for n in range(1, 7) if q**n <= 729]
P = 2**61 - 1


def test_eigenvalue_examples():
    assert eigenvalue(GraphParams(3, 3), 2) == 6
    assert eigenvalue(GraphParams(4, 5), 0) == 0
    assert eigenvalue(GraphParams(5, 2), 3) == 6
    with pytest.raises(IndexOutOfRange):
        eigenvalue(GraphParams(3, 3), 4)
    with pytest.raises(IndexOutOfRange):
        eigenvalue(GraphParams(3, 3), -1)


def test_multiplicity_examples():
    assert multiplicity(GraphParams(4, 2), 2) == 6
    assert multiplicity(GraphParams(3, 3), 3) == 8


@pytest.mark.parametrize("n, q", GRAPHS)
def test_multiplicities_sum_to_vertex_count(n, q):
    params = GraphParams(n, q)
    assert sum(multiplicity(params, i) for i in range(n + 1)) == q**n


@pytest.mark.parametrize("n, q", [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3), (2, 4), (2, 5)])
def test_spectrum_matches_dense_oracle(n, q):
    params = GraphParams(n, q)
    expected = []
    for i in range(n + 1):
        expected += [eigenvalue(params, i)] * multiplicity(params, i)
    assert oracles.spectrum(n, q) == expected


def test_courant_position_examples():
    pos = courant_position(GraphParams(3, 2), 2)
    assert (pos.k, pos.r) == (5, 3)
    pos = courant_position(GraphParams(2, 3), 2)
    assert (pos.k, pos.r) == (6, 4)
    for n, q in GRAPHS:
        pos = courant_position(GraphParams(n, q), 0)
        assert (pos.k, pos.r) == (1, 1)


@pytest.mark.parametrize("n, q", [(3, 2), (2, 3), (2, 4), (3, 3)])
def test_courant_position_against_sorted_spectrum(n, q):
    eigs = oracles.spectrum(n, q)
    params = GraphParams(n, q)
    for i in range(n + 1):
        pos = courant_position(params, i)
        assert eigs.index(q * i) + 1 == pos.k
        assert eigs.count(q * i) == pos.r


def test_is_eigenfunction_examples():
    assert is_eigenfunction(catalog.psi(2), 6)
    assert not is_eigenfunction(GridFunction.constant(GraphParams(2, 3), 0), 0)
    assert not is_eigenfunction(catalog.phi(1), 4)
    assert is_eigenfunction(catalog.phi(1), 2)
    assert is_eigenfunction(GridFunction.constant(GraphParams(2, 2), 3), 0)


def test_tensor_product_examples():
    f = tensor_product(catalog.phi(1), catalog.phi(2))
    assert f.params == GraphParams(4, 2)
    assert is_eigenfunction(f, 4)
    ones = tensor_product(GridFunction.constant(GraphParams(1, 3), 1), GridFunction.constant(GraphParams(2, 3), 1))
    assert ones == GridFunction.constant(GraphParams(3, 3), 1)
    with pytest.raises(AlphabetMismatch):
        tensor_product(catalog.phi(1), catalog.psi(1))


def test_tensor_product_coordinate_layout():
    a = GridFunction.from_values(GraphParams(1, 3), [1, 2, 3])
    b = GridFunction.from_values(GraphParams(1, 3), [10, 20, 30])
    f = tensor_product(a, b)
    for x in range(3):
        for y in range(3):
            assert f[(x, y)] == a[(x,)] * b[(y,)]


def test_tensor_product_with_constant_keeps_snd():
    for f in (catalog.u2_33(), catalog.phi(1), catalog.lambda1_snd2(GraphParams(2, 4))):
        one = GridFunction.constant(GraphParams(1, f.params.q), 1)
        assert snd(tensor_product(f, one)) == snd(f) == 2


CATALOG_EIGEN = [
    (catalog.phi(1), 2), (catalog.phi(2), 2),
    (catalog.psi(1), 6), (catalog.psi(2), 6), (catalog.psi(3), 6),
    (catalog.u2_33(), 6),
]


def test_tensor_products_over_catalog():
    for f, lam in CATALOG_EIGEN:
        for g, mu in CATALOG_EIGEN:
            if f.params.q != g.params.q or f.params.n + g.params.n > 6:
                continue
            assert is_eigenfunction(tensor_product(f, g), lam + mu)


def test_extend_by_constant():
    phi1 = catalog.phi(1)
    assert extend_by_constant(phi1, 0) == phi1
    ext = extend_by_constant(phi1, 1)
    assert ext.params == GraphParams(3, 2)
    assert is_eigenfunction(ext, 2) and snd(ext) == 2
    for x in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        for a in (0, 1):
            assert ext[x + (a,)] == phi1[x]
    with pytest.raises(ValueError):
        extend_by_constant(phi1, -1)


def test_extend_preserves_fiber_values_and_snd():
    g = catalog.u2_33()
    ext = extend_by_constant(g, 2)
    for a in range(3):
        for b in range(3):
            fiber = [ext[encode(tuple(x) + (a, b), ext.params).coords] for x in oracles.vertices(3, 3)]
            assert fiber == list(g.values)
    assert snd(ext) == 2


def test_basis_examples():
    (b,) = eigenspace_basis(GraphParams(1, 2), 1)
    assert list(b.values) == [1, -1]
    basis = eigenspace_basis(GraphParams(2, 2), 1)
    assert len(basis) == 2 and all(is_eigenfunction(f, 2) for f in basis)
    basis = eigenspace_basis(GraphParams(2, 3), 2)
    assert len(basis) == 4 and rank([f.values for f in basis]) == 4
    with pytest.raises(IndexOutOfRange):
        eigenspace_basis(GraphParams(2, 3), 0)


def test_basis_order():
    # subsets in colex order: {1}, {2}, {3}; labels lexicographic within a subset
    basis = eigenspace_basis(GraphParams(3, 3), 1)
    supports = [[t for t in range(3) if any(f[x] != f[tuple(0 if s == t else x[s] for s in range(3))]
                                              for x in oracles.vertices(3, 3))] for f in basis]
    assert supports == [[0], [0], [1], [1], [2], [2]]
    assert basis[1][(2, 0, 0)] == -1 and basis[0][(1, 0, 0)] == -1


@pytest.mark.parametrize("n, q", GRAPHS)
def test_basis_elements_are_eigenfunctions(n, q):
    params = GraphParams(n, q)
    for i in range(1, n + 1):
        basis = eigenspace_basis(params, i)
        assert len(basis) == multiplicity(params, i)
        for f in basis:
            assert f.is_integral()
            assert is_eigenfunction(f, q * i)


def _rank_mod_p(rows):
    rows = [[v % P for v in r] for r in rows]
    rk, ncols = 0, len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = pow(rows[rk][c], P - 2, P)
        rows[rk] = [v * inv % P for v in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                m = rows[i][c]
                rows[i] = [(a - m * b) % P for a, b in zip(rows[i], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rk


@pytest.mark.parametrize("n, q", GRAPHS)
def test_basis_has_full_rank(n, q):
    """Exact rank equals the multiplicity; rank mod p is a lower bound for the rational rank."""
    params = GraphParams(n, q)
    for i in range(1, n + 1):
        vecs = [list(f.values) for f in eigenspace_basis(params, i)]
        if len(vecs) * q**n <= 4000:
            assert rank(vecs) == len(vecs)
        else:
            assert _rank_mod_p(vecs) == len(vecs)


def test_random_combinations_stay_in_eigenspace():
    rng = random.Random(7)
    params = GraphParams(3, 3)
    basis = eigenspace_basis(params, 2)
    for _ in range(20):
        f = GridFunction.constant(params, 0)
        for b in basis:
            f = f + b.scale(rng.randint(-3, 3))
        if not f.is_zero():
            assert is_eigenfunction(f, 6)
