import pytest
from hypothesis import given, settings, strategies as st

from bfk.zlinalg import (
    IntegerLattice,
    contains,
    f2_rank,
    hnf,
    matmul,
    minimal_multiple,
    quotient_invariants,
    quotient_map,
    snf,
    solve_in_generators,
)


def test_hnf_example():
    L = hnf([[2, 0], [0, 2], [1, 1]])
    assert L.basis == ((1, 1), (0, 2)) or [list(r) for r in L.basis] == [[1, 1], [0, 2]]


def test_snf_examples():
    _, _, _, _, d = snf([[2, 0], [0, 1]])
    assert d == [1, 2]
    q = quotient_invariants(IntegerLattice.full(3), hnf([], 3))
    assert q.free_rank == 3


def test_contains_examples():
    L = hnf([[1, 1], [0, 2]])
    assert contains(L, [0, 0])[0]
    ok, c = contains(L, [1, 3])
    assert ok and c == [1, 1]
    assert not contains(L, [1, 2])[0]


def test_minimal_multiple_examples():
    assert minimal_multiple(hnf([[1, 1], [0, 2]]), [1, 3]) == 1
    assert minimal_multiple(hnf([[2, 0]]), [1, 0]) == 2
    assert minimal_multiple(hnf([[1, 1]]), [1, 0]) is None


def test_quotient_examples():
    Z2 = IntegerLattice.full(2)
    q = quotient_invariants(Z2, hnf([[2, 0], [0, 2]]))
    assert q.torsion == (2, 2) and q.f2_dim == 2
    assert quotient_invariants(Z2, Z2).torsion == ()
    q = quotient_invariants(Z2, hnf([[1, 0], [0, 4]]))
    assert q.torsion == (4,) and q.f2_dim is None and not q.is_elementary_2
    with pytest.raises(ValueError):
        quotient_invariants(hnf([[2, 0], [0, 1]]), Z2)


def test_quotient_map_projection():
    qm = quotient_map(IntegerLattice.full(3), hnf([[2, 0, 0], [0, 2, 0], [0, 0, 1]]))
    assert qm.structure.f2_dim == 2
    assert qm.project([2, 4, 7]) == (0, 0)
    reps = qm.representatives()
    assert f2_rank([qm.project(r) for r in reps]) == 2


def test_solve_in_generators():
    gens = [[2, 0], [0, 3], [1, 1]]
    x = solve_in_generators(gens, [5, 7])
    assert [sum(x[k] * gens[k][j] for k in range(3)) for j in range(2)] == [5, 7]
    assert solve_in_generators([[2, 0]], [1, 0]) is None


mats = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=0, max_size=5)
    .map(lambda rows: (rows, c)))


@settings(max_examples=80, deadline=None)
@given(mats)
def test_hnf_idempotent(mc):
    M, c = mc
    L = hnf(M, c)
    assert hnf([list(r) for r in L.basis], c) == L


@settings(max_examples=80, deadline=None)
@given(mats, st.lists(st.integers(-3, 3), min_size=25, max_size=25))
def test_hnf_unique_under_row_ops(mc, noise):
    M, c = mc
    if not M:
        return
    # add integer combinations of rows and permute: the lattice is unchanged
    extra = [[sum(noise[(i + j) % 25] * M[i][k] for i in range(len(M))) for k in range(c)] for j in range(2)]
    M2 = list(reversed(M)) + extra
    assert hnf(M2, c) == hnf(M, c)


def _unimodular(U):
    from sympy import Matrix

    return abs(Matrix(U).det()) == 1


@settings(max_examples=80, deadline=None)
@given(mats)
def test_snf_certificate(mc):
    M, c = mc
    if not M:
        return
    U, D, V, Vinv, diag = snf(M, c)
    assert matmul(matmul(U, M), V) == D
    assert matmul(V, Vinv) == [[int(i == j) for j in range(c)] for i in range(c)]
    assert _unimodular(U) and _unimodular(V)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    for i in range(len(D)):
        for j in range(c):
            assert D[i][j] == (diag[i] if i == j else 0)


@settings(max_examples=120, deadline=None)
@given(mats, st.lists(st.integers(-8, 8), min_size=4, max_size=4))
def test_contains_iff_minimal_multiple_one(mc, v):
    M, c = mc
    L = hnf(M, c)
    v = v[:c]
    assert contains(L, v)[0] == (minimal_multiple(L, v) == 1)
