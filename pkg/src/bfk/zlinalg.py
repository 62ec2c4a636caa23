"""Exact integer linear algebra: Hermite and Smith normal forms, lattices, quotients.

Matrices are lists of rows of Python ints.  Lattices are row lattices inside
Z^r, stored by their (unique) row-style Hermite normal form: pivots strictly
increase to the right, pivots are positive, and entries above a pivot lie in
[0, pivot).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def _copy(M: Sequence[Sequence[int]]) -> Matrix:
    return [[int(x) for x in row] for row in M]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else [()] * cols
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def hnf_with_transform(M: Sequence[Sequence[int]], ncols: int | None = None,
                       transform: bool = True) -> tuple[Matrix, Matrix | None]:
    """Row Hermite normal form H of M with unimodular U such that U M = H.

    H keeps all m rows (zero rows last).  Pivot rule: for each column from the
    left, the lowest-magnitude nonzero entry among the remaining rows is moved
    up and used to clear the column (Euclid steps).
    """
    A = _copy(M)
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = identity(m) if transform else None
    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][j]))
            if p != r:
                A[r], A[p] = A[p], A[r]
                if U is not None:
                    U[r], U[p] = U[p], U[r]
            done = True
            pv = A[r][j]
            for i in range(r + 1, m):
                if A[i][j]:
                    q = A[i][j] // pv
                    if q:
                        A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                        if U is not None:
                            U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if A[i][j]:
                        done = False
            if done:
                break
        if r < m and A[r][j] != 0:
            if A[r][j] < 0:
                A[r] = [-x for x in A[r]]
                if U is not None:
                    U[r] = [-x for x in U[r]]
            pv = A[r][j]
            for i in range(r):
                q = A[i][j] // pv
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if U is not None:
                        U[i] = [x - q * y for x, y in zip(U[i], U[r])]
            r += 1
    return A, U


class IntegerLattice:
    """Sublattice of Z^r given by a Hermite-normal-form row basis."""

    def __init__(self, ambient_rank: int, basis: Sequence[Sequence[int]] = ()):
        self.ambient_rank = ambient_rank
        H, _ = hnf_with_transform(basis, ambient_rank, transform=False)
        self.basis: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in H if any(row))
        self.pivots = tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    @classmethod
    def full(cls, r: int) -> "IntegerLattice":
        return cls(r, identity(r))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, IntegerLattice) and self.ambient_rank == other.ambient_rank
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_rank, self.basis))

    def __repr__(self):
        return f"IntegerLattice(rank={self.rank}, ambient={self.ambient_rank})"

    def coordinates(self, v: Sequence[int]) -> list[int] | None:
        """Integer coordinates of v in the HNF basis, or None if v is not in L."""
        if len(v) != self.ambient_rank:
            raise ValueError(f"dimension mismatch: {len(v)} vs {self.ambient_rank}")
        v = [int(x) for x in v]
        coords = []
        for row, j in zip(self.basis, self.pivots):
            if any(v[:j]):
                return None
            q, rem = divmod(v[j], row[j])
            if rem:
                return None
            coords.append(q)
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        if any(v):
            return None
        return coords

    def contains(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None

    def rational_coordinates(self, v: Sequence[int]) -> list[Fraction] | None:
        """Coordinates over Q, or None when v is outside the Q-span."""
        if len(v) != self.ambient_rank:
            raise ValueError(f"dimension mismatch: {len(v)} vs {self.ambient_rank}")
        v = [Fraction(x) for x in v]
        coords = []
        for row, j in zip(self.basis, self.pivots):
            if any(v[:j]):
                return None
            q = v[j] / row[j]
            coords.append(q)
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        if any(v):
            return None
        return coords

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        return all(self.contains(row) for row in other.basis)

    def __add__(self, other: "IntegerLattice") -> "IntegerLattice":
        return IntegerLattice(self.ambient_rank, list(self.basis) + list(other.basis))


def hnf(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntegerLattice:
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    return IntegerLattice(n, M)


def contains(L: IntegerLattice, v: Sequence[int]) -> tuple[bool, list[int] | None]:
    coords = L.coordinates(v)
    return coords is not None, coords


def minimal_multiple(L: IntegerLattice, v: Sequence[int]) -> int | None:
    """Least m >= 1 with m*v in L; None if v is outside the Q-span of L."""
    coords = L.rational_coordinates(v)
    if coords is None:
        return None
    m = 1
    for c in coords:
        m = m * c.denominator // gcd(m, c.denominator)
    return m


def solve_in_generators(gens: Sequence[Sequence[int]], v: Sequence[int]) -> list[int] | None:
    """Integer x with sum_i x_i gens[i] = v, or None."""
    if not gens:
        return [] if not any(v) else None
    n = len(v)
    H, U = hnf_with_transform(gens, n)
    coords = []
    w = [int(x) for x in v]
    rows = [(i, row) for i, row in enumerate(H) if any(row)]
    for i, row in rows:
        j = next(k for k, x in enumerate(row) if x)
        if any(w[:j]):
            return None
        q, rem = divmod(w[j], row[j])
        if rem:
            return None
        coords.append((i, q))
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    if any(w):
        return None
    x = [0] * len(gens)
    for i, q in coords:
        for k in range(len(gens)):
            x[k] += q * U[i][k]
    return x


def snf(M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix, Matrix, list[int]]:
    """Smith normal form: returns (U, D, V, Vinv, diag) with U M V = D.

    U and V are unimodular; diag lists the diagonal entries d_1 | d_2 | ...
    (length min(m, n)), with zeros last.
    """
    A = _copy(M)
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        A[dst] = [x - q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst -= q * col src
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]
        # inverse: row src of Vinv += q * row dst
        Vinv[src] = [x + q * y for x, y in zip(Vinv[src], Vinv[dst])]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, q)
                    if A[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # divisibility: pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    return U, A, V, Vinv, diag


@dataclass(frozen=True)
class QuotientStructure:
    """Invariant factors of a finitely generated abelian group (with 1s kept)."""

    invariant_factors: tuple[int, ...]
    free_rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)

    @property
    def is_elementary_2(self) -> bool:
        return self.free_rank == 0 and all(d in (1, 2) for d in self.invariant_factors)

    @property
    def f2_dim(self) -> int | None:
        """F_2-dimension; None (flagged) unless the quotient is elementary abelian of exponent 2."""
        if not self.is_elementary_2:
            return None
        return sum(1 for d in self.invariant_factors if d == 2)

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors), "free_rank": self.free_rank,
                "f2_dim": self.f2_dim, "elementary_2": self.is_elementary_2}


@dataclass
class QuotientMap:
    """Projection L_big -> L_big / L_small in Smith coordinates."""

    big: IntegerLattice
    small: IntegerLattice
    structure: QuotientStructure
    _V: Matrix = field(repr=False)
    _Vinv: Matrix = field(repr=False)
    _diag: list[int] = field(repr=False)

    @property
    def nontrivial(self) -> list[int]:
        """Smith positions carrying a nonzero cyclic factor (d != 1)."""
        r = self.big.rank
        out = [i for i, d in enumerate(self._diag) if d != 1]
        out += list(range(len(self._diag), r))
        return out

    def project(self, v: Sequence[int]) -> tuple[int, ...]:
        """Quotient coordinates: one entry per nontrivial factor, reduced mod d (free: raw)."""
        c = self.big.coordinates(v)
        if c is None:
            raise ValueError("vector is not in the ambient lattice")
        w = [sum(ci * self._V[i][j] for i, ci in enumerate(c)) for j in range(self.big.rank)]
        out = []
        for i in self.nontrivial:
            d = self._diag[i] if i < len(self._diag) else 0
            out.append(w[i] % d if d else w[i])
        return tuple(out)

    def representatives(self) -> list[list[int]]:
        """Ambient vectors whose classes generate the nontrivial factors, in order."""
        reps = []
        for i in self.nontrivial:
            c = self._Vinv[i]
            reps.append([sum(ci * self.big.basis[k][j] for k, ci in enumerate(c))
                         for j in range(self.big.ambient_rank)])
        return reps


def quotient_map(big: IntegerLattice, small: IntegerLattice) -> QuotientMap:
    if big.ambient_rank != small.ambient_rank:
        raise ValueError("ambient ranks differ")
    rows = []
    for row in small.basis:
        c = big.coordinates(row)
        if c is None:
            raise ValueError("small lattice is not contained in big lattice")
        rows.append(c)
    r = big.rank
    if rows:
        U, D, V, Vinv, diag = snf(rows, r)
    else:
        V, Vinv, diag = identity(r), identity(r), []
    k = len(diag)
    factors = tuple(abs(d) for d in diag if d != 0)
    free = r - len(factors)
    structure = QuotientStructure(tuple(sorted(factors, key=lambda d: (d != 1, d))), free)
    return QuotientMap(big, small, structure, V, Vinv, [abs(d) for d in diag[:k]])


def quotient_invariants(big: IntegerLattice, small: IntegerLattice) -> QuotientStructure:
    return quotient_map(big, small).structure


def f2_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over F_2 of integer vectors (entries reduced mod 2)."""
    basis: dict[int, int] = {}
    for v in vectors:
        x = 0
        for i, a in enumerate(v):
            if a % 2:
                x |= 1 << i
        while x:
            h = x.bit_length() - 1
            if h in basis:
                x ^= basis[h]
            else:
                basis[h] = x
                break
    return len(basis)
