"""Exact character tables (Dixon-Schneider), class functions and Galois orbits.

Class-function values are kept as integer vectors over the basis
1, z, ..., z^(phi(N)-1) of Q(zeta_N), padded to length N, together with one
positive common denominator.  With the reduced basis the representation is
canonical, so equality is array equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
import sympy

from .cyclotomic import (
    CyclotomicValue,
    euler_phi,
    fixing_subgroup_over_K,
    reduction_matrix,
    units,
)
from .perm_group import FiniteGroup, GroupHom, SubgroupRecord, order_bound

TABLE_BOUND = 1000


class NotAVirtualCharacter(ValueError):
    pass


class TableError(RuntimeError):
    pass


# -- modular helpers ----------------------------------------------------------

def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@lru_cache(maxsize=None)
def _big_prime(N: int) -> tuple[int, int]:
    """Prime L = 1 mod N just above 2^24 and a primitive N-th root of unity mod L."""
    L = (2**24 // N + 1) * N + 1
    while not sympy.isprime(L):
        L += N
    g = int(sympy.primitive_root(L))
    return L, pow(g, (L - 1) // N, L)


def _rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.nonzero(A[:, c])[0]
        for j in others:
            if j != r:
                A[j] = (A[j] - A[j, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Row basis of {v : A v = 0} over F_p."""
    n = A.shape[1]
    R, piv = _rref_mod(A, p)
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, pc in enumerate(piv):
            out[k, pc] = (-R[i, f]) % p
    return out


# -- canonical cyclotomic arrays -------------------------------------------------

def canonicalize(vals: np.ndarray) -> np.ndarray:
    """Reduce group-ring vectors (last axis, length N) to the padded canonical basis."""
    N = vals.shape[-1]
    R = reduction_matrix(N)
    red = vals @ R
    out = np.zeros_like(vals)
    out[..., : R.shape[1]] = red
    return out


def embed_values(vals: np.ndarray, M: int) -> np.ndarray:
    N = vals.shape[-1]
    if N == M:
        return vals
    out = np.zeros(vals.shape[:-1] + (M,), dtype=vals.dtype)
    out[..., :: M // N] = vals
    return canonicalize(out)


def _convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
    for i in np.nonzero(a.reshape(-1, n).any(axis=0))[0]:
        out += a[..., i: i + 1] * np.roll(b, i, axis=-1)
    return out


def _conj(vals: np.ndarray) -> np.ndarray:
    n = vals.shape[-1]
    return canonicalize(vals[..., (-np.arange(n)) % n])


# -- class functions -----------------------------------------------------------------

class ClassFunction:
    """Class function of `group`; values[s] is the canonical vector for class s, over den."""

    def __init__(self, group: FiniteGroup, values: np.ndarray, den: int = 1, canonical: bool = False):
        values = np.asarray(values, dtype=np.int64)
        if values.ndim != 2 or values.shape[0] != len(group.classes):
            raise ValueError("values must have one row per class")
        if not canonical:
            values = canonicalize(values)
        g = math.gcd(int(den), *(int(x) for x in np.unique(np.abs(values)))) if values.any() else int(den)
        if den < 0:
            g = -g
        self.group = group
        self.values = values // g
        self.den = int(den) // g
        self.conductor = values.shape[1]

    @classmethod
    def constant(cls, G: FiniteGroup, c: int = 1) -> "ClassFunction":
        v = np.zeros((len(G.classes), 1), dtype=np.int64)
        v[:, 0] = c
        return cls(G, v, canonical=True)

    @classmethod
    def regular(cls, G: FiniteGroup) -> "ClassFunction":
        v = np.zeros((len(G.classes), 1), dtype=np.int64)
        v[0, 0] = G.order
        return cls(G, v, canonical=True)

    @classmethod
    def from_values(cls, G: FiniteGroup, vals: Sequence[CyclotomicValue]) -> "ClassFunction":
        N = 1
        for v in vals:
            N = _lcm(N, v.conductor)
        vals = [v.embed(N) for v in vals]
        den = 1
        for v in vals:
            for c in v.coeffs:
                den = _lcm(den, c.denominator)
        arr = np.zeros((len(vals), N), dtype=np.int64)
        for s, v in enumerate(vals):
            arr[s, : len(v.coeffs)] = [int(c * den) for c in v.coeffs]
        return cls(G, arr, den, canonical=True)

    def at(self, M: int) -> np.ndarray:
        return embed_values(self.values, M)

    def _common(self, other: "ClassFunction"):
        if other.group is not self.group:
            raise ValueError("class functions on different groups")
        M = _lcm(self.conductor, other.conductor)
        return self.at(M), other.at(M), M

    def __add__(self, other):
        if isinstance(other, int):
            other = ClassFunction.constant(self.group, other)
        a, b, _ = self._common(other)
        return ClassFunction(self.group, a * other.den + b * self.den, self.den * other.den, canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return ClassFunction(self.group, -self.values, self.den, canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return ClassFunction(self.group, self.values * int(other), self.den, canonical=True)
        if isinstance(other, Fraction):
            return ClassFunction(self.group, self.values * other.numerator, self.den * other.denominator,
                                 canonical=True)
        a, b, _ = self._common(other)
        return ClassFunction(self.group, _convolve(a, b), self.den * other.den)

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, _conj(self.values), self.den, canonical=True)

    def galois(self, k: int) -> "ClassFunction":
        """sigma_k applied to every value."""
        N = self.conductor
        out = np.zeros_like(self.values)
        for t in range(N):
            out[:, (t * k) % N] += self.values[:, t]
        return ClassFunction(self.group, out, self.den)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            return NotImplemented
        a, b, _ = self._common(other)
        return self.den == other.den and bool((a == b).all())

    def __hash__(self):
        return hash((id(self.group), self.den))

    def value(self, s: int) -> CyclotomicValue:
        phi = euler_phi(self.conductor)
        return CyclotomicValue(self.conductor, [Fraction(int(x), self.den) for x in self.values[s, :phi]])

    def values_list(self) -> list[CyclotomicValue]:
        return [self.value(s) for s in range(len(self.group.classes))]

    def degree(self) -> Fraction:
        return Fraction(int(self.values[0, 0]), self.den)

    def is_zero(self) -> bool:
        return not self.values.any()

    def is_integral_valued(self) -> bool:
        return self.den == 1

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values_list()]})"


# -- character tables ----------------------------------------------------------------

def _dixon_prime(exponent: int, order: int) -> int:
    ell = exponent + 1
    while not (sympy.isprime(ell) and ell * ell > 4 * order):
        ell += exponent
    return ell


def _class_matrices(G: FiniteGroup) -> np.ndarray:
    """A[r, s, t] = #{x in C_r : x^-1 g_t in C_s}."""
    k = len(G.classes)
    reps = np.array([c.representative for c in G.classes])
    A = np.zeros((k, k, k), dtype=np.int64)
    for r, c in enumerate(G.classes):
        X = G.inv[np.array(c.members)]
        cls = G.class_of[G.mul[X[:, None], reps[None, :]]]  # (|C_r|, k)
        for t in range(k):
            A[r, :, t] = np.bincount(cls[:, t], minlength=k)
    return A


def _split_eigenspaces(A: np.ndarray, ell: int, elt_orders: list[int]) -> list[np.ndarray]:
    k = A.shape[0]
    spaces = [np.eye(k, dtype=np.int64)]
    # high-order classes tend to separate characters fastest
    order = sorted(range(1, k), key=lambda r: (-elt_orders[r], r))
    for r in order:
        if all(S.shape[0] == 1 for S in spaces):
            break
        Mr = A[r] % ell
        new = []
        for S in spaces:
            d = S.shape[0]
            if d == 1:
                new.append(S)
                continue
            R, piv = _rref_mod(S, ell)
            B = (Mr @ R.T) % ell  # k x d
            Ar = B[piv, :]  # restriction in the basis R
            found = 0
            for lam in range(ell):
                Nsp = _nullspace_mod((Ar - lam * np.eye(d, dtype=np.int64)) % ell, ell)
                if len(Nsp):
                    sub, _ = _rref_mod((Nsp @ R) % ell, ell)
                    new.append(sub)
                    found += Nsp.shape[0]
                    if found == d:
                        break
            if found != d:
                raise TableError("class matrix not diagonalizable over the chosen prime")
        spaces = new
    if any(S.shape[0] != 1 for S in spaces):
        raise TableError("failed to split eigenspaces")
    return [S[0] for S in spaces]


@dataclass
class CharacterTable:
    group: FiniteGroup
    conductor: int
    irr: np.ndarray  # (k, classes, conductor) canonical integer vectors

    @property
    def class_sizes(self) -> np.ndarray:
        return self.group.class_sizes

    @property
    def rank(self) -> int:
        return self.irr.shape[0]

    @property
    def degrees(self) -> list[int]:
        return [int(x) for x in self.irr[:, 0, 0]]

    def character(self, i: int) -> ClassFunction:
        return ClassFunction(self.group, self.irr[i], canonical=True)

    def characters(self) -> list[ClassFunction]:
        return [self.character(i) for i in range(self.rank)]

    def power_map(self, k: int) -> np.ndarray:
        return self.group.power_map(k)

    def value(self, i: int, s: int) -> CyclotomicValue:
        return self.character(i).value(s)

    # exact decomposition: modular guess, exact certificate
    def coordinates(self, f: ClassFunction) -> np.ndarray:
        if f.group is not self.group:
            raise ValueError("class function lives on another group")
        M = _lcm(self.conductor, f.conductor)
        L, z = _big_prime(M)
        powers = np.array([pow(z, t, L) for t in range(M)], dtype=np.int64)
        fv = (f.at(M) % L) @ powers % L * pow(f.den, -1, L) % L
        irr = embed_values(self.irr, M)
        conj_iv = (_conj(irr) % L) @ powers % L
        w = (self.class_sizes % L) * fv % L
        raw = (conj_iv * w[None, :]) % L
        a = raw.sum(axis=1) % L * pow(self.group.order, -1, L) % L
        a = np.where(a > L // 2, a - L, a).astype(np.int64)
        recon = np.tensordot(a, irr, axes=(0, 0))
        if f.den != 1 or not (canonicalize(recon) == f.at(M)).all():
            raise NotAVirtualCharacter("class function is not an integer combination of irreducibles")
        return a

    def is_virtual_character(self, f: ClassFunction) -> bool:
        try:
            self.coordinates(f)
            return True
        except NotAVirtualCharacter:
            return False

    def virtual(self, f: ClassFunction) -> "VirtualCharacter":
        return VirtualCharacter(self, self.coordinates(f))

    def to_json(self) -> dict:
        G = self.group
        return {
            "group": G.name,
            "order": G.order,
            "conductor": self.conductor,
            "classes": [{"representative": repr(G.perm(c.representative)), "size": c.size,
                         "element_order": c.element_order} for c in G.classes],
            "irr": [[self.value(i, s).to_json() for s in range(len(G.classes))] for i in range(self.rank)],
            "power_maps": {str(p): G.power_map(p).tolist() for p in _primes_dividing(G.order)},
        }

    @classmethod
    def from_json(cls, G: FiniteGroup, data: dict) -> "CharacterTable":
        N = int(data["conductor"])
        k = len(data["irr"])
        arr = np.zeros((k, len(G.classes), N), dtype=np.int64)
        for i, row in enumerate(data["irr"]):
            for s, v in enumerate(row):
                cv = CyclotomicValue.from_json(v).embed(N)
                arr[i, s, : len(cv.coeffs)] = [int(c) for c in cv.coeffs]
        return cls(G, N, arr)

    def __eq__(self, other):
        return (isinstance(other, CharacterTable) and self.conductor == other.conductor
                and self.irr.shape == other.irr.shape and bool((self.irr == other.irr).all()))


def _primes_dividing(n: int) -> list[int]:
    return [int(p) for p in sympy.primefactors(n)] if n > 1 else []


def character_table(G: FiniteGroup) -> CharacterTable:
    """Dixon-Schneider over F_ell, lifted through power maps; cached on G."""
    tab = G.__dict__.get("_char_table")
    if tab is not None:
        return tab
    bound = order_bound(TABLE_BOUND)
    if G.order > bound:
        raise ValueError(f"character table bound {bound} exceeded (order {G.order})")
    k = len(G.classes)
    e = G.exponent
    n = G.order
    sizes = G.class_sizes
    inv_cls = G.inverse_classes
    ell = _dixon_prime(e, n)
    if k == 1:
        irr = np.ones((1, 1, e), dtype=np.int64)
        irr[:, :, 1:] = 0
        tab = CharacterTable(G, e, canonicalize(irr))
        G.__dict__["_char_table"] = tab
        return tab
    A = _class_matrices(G)
    vecs = _split_eigenspaces(A, ell, [c.element_order for c in G.classes])
    z = pow(int(sympy.primitive_root(ell)), (ell - 1) // e, ell)
    pmaps = np.array([G.power_map(j) for j in range(e)])  # (e, k)
    orders = [c.element_order for c in G.classes]
    fourier = {}  # o -> matrix of zeta_o^(-t j) mod ell
    for o in set(orders):
        zo = pow(z, e // o, ell)
        fourier[o] = np.array([[pow(zo, (-t * j) % o, ell) for j in range(o)] for t in range(o)], dtype=np.int64)
    rows = []
    for w in vecs:
        w = w * pow(int(w[0]), -1, ell) % ell
        ssum = sum(int(w[s]) * int(w[inv_cls[s]]) * pow(int(sizes[s]), -1, ell) for s in range(k)) % ell
        d2 = n * pow(ssum, -1, ell) % ell
        deg = next((d for d in range(1, math.isqrt(n) + 1) if (d * d - d2) % ell == 0), None)
        if deg is None:
            raise TableError("degree lift failed")
        chi = [int(w[s]) * deg * pow(int(sizes[s]), -1, ell) % ell for s in range(k)]
        chi = np.array(chi, dtype=np.int64)
        vals = np.zeros((k, e), dtype=np.int64)
        for s in range(k):
            o = orders[s]
            m = fourier[o] @ chi[pmaps[:o, s]] % ell * pow(o, -1, ell) % ell
            if (m > deg).any():
                raise TableError("eigenvalue multiplicity lift out of range")
            vals[s, np.arange(o) * (e // o)] = m
        rows.append(canonicalize(vals))
    irr = np.array(rows)

    def key(i):
        flat = irr[i].ravel()
        trivial = bool((irr[i][:, 0] == irr[i][0, 0]).all() and not irr[i][:, 1:].any() and irr[i][0, 0] == 1)
        return (int(irr[i][0, 0]), not trivial, tuple(-flat))

    irr = irr[sorted(range(len(rows)), key=key)]
    tab = CharacterTable(G, e, irr)
    if not check_orthogonality(tab):
        raise TableError("orthogonality check failed")
    G.__dict__["_char_table"] = tab
    return tab


def _pairing_matrix(X: np.ndarray, Y: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """P[i, j] = canonical vector of sum_s w_s X[i,s] conj(Y[j,s])."""
    Yc = _conj(Y)
    k1, c, N = X.shape
    k2 = Y.shape[0]
    P = np.zeros((k1, k2, N), dtype=np.int64)
    Xw = X * weights[None, :, None]
    for a in range(N):
        col = Xw[:, :, a]
        if not col.any():
            continue
        P += np.einsum("is,jst->ijt", col, np.roll(Yc, a, axis=-1))
    return canonicalize(P)


def check_orthogonality(tab: CharacterTable) -> bool:
    G = tab.group
    k = tab.rank
    if k != len(G.classes):
        return False
    P = _pairing_matrix(tab.irr, tab.irr, tab.class_sizes)
    target = np.zeros_like(P)
    target[np.arange(k), np.arange(k), 0] = G.order
    if not (P == target).all():
        return False
    # second relation: columns
    cols = np.transpose(tab.irr, (1, 0, 2))
    Q = _pairing_matrix(cols, cols, np.ones(k, dtype=np.int64))
    target = np.zeros_like(Q)
    target[np.arange(k), np.arange(k), 0] = G.order // tab.class_sizes
    if not (Q == target).all():
        return False
    return int((tab.irr[:, 0, 0] ** 2).sum()) == G.order


# -- virtual characters --------------------------------------------------------------

class VirtualCharacter:
    """Integer combination of irreducible characters, by coordinates."""

    def __init__(self, table: CharacterTable, coeffs: Sequence[int]):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (table.rank,):
            raise ValueError("coordinate vector has wrong length")
        self.table = table
        self.coeffs = coeffs

    @property
    def group(self) -> FiniteGroup:
        return self.table.group

    @classmethod
    def irreducible(cls, table: CharacterTable, i: int) -> "VirtualCharacter":
        v = np.zeros(table.rank, dtype=np.int64)
        v[i] = 1
        return cls(table, v)

    @classmethod
    def zero(cls, table: CharacterTable) -> "VirtualCharacter":
        return cls(table, np.zeros(table.rank, dtype=np.int64))

    @classmethod
    def trivial(cls, table: CharacterTable) -> "VirtualCharacter":
        return cls.irreducible(table, 0)

    def class_function(self) -> ClassFunction:
        vals = np.tensordot(self.coeffs, self.table.irr, axes=(0, 0))
        return ClassFunction(self.group, vals, canonical=True)

    def __add__(self, other):
        return VirtualCharacter(self.table, self.coeffs + other.coeffs)

    def __sub__(self, other):
        return VirtualCharacter(self.table, self.coeffs - other.coeffs)

    def __neg__(self):
        return VirtualCharacter(self.table, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return VirtualCharacter(self.table, self.coeffs * int(other))
        return self.table.virtual(self.class_function() * other.class_function())

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VirtualCharacter) and other.table is self.table and \
            bool((self.coeffs == other.coeffs).all())

    def __hash__(self):
        return hash(tuple(self.coeffs.tolist()))

    def degree(self) -> int:
        return int(self.coeffs @ np.array(self.table.degrees))

    def norm(self) -> int:
        return int((self.coeffs**2).sum())

    def is_character(self) -> bool:
        return bool((self.coeffs >= 0).all())

    def to_json(self) -> list[int]:
        return [int(x) for x in self.coeffs]

    def __repr__(self):
        return f"VirtualCharacter({self.coeffs.tolist()})"


def as_class_function(chi: "VirtualCharacter | ClassFunction") -> ClassFunction:
    return chi.class_function() if isinstance(chi, VirtualCharacter) else chi


def inner_product(theta, psi) -> CyclotomicValue:
    """(1/|G|) sum over classes of size * theta * conj(psi), exactly."""
    a, b = as_class_function(theta), as_class_function(psi)
    if a.group is not b.group:
        raise ValueError("different groups")
    M = _lcm(a.conductor, b.conductor)
    G = a.group
    P = _pairing_matrix(a.at(M)[None], b.at(M)[None], G.class_sizes)[0, 0]
    phi = euler_phi(M)
    den = G.order * a.den * b.den
    return CyclotomicValue(M, [Fraction(int(x), den) for x in P[:phi]])


def kernel_of(chi) -> SubgroupRecord:
    f = as_class_function(chi)
    G = f.group
    if isinstance(chi, VirtualCharacter) and not chi.is_character():
        raise ValueError("kernel is defined here for genuine characters only")
    if isinstance(chi, ClassFunction):
        tab = character_table(G)
        if not tab.virtual(f).is_character():
            raise ValueError("kernel is defined here for genuine characters only")
    deg = f.values[0]
    hit = [s for s in range(len(G.classes)) if (f.values[s] == deg).all()]
    members = [m for s in hit for m in G.classes[s].members]
    return G.subgroup(members, generators=False)


def is_faithful(chi) -> bool:
    return kernel_of(chi).order == 1


# -- Galois orbits -------------------------------------------------------------------

@dataclass(frozen=True)
class GaloisOrbit:
    members: tuple[int, ...]
    class_sum: VirtualCharacter


def galois_permutation(tab: CharacterTable, k: int) -> list[int]:
    """perm[i] = j with sigma_k(chi_i) = chi_j, via the power map g -> g^k."""
    pm = tab.group.power_map(k)
    keys = {tab.irr[j].tobytes(): j for j in range(tab.rank)}
    return [keys[tab.irr[i][pm].tobytes()] for i in range(tab.rank)]


def galois_orbits(tab: CharacterTable, field: str | int = "Q") -> list[GaloisOrbit]:
    """Orbits of Irr under Gal over Q (field 'Q') or over K = Q(mu_p') (field = p)."""
    cache = tab.__dict__.setdefault("_orbits", {})
    if field in cache:
        return cache[field]
    e = tab.conductor
    p = None if field == "Q" else int(field)
    auts = [s.exponent for s in fixing_subgroup_over_K(e, p)] if e > 1 else [1]
    perms = [galois_permutation(tab, k) for k in auts]
    seen = [False] * tab.rank
    out = []
    for i in range(tab.rank):
        if seen[i]:
            continue
        orb = sorted({P[i] for P in perms})
        for j in orb:
            seen[j] = True
        v = np.zeros(tab.rank, dtype=np.int64)
        v[orb] = 1
        out.append(GaloisOrbit(tuple(orb), VirtualCharacter(tab, v)))
    cache[field] = out
    return out


# -- linear characters into mu_p' ----------------------------------------------------

def linear_characters_into_mu_podd(H: FiniteGroup, p: int) -> list[ClassFunction]:
    """Degree-1 characters of H of order prime to p, inflated from H / <H', p-elements>."""
    cache = H.__dict__.setdefault("_lin_podd", {})
    if p in cache:
        return cache[p]
    eo = H.element_orders
    pel = [int(x) for x in np.nonzero(_is_p_power(eo, p))[0]]
    N = H.closure(list(H.derived_subgroup.members) + pel)
    Nrec = H._record(N)
    if Nrec.order == H.order:
        out = [ClassFunction.constant(H, 1)]
    else:
        q = H.quotient(Nrec)
        tab = character_table(q.group)
        out = [inflate_class_function(q.projection, tab.character(i)) for i in range(tab.rank)]
    cache[p] = out
    return out


def _is_p_power(arr: np.ndarray, p: int) -> np.ndarray:
    a = arr.copy()
    while True:
        m = a % p == 0
        if not m.any():
            break
        a = np.where(m, a // p, a)
    return a == 1


def inflate_class_function(proj: GroupHom, f: ClassFunction) -> ClassFunction:
    G = proj.source
    cls = [f.group.class_of[proj.images[c.representative]] for c in G.classes]
    return ClassFunction(G, f.values[cls], f.den, canonical=True)


def linear_order(f: ClassFunction) -> int:
    """Order of a linear character in the dual group."""
    N = f.conductor
    out = 1
    for s in range(len(f.group.classes)):
        x = f.values[s]
        # canonical vectors of roots of unity need not be monomials: find the root directly
        for t in range(N):
            probe = np.zeros(N, dtype=np.int64)
            probe[t] = 1
            if (canonicalize(probe) == x).all():
                out = _lcm(out, N // math.gcd(t, N))
                break
        else:
            raise ValueError("not a linear character")
    return out
