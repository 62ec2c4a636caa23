"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored as residues modulo the n-th cyclotomic polynomial in the
power basis 1, x, ..., x^(phi(n)-1), with exact rational coefficients.  The
representation is canonical, so equality is coefficient equality.

The module also carries the integer "group ring" helpers used by the
character machinery: a vector v of length N stands for sum_t v[t] * zeta_N^t
(an element of Z[C_N] mapped into Q(zeta_N)); ``reduce_group_ring`` sends it
to canonical coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def p_prime_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic; coefficients low -> high
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@lru_cache(maxsize=None)
def reduction_matrix(n: int) -> np.ndarray:
    """Integer matrix R (n x phi(n)) with row t = coordinates of x^t mod Phi_n."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = np.zeros((n, d), dtype=np.int64)
    cur = [0] * d
    if d:
        cur[0] = 1
    for t in range(n):
        rows[t] = cur
        # multiply by x, reduce with x^d = -sum phi[i] x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        for i in range(d):
            cur[i] -= top * phi[i]
    if n == 1:
        rows[:] = 1
    return rows


def reduce_group_ring(vec: np.ndarray) -> np.ndarray:
    """Canonical coordinates of group-ring vectors along the last axis."""
    n = vec.shape[-1]
    return vec @ reduction_matrix(n)


def embed_group_ring(vec: np.ndarray, n: int, m: int) -> np.ndarray:
    """Re-express Z[C_n] vectors (last axis) inside Z[C_m], n | m."""
    if n == m:
        return vec
    if m % n:
        raise ValueError(f"conductor {n} does not divide {m}")
    out = np.zeros(vec.shape[:-1] + (m,), dtype=vec.dtype)
    out[..., :: m // n] = vec
    return out


def cyclic_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product in Z[C_N] along the last axis (broadcasting over the rest)."""
    n = a.shape[-1]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n  # idx[i, k] = k - i
    return np.einsum("...i,...ik->...k", a, b[..., idx])


def conj_group_ring(vec: np.ndarray) -> np.ndarray:
    n = vec.shape[-1]
    return vec[..., (-np.arange(n)) % n]


def galois_group_ring(vec: np.ndarray, k: int) -> np.ndarray:
    n = vec.shape[-1]
    out = np.zeros_like(vec)
    np.add.at(out, (..., (np.arange(n) * k) % n), vec)
    return out


def units(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1] if n > 1 else [1]


@dataclass(frozen=True)
class GaloisAutomorphism:
    """sigma_k : zeta_n -> zeta_n^k."""

    conductor: int
    exponent: int

    def __post_init__(self):
        if math.gcd(self.exponent, self.conductor) != 1:
            raise ValueError(f"{self.exponent} is not a unit mod {self.conductor}")
        object.__setattr__(self, "exponent", self.exponent % self.conductor if self.conductor > 1 else 1)

    def __repr__(self):
        return f"sigma_{self.exponent} (mod {self.conductor})"


def fixing_subgroup_over_K(n: int, p: int | None) -> list[GaloisAutomorphism]:
    """Automorphisms of Q(zeta_n) fixing Q(zeta_n) intersected with Q(mu_p').

    ``p=None`` means the base field is Q, and every sigma_k is returned.
    """
    if p is None:
        return [GaloisAutomorphism(n, k) for k in units(n)]
    m = p_prime_part(n, p)
    return [GaloisAutomorphism(n, k) for k in units(n) if (k - 1) % m == 0]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class CyclotomicValue:
    """Element of Q(zeta_n) in canonical power-basis coordinates."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs):
        d = euler_phi(conductor)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != d:
            raise ValueError(f"expected {d} coefficients for conductor {conductor}")
        self.conductor = conductor
        self.coeffs = coeffs
        self._hash = None

    # constructors
    @classmethod
    def rational(cls, q, conductor: int = 1) -> "CyclotomicValue":
        d = euler_phi(conductor)
        return cls(conductor, [Fraction(q)] + [Fraction(0)] * (d - 1))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicValue":
        vec = [0] * n
        vec[k % n] = 1
        return cls.from_group_ring(n, vec)

    @classmethod
    def from_group_ring(cls, n: int, vec, den: int = 1) -> "CyclotomicValue":
        """Value of sum_t vec[t] zeta_n^t / den."""
        r = reduction_matrix(n)
        acc = [0] * r.shape[1]
        for t, c in enumerate(vec):
            c = int(c)
            if c:
                row = r[t]
                for i in range(len(acc)):
                    acc[i] += c * int(row[i])
        return cls(n, [Fraction(a, den) for a in acc])

    def to_group_ring(self) -> tuple[list[Fraction], int]:
        return list(self.coeffs) + [Fraction(0)] * (self.conductor - len(self.coeffs)), self.conductor

    # structure
    def embed(self, m: int) -> "CyclotomicValue":
        if m == self.conductor:
            return self
        if m % self.conductor:
            raise ValueError(f"cannot embed conductor {self.conductor} into {m}")
        step = m // self.conductor
        r = reduction_matrix(m)
        acc = [Fraction(0)] * r.shape[1]
        for t, c in enumerate(self.coeffs):
            if c:
                row = r[t * step]
                for i in range(len(acc)):
                    if row[i]:
                        acc[i] += c * int(row[i])
        return CyclotomicValue(m, acc)

    def _common(self, other) -> tuple["CyclotomicValue", "CyclotomicValue"]:
        if not isinstance(other, CyclotomicValue):
            other = CyclotomicValue.rational(other, self.conductor)
        m = _lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # arithmetic
    def __add__(self, other):
        a, b = self._common(other)
        return CyclotomicValue(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicValue) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        n = a.conductor
        prod = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        r = reduction_matrix(n)
        acc = [Fraction(0)] * r.shape[1]
        for t, c in enumerate(prod):
            if c:
                row = r[t % n]
                for i in range(len(acc)):
                    if row[i]:
                        acc[i] += c * int(row[i])
        return CyclotomicValue(n, acc)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicValue":
        return galois_apply(GaloisAutomorphism(self.conductor, -1 if self.conductor > 1 else 1), self)

    def norm(self) -> Fraction:
        vals = [galois_apply(GaloisAutomorphism(self.conductor, k), self) for k in units(self.conductor)]
        total = reduce(lambda x, y: x * y, vals)
        return total.coeffs[0]

    def inverse(self) -> "CyclotomicValue":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_n)")
        others = [galois_apply(GaloisAutomorphism(self.conductor, k), self)
                  for k in units(self.conductor) if k != 1]
        num = reduce(lambda x, y: x * y, others, CyclotomicValue.rational(1, self.conductor))
        # self * num is the field norm, a nonzero rational
        return num / (self * num).coeffs[0]

    def __truediv__(self, other):
        if not isinstance(other, CyclotomicValue):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CyclotomicValue(self.conductor, [x / other for x in self.coeffs])
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # comparisons
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def minimal(self) -> "CyclotomicValue":
        """Same value expressed in the smallest conductor that contains it."""
        n = self.conductor
        for m in sorted(d for d in range(1, n + 1) if n % d == 0):
            fixers = [k for k in units(n) if (k - 1) % m == 0]
            if all(galois_apply(GaloisAutomorphism(n, k), self) == self for k in fixers):
                # value lies in Q(zeta_m); read off by solving in the embedded basis
                step = n // m
                r = reduction_matrix(n)
                cols = [r[t * step] for t in range(euler_phi(m))]
                sol = _solve_rational(cols, self.coeffs)
                if sol is not None:
                    return CyclotomicValue(m, sol)
        return self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicValue.rational(other)
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            m = self.minimal()
            self._hash = hash((m.conductor, m.coeffs))
        return self._hash

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.conductor}^{i}")
        return " + ".join(terms) if terms else "0"

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.conductor), math.sin(2 * math.pi / self.conductor))
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"conductor": self.conductor,
                "coefficients": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicValue":
        return cls(int(data["conductor"]), [Fraction(s) for s in data["coefficients"]])


def _solve_rational(cols, target):
    """Solve sum_j x_j cols[j] = target over Q; None if inconsistent."""
    n = len(target)
    k = len(cols)
    rows = [[Fraction(int(cols[j][i])) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    piv_cols, r = [], 0
    for c in range(k):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][k]
    return sol


def galois_apply(sigma: GaloisAutomorphism, v: CyclotomicValue) -> CyclotomicValue:
    """Apply zeta -> zeta^k, embedding v into sigma's conductor if needed."""
    n = _lcm(sigma.conductor, v.conductor)
    if n != sigma.conductor:
        # sigma must extend; any lift of k to (Z/n)^* agrees on Q(zeta_{sigma.conductor})
        k = next(k for k in units(n) if (k - sigma.exponent) % sigma.conductor == 0)
        sigma = GaloisAutomorphism(n, k)
    v = v.embed(n)
    r = reduction_matrix(n)
    acc = [Fraction(0)] * r.shape[1]
    for t, c in enumerate(v.coeffs):
        if c:
            row = r[(t * sigma.exponent) % n]
            for i in range(len(acc)):
                if row[i]:
                    acc[i] += c * int(row[i])
    return CyclotomicValue(n, acc)


def is_rational(v: CyclotomicValue) -> Fraction | None:
    """The rational value of v if every sigma_k fixes it, else None."""
    for k in units(v.conductor):
        if galois_apply(GaloisAutomorphism(v.conductor, k), v) != v:
            return None
    return v.coeffs[0]
