"""Representation-ring lattices in Irr coordinates, Schur indices, gamma_n and Phi_P."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .biset_ops import induce
from .catalog import quaternion
from .char_table import (
    CharacterTable,
    VirtualCharacter,
    character_table,
    galois_orbits,
    is_faithful,
)
from .perm_group import FiniteGroup
from .zlinalg import IntegerLattice, hnf, minimal_multiple


@dataclass(frozen=True)
class FieldSpec:
    """tag: 'complex', 'K' (with prime p), 'Qbar' (rational-valued), or 'Q' (p-groups only)."""

    tag: str
    p: int | None = None

    def __post_init__(self):
        if self.tag not in ("complex", "K", "Qbar", "Q"):
            raise ValueError(f"unknown field tag {self.tag!r}")
        if self.tag == "K" and not self.p:
            raise ValueError("K needs a prime p")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip()
        if t in ("C", "complex"):
            return cls("complex")
        if t in ("Qbar", "rational_valued"):
            return cls("Qbar")
        if t in ("Q", "rational_pgroup"):
            return cls("Q")
        if t.startswith("K"):
            return cls("K", int(t[1:].strip("()_") or 2))
        raise ValueError(f"unknown field {text!r}")

    def __str__(self):
        return f"K{self.p}" if self.tag == "K" else self.tag


COMPLEX = FieldSpec("complex")
QBAR = FieldSpec("Qbar")
QPERM = FieldSpec("Q")


def K(p: int = 2) -> FieldSpec:
    return FieldSpec("K", p)


@dataclass
class RingLattice:
    group: FiniteGroup
    table: CharacterTable
    spec: FieldSpec
    lattice: IntegerLattice
    generators: list[tuple[str, np.ndarray]] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def contains(self, chi: VirtualCharacter) -> bool:
        return self.lattice.contains(chi.coeffs.tolist())


def _pgroup_prime(G: FiniteGroup) -> int | None:
    if G.order == 1:
        return None
    from .perm_group import _primes_of

    ps = _primes_of(G.order)
    return ps[0] if len(ps) == 1 else None


def ring_lattice(G: FiniteGroup, spec: FieldSpec | str) -> RingLattice:
    if isinstance(spec, str):
        spec = FieldSpec.parse(spec)
    cache = G.__dict__.setdefault("_rings", {})
    if spec in cache:
        return cache[spec]
    tab = character_table(G)
    r = tab.rank
    gens: list[tuple[str, np.ndarray]] = []
    if spec.tag == "complex":
        gens = [(f"irr({i})", np.eye(r, dtype=np.int64)[i]) for i in range(r)]
    elif spec.tag in ("K", "Qbar"):
        fld = "Q" if spec.tag == "Qbar" else spec.p
        for k, orb in enumerate(galois_orbits(tab, fld)):
            gens.append((f"classsum({spec},{k})", orb.class_sum.coeffs))
    else:
        if G.order > 1 and _pgroup_prime(G) is None:
            raise ValueError("the permutation-character lattice is only used for p-groups")
        for S in G.subgroups_up_to_conjugacy():
            triv = VirtualCharacter.trivial(character_table(S.as_group()))
            gens.append((f"perm(|S|={S.order})", induce(S, triv).coeffs))
    L = hnf([v.tolist() for _, v in gens], r)
    out = RingLattice(G, tab, spec, L, gens)
    cache[spec] = out
    return out


def orbit_of(tab: CharacterTable, i: int, field_: str | int = "Q"):
    for orb in galois_orbits(tab, field_):
        if i in orb.members:
            return orb
    raise IndexError(i)


def schur_index_Q(P: FiniteGroup, i: int) -> int:
    """Least m with m * (Q-class sum of irr(i)) in the permutation-character lattice."""
    if P.order > 1 and _pgroup_prime(P) != 2:
        raise ValueError("Schur indices here are computed for 2-groups only")
    tab = character_table(P)
    v = orbit_of(tab, i).class_sum.coeffs.tolist()
    m = minimal_multiple(ring_lattice(P, QPERM).lattice, v)
    if m is None:
        raise RuntimeError("class sum outside the rational span of permutation characters")
    return m


_QUAT: dict[int, FiniteGroup] = {}


def quaternion_group(n: int) -> FiniteGroup:
    """The shared model of Q_{2^n}."""
    if n not in _QUAT:
        _QUAT[n] = quaternion(2**n)
    return _QUAT[n]


def faithful_irreducibles(tab: CharacterTable) -> list[int]:
    return [i for i in range(tab.rank) if is_faithful(VirtualCharacter.irreducible(tab, i))]


def gamma_n(n: int, Q: FiniteGroup | None = None) -> VirtualCharacter:
    """Sum of the faithful irreducible characters of Q_{2^n}."""
    if n < 3:
        raise ValueError("gamma_n needs n >= 3")
    Q = Q or quaternion_group(n)
    tab = character_table(Q)
    v = np.zeros(tab.rank, dtype=np.int64)
    v[faithful_irreducibles(tab)] = 1
    return VirtualCharacter(tab, v)


def phi_P(P: FiniteGroup) -> VirtualCharacter:
    """Character of the faithful irreducible QP-module: m_Q(chi) times the Q-class sum of a faithful chi."""
    from .genetic import has_normal_rank_one

    p = _pgroup_prime(P)
    if P.order > 1 and not has_normal_rank_one(P, p):
        raise ValueError("P does not have normal p-rank 1")
    tab = character_table(P)
    faithful = faithful_irreducibles(tab)
    if not faithful:
        raise ValueError("no faithful irreducible character")
    orb = orbit_of(tab, faithful[0])
    if p in (None, 2):
        m = schur_index_Q(P, faithful[0])
    else:
        m = 1  # odd p-groups: Schur indices over Q are 1
    return orb.class_sum * m


def schur_quotient(P: FiniteGroup):
    """QuotientStructure of Rbar_Q(P) / R_Q(P)."""
    from .zlinalg import quotient_invariants

    return quotient_invariants(ring_lattice(P, QBAR).lattice, ring_lattice(P, QPERM).lattice)
