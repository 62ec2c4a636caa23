"""Genetic subgroups and bases of p-groups, the maps I and D, and F_n on 2-groups."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .biset_ops import deflate, defres, indinf
from .char_table import CharacterTable, VirtualCharacter, character_table, galois_orbits
from .perm_group import (
    FiniteGroup,
    Section,
    SubgroupRecord,
    _primes_of,
    is_generalized_quaternion,
    normal_rank_one_type,
)
from .rep_rings import QBAR, QPERM, faithful_irreducibles, orbit_of, phi_P, ring_lattice
from .zlinalg import f2_rank, hnf, quotient_map

FUNCTORS = ("Qbar", "Q", "QbarModQ")


def _prime_of_pgroup(P: FiniteGroup) -> int | None:
    ps = _primes_of(P.order)
    if len(ps) > 1:
        raise ValueError(f"{P.name or 'group'} is not a p-group")
    return ps[0] if ps else None


def has_normal_rank_one(P: FiniteGroup, p: int | None = None) -> bool:
    """No normal subgroup isomorphic to C_p x C_p."""
    q = _prime_of_pgroup(P)
    if q is None:
        return True
    if p is not None and p != q:
        raise ValueError(f"not a {p}-group")
    for N in P.normal_subgroups():
        if N.order == q * q and not N.as_group().is_cyclic():
            return False
    return True


@dataclass
class GeneticRecord:
    P: FiniteGroup
    S: SubgroupRecord
    section: Section
    quotient: FiniteGroup  # N_P(S)/S
    type_tag: str
    quaternion_n: int | None
    phi: VirtualCharacter  # Phi of the quotient
    faithful_sum: VirtualCharacter  # faithful Q-class sum of the quotient
    schur_index: int
    V: VirtualCharacter  # on P

    def to_json(self) -> dict:
        return {
            "S_order": self.S.order,
            "normalizer_order": self.section.upper.order,
            "quotient_order": self.quotient.order,
            "type": self.type_tag if self.quaternion_n is None else f"quaternion({self.quaternion_n})",
            "V_degree": self.V.degree(),
            "V": self.V.to_json(),
        }


def _record(P: FiniteGroup, S: SubgroupRecord, p: int | None) -> GeneticRecord | None:
    N = P.normalizer(S)
    sec = Section(N, S)
    Q = sec.quotient.group
    if not has_normal_rank_one(Q, p):
        return None
    tag = normal_rank_one_type(Q) if Q.order > 1 else "cyclic"
    qn = is_generalized_quaternion(Q)
    phi = phi_P(Q)
    tq = character_table(Q)
    orb = orbit_of(tq, faithful_irreducibles(tq)[0])
    m = int(phi.coeffs[orb.members[0]])
    V = indinf(sec, phi)
    return GeneticRecord(P, S, sec, Q, tag or "unknown", qn, phi, orb.class_sum, m, V)


def is_genetic(S: SubgroupRecord, P: FiniteGroup | None = None) -> bool:
    P = P or S.parent
    rec = _record(P, S, _prime_of_pgroup(P))
    return rec is not None and rec.V.norm() == rec.phi.norm()


@dataclass
class GeneticBasis:
    P: FiniteGroup
    records: list[GeneticRecord]

    def __len__(self):
        return len(self.records)

    def quaternion_records(self, min_n: int = 3) -> list[GeneticRecord]:
        return [r for r in self.records if r.quaternion_n is not None and r.quaternion_n >= min_n]

    def to_json(self) -> dict:
        return {"group": self.P.name, "order": self.P.order, "size": len(self.records),
                "records": [r.to_json() for r in self.records]}


class GeneticBasisError(RuntimeError):
    pass


def genetic_basis(P: FiniteGroup, p: int | None = None) -> GeneticBasis:
    cached = P.__dict__.get("_genetic_basis")
    if cached is not None:
        return cached
    q = _prime_of_pgroup(P)
    if p is not None and q is not None and p != q:
        raise ValueError(f"not a {p}-group")
    chosen: list[GeneticRecord] = []
    seen: set[bytes] = set()
    for S in P.subgroups_up_to_conjugacy():
        rec = _record(P, S, q)
        if rec is None or rec.V.norm() != rec.phi.norm():
            continue
        key = rec.V.coeffs.tobytes()
        if key in seen:
            continue
        seen.add(key)
        chosen.append(rec)
    n_orbits = len(galois_orbits(character_table(P), "Q"))
    if len(chosen) != n_orbits:
        raise GeneticBasisError(f"genetic basis has {len(chosen)} records, expected {n_orbits}")
    B = GeneticBasis(P, chosen)
    P.__dict__["_genetic_basis"] = B
    return B


def faithful_part_basis(P: FiniteGroup) -> list[VirtualCharacter]:
    """Faithful Q-class sums; checked to be exactly the class sums killed by all proper deflations."""
    tab = character_table(P)
    faithful = set(faithful_irreducibles(tab))
    normals = [N for N in P.normal_subgroups() if N.order > 1]
    out = []
    for orb in galois_orbits(tab, "Q"):
        killed = all(deflate(P, N, orb.class_sum).norm() == 0 for N in normals)
        is_f = orb.members[0] in faithful
        if killed != is_f:
            raise RuntimeError("faithful class sums disagree with the deflation kernel")
        if is_f:
            out.append(orb.class_sum)
    return out


# -- the maps I and D ------------------------------------------------------------

def _generator(rec: GeneticRecord, functor: str) -> VirtualCharacter:
    """Generator of the faithful part of F(N_P(S)/S)."""
    return rec.phi if functor == "Q" else rec.faithful_sum


def _records_for(basis: GeneticBasis, functor: str) -> list[GeneticRecord]:
    if functor == "QbarModQ":
        return basis.quaternion_records()
    return basis.records


def frak_I(basis: GeneticBasis, functor: str, inputs) -> VirtualCharacter:
    """Sum over records of inputs[k] * Indinf(generator); for QbarModQ the result is a coset representative."""
    recs = _records_for(basis, functor)
    if len(inputs) != len(recs):
        raise ValueError("one input per record is required")
    tab = character_table(basis.P)
    out = VirtualCharacter.zero(tab)
    for a, rec in zip(inputs, recs):
        a = int(a) % 2 if functor == "QbarModQ" else int(a)
        if a:
            out = out + indinf(rec.section, _generator(rec, functor)) * a
    return out


def frak_D(basis: GeneticBasis, functor: str, x: VirtualCharacter) -> list[int]:
    """Defres to each N_P(S)/S, read off on the faithful generator."""
    out = []
    for rec in _records_for(basis, functor):
        y = defres(rec.section, x)
        i = rec.faithful_sum.coeffs.nonzero()[0][0]
        c = int(y.coeffs[i])
        if functor == "Q":
            if c % rec.schur_index:
                raise ArithmeticError("Defres left the rational lattice")
            c //= rec.schur_index
        elif functor == "QbarModQ":
            c %= 2
        out.append(c)
    return out


@dataclass
class RationalityReport:
    group: str
    functor: str
    records: int
    target_rank: int
    span_equal: bool
    d_after_i_identity: bool
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.span_equal and self.d_after_i_identity and self.records == self.target_rank

    def to_json(self) -> dict:
        return {"group": self.group, "functor": self.functor, "records": self.records,
                "target_rank": self.target_rank, "span_equal": self.span_equal,
                "d_after_i_identity": self.d_after_i_identity, "pass": self.passed, **self.details}


def verify_rational(P: FiniteGroup, functor: str) -> RationalityReport:
    if functor not in FUNCTORS:
        raise ValueError(f"functor must be one of {FUNCTORS}")
    B = genetic_basis(P)
    recs = _records_for(B, functor)
    k = len(recs)
    images = [frak_I(B, functor, np.eye(k, dtype=np.int64)[j]) for j in range(k)]
    D = [frak_D(B, functor, v) for v in images]  # row j = D(I(e_j))
    ident = [[int(i == j) for i in range(k)] for j in range(k)]
    r = character_table(P).rank
    if functor == "QbarModQ":
        qm = quotient_map(ring_lattice(P, QBAR).lattice, ring_lattice(P, QPERM).lattice)
        target = qm.structure.f2_dim
        proj = [qm.project(v.coeffs.tolist()) for v in images]
        span_ok = target is not None and f2_rank(proj) == target
        d_ok = [[c % 2 for c in row] for row in D] == ident
        return RationalityReport(P.name or "?", functor, k, target if target is not None else -1,
                                 span_ok, d_ok, {"f2_dim_source": k, "f2_dim_target": target})
    lat = ring_lattice(P, QBAR if functor == "Qbar" else QPERM).lattice
    span = hnf([v.coeffs.tolist() for v in images], r)
    return RationalityReport(P.name or "?", functor, k, lat.rank, span == lat, D == ident)


# -- F_n on 2-groups ---------------------------------------------------------------

@dataclass
class F2Subspace:
    """Subspace of an elementary abelian 2-group, spanned by `vectors` (cokernel coordinates)."""

    ambient_dim: int
    vectors: list[tuple[int, ...]]

    @property
    def dim(self) -> int:
        return f2_rank(self.vectors) if self.vectors else 0

    def contains_space(self, other: "F2Subspace") -> bool:
        return f2_rank(self.vectors + other.vectors) == self.dim

    def __eq__(self, other):
        return isinstance(other, F2Subspace) and self.contains_space(other) and other.contains_space(self)

    def to_json(self) -> dict:
        return {"dim": self.dim, "ambient_dim": self.ambient_dim,
                "vectors": [list(v) for v in self.vectors]}


def schur_quotient_map(P: FiniteGroup):
    return quotient_map(ring_lattice(P, QBAR).lattice, ring_lattice(P, QPERM).lattice)


def F_n_eval_pgroup(P: FiniteGroup, n: int) -> F2Subspace:
    """Span of Indinf(gamma_S) over quaternion records Q_{2^m}, m >= n, inside Rbar_Q/R_Q."""
    qm = schur_quotient_map(P)
    dim = qm.structure.f2_dim
    if dim is None:
        raise ArithmeticError("Rbar_Q/R_Q is not elementary abelian of exponent 2")
    if dim == 0:
        return F2Subspace(0, [])
    B = genetic_basis(P)
    vecs = [qm.project(indinf(r.section, r.faithful_sum).coeffs.tolist()) for r in B.quaternion_records(n)]
    return F2Subspace(dim, [tuple(int(c) % 2 for c in v) for v in vecs])
