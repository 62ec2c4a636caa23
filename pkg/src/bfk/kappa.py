"""The image of kappa, the cokernel R_K / im(kappa), detection, F_n and span checks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .biset_ops import FiberedBasisElement, act_fibered, induce, product_group, restrict
from .char_table import (
    ClassFunction,
    VirtualCharacter,
    character_table,
    galois_permutation,
    linear_characters_into_mu_podd,
)
from .cyclotomic import fixing_subgroup_over_K
from .genetic import F2Subspace
from .perm_group import (
    BoundExceeded,
    FiniteGroup,
    SubgroupRecord,
    classify_elementary,
    has_quaternion_subquotient,
    is_generalized_quaternion,
    order_bound,
    sylow_subgroup,
)
from .rep_rings import K, RingLattice, faithful_irreducibles, quaternion_group, gamma_n, ring_lattice
from .zlinalg import IntegerLattice, QuotientMap, QuotientStructure, hnf, quotient_map, solve_in_generators

EXACT_MODE_BOUND = 256


class NotKValued(ValueError):
    pass


@dataclass(frozen=True)
class MonomialGenerator:
    H: SubgroupRecord
    phi: ClassFunction
    induced: VirtualCharacter

    def label(self) -> str:
        return f"Ind(|H|={self.H.order}, phi)"


def monomial_generators(G: FiniteGroup, p: int = 2,
                        subgroups: list[SubgroupRecord] | None = None) -> list[MonomialGenerator]:
    """Ind_H^G(phi) for H over subgroup classes and phi: H -> mu_p'."""
    if subgroups is None:
        cache = G.__dict__.setdefault("_monomials", {})
        if p in cache:
            return cache[p]
    out = []
    for H in (G.subgroups_up_to_conjugacy() if subgroups is None else subgroups):
        for phi in linear_characters_into_mu_podd(H.as_group(), p):
            out.append(MonomialGenerator(H, phi, induce(H, character_table(H.as_group()).virtual(phi))))
    if subgroups is None:
        cache[p] = out
    return out


def im_kappa_lattice(G: FiniteGroup, p: int = 2) -> RingLattice:
    cache = G.__dict__.setdefault("_imkappa", {})
    if p in cache:
        return cache[p]
    tab = character_table(G)
    gens = [(m.label(), m.induced.coeffs) for m in monomial_generators(G, p)]
    L = hnf([v.tolist() for _, v in gens], tab.rank)
    out = RingLattice(G, tab, K(p), L, gens)
    cache[p] = out
    return out


@dataclass
class CokernelStructure:
    group: FiniteGroup
    p: int
    R_K: IntegerLattice
    im_kappa: IntegerLattice
    qmap: QuotientMap
    representatives: list[VirtualCharacter] = field(default_factory=list)

    @property
    def structure(self) -> QuotientStructure:
        return self.qmap.structure

    @property
    def f2_dim(self) -> int | None:
        return self.structure.f2_dim

    @property
    def defect(self) -> str | None:
        s = self.structure
        if self.p == 2 and not s.is_elementary_2:
            return "invariant factors outside {1, 2}"
        if self.p != 2 and s.torsion:
            return "nontrivial cokernel for odd p"
        return None

    def project(self, chi: VirtualCharacter) -> tuple[int, ...]:
        return self.qmap.project(chi.coeffs.tolist())

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "order": self.group.order,
            "p": self.p,
            "irr_rank": int(self.R_K.ambient_rank),
            "R_K_rank": self.R_K.rank,
            "im_kappa_basis": [list(r) for r in self.im_kappa.basis],
            **self.structure.to_json(),
            "representatives": [r.to_json() for r in self.representatives],
            "defect": self.defect,
            "pass": self.defect is None,
        }


def cokernel(G: FiniteGroup, p: int = 2) -> CokernelStructure:
    cache = G.__dict__.setdefault("_cokernel", {})
    if p in cache:
        return cache[p]
    RK = ring_lattice(G, K(p)).lattice
    im = im_kappa_lattice(G, p).lattice
    if not RK.contains_lattice(im):
        raise RuntimeError("im(kappa) is not contained in R_K")
    qm = quotient_map(RK, im)
    tab = character_table(G)
    reps = [VirtualCharacter(tab, v) for v in qm.representatives()]
    out = CokernelStructure(G, p, RK, im, qm, reps)
    cache[p] = out
    return out


def is_K_valued(chi: VirtualCharacter, p: int = 2) -> bool:
    tab = chi.table
    e = tab.conductor
    for s in fixing_subgroup_over_K(e, p) if e > 1 else []:
        perm = galois_permutation(tab, s.exponent)
        if not (chi.coeffs[perm] == chi.coeffs).all():
            return False
    return True


def member_im_kappa(G: FiniteGroup, chi: VirtualCharacter, p: int = 2) -> bool:
    if not is_K_valued(chi, p):
        raise NotKValued("character is not K-valued")
    return im_kappa_lattice(G, p).lattice.contains(chi.coeffs.tolist())


# -- detection ----------------------------------------------------------------------

def detecting_subgroups(G: FiniteGroup, n: int = 3) -> list[SubgroupRecord]:
    """Subgroup-class representatives that are elementary for 2 and have a Q_{2^n} subquotient."""
    cache = G.__dict__.setdefault("_detecting", {})
    if n in cache:
        return cache[n]
    out = []
    for H in G.subgroups_up_to_conjugacy():
        if H.order % 2**n:
            continue
        Hg = H.as_group()
        if 2 not in classify_elementary(Hg, 2).elementary_for:
            continue
        if has_quaternion_subquotient(Hg, n)[0]:
            out.append(H)
    cache[n] = out
    return out


@dataclass
class DetectionReport:
    in_image: bool
    direct: bool
    witnesses: list[tuple[SubgroupRecord, bool]]

    @property
    def discrepancy(self) -> bool:
        return self.in_image != self.direct

    def to_json(self) -> dict:
        return {
            "in_image": self.in_image,
            "direct_membership": self.direct,
            "discrepancy": self.discrepancy,
            "witnesses": [{"order": H.order, "restriction_in_image": ok} for H, ok in self.witnesses],
            "pass": not self.discrepancy,
        }


def detect(G: FiniteGroup, chi: VirtualCharacter, p: int = 2) -> DetectionReport:
    if not is_K_valued(chi, p):
        raise NotKValued("character is not K-valued")
    wit = []
    for H in detecting_subgroups(G):
        r = restrict(H, chi)
        wit.append((H, member_im_kappa(H.as_group(), r, p)))
    in_image = all(ok for _, ok in wit)
    return DetectionReport(in_image, member_im_kappa(G, chi, p), wit)


# -- F_n ------------------------------------------------------------------------------

def _cokernel_space(C: CokernelStructure, chars: list[VirtualCharacter]) -> F2Subspace:
    dim = C.f2_dim
    if dim is None:
        raise ArithmeticError("cokernel is not an F_2-space")
    return F2Subspace(dim, [tuple(int(x) % 2 for x in C.project(c)) for c in chars] if dim else [])


def _faithful_sum(Q: FiniteGroup) -> VirtualCharacter:
    tab = character_table(Q)
    v = np.zeros(tab.rank, dtype=np.int64)
    v[faithful_irreducibles(tab)] = 1
    return VirtualCharacter(tab, v)


def quaternion_sections(G: FiniteGroup, n: int):
    """Sections (H, N) up to conjugacy of H with H/N generalized quaternion of order >= 2^n."""
    out = []
    for sec in G.sections():
        o = sec.order
        if o < 2**n or o & (o - 1):
            continue
        if is_generalized_quaternion(sec.quotient.group):
            out.append(sec)
    return out


def F_n_sections(G: FiniteGroup, n: int, p: int = 2) -> F2Subspace:
    """Span of Ind_H^G(phi * Inf gamma_{H/N}) over quaternion sections and odd linear phi of H."""
    C = cokernel(G, p)
    if C.f2_dim == 0:
        return F2Subspace(0, [])
    chars = []
    for sec in quaternion_sections(G, n):
        H = sec.upper
        Hg = H.as_group()
        q = sec.quotient
        infl = _inflate(q.projection, _faithful_sum(q.group))
        for phi in linear_characters_into_mu_podd(Hg, p):
            chars.append(induce(H, character_table(Hg).virtual(phi * infl)))
    return _cokernel_space(C, chars)


def _inflate(proj, chi: VirtualCharacter) -> ClassFunction:
    from .biset_ops import inflate

    return inflate(proj, chi.class_function())


def F_n_exact(G: FiniteGroup, n: int, p: int = 2, bound: int = EXACT_MODE_BOUND) -> F2Subspace:
    """Span of [G x Q_{2^n} / U, phi] . gamma_n over all (U, phi) up to conjugacy."""
    Qn = quaternion_group(n)
    if G.order * Qn.order > order_bound(bound):
        raise BoundExceeded(f"exact mode needs |G x Q_{2**n}| <= {order_bound(bound)}")
    C = cokernel(G, p)
    if C.f2_dim == 0:
        return F2Subspace(0, [])
    gam = gamma_n(n, Qn)
    P = product_group(G, Qn)
    chars = []
    for U in P.subgroups_up_to_conjugacy():
        for phi in linear_characters_into_mu_podd(U.as_group(), p):
            chars.append(act_fibered(FiberedBasisElement(G, Qn, U, phi), gam))
    return _cokernel_space(C, chars)


def F_n_eval(G: FiniteGroup, n: int, mode: str = "sections", p: int = 2) -> F2Subspace:
    if mode == "sections":
        return F_n_sections(G, n, p)
    if mode == "exact":
        return F_n_exact(G, n, p)
    raise ValueError("mode must be 'exact' or 'sections'")


# -- span identities ------------------------------------------------------------------

def _ind_of_lattice(G: FiniteGroup, subgroups, field_p: int) -> IntegerLattice:
    tab = character_table(G)
    rows = []
    for H in subgroups:
        for _, v in ring_lattice(H.as_group(), K(field_p)).generators:
            chi = VirtualCharacter(character_table(H.as_group()), v)
            rows.append(induce(H, chi).coeffs.tolist())
    return hnf(rows, tab.rank)


def witt_berman_span_check(G: FiniteGroup, p: int = 2) -> bool:
    """Induction from K-elementary subgroups spans R_K(G), K = Q(mu_p')."""
    subs = [H for H in G.subgroups_up_to_conjugacy()
            if classify_elementary(H.as_group(), p).Kp_elementary_for]
    return _ind_of_lattice(G, subs, p) == ring_lattice(G, K(p)).lattice


@dataclass
class SolomonDressCertificate:
    member: bool
    terms: list[tuple[int, int, int]]  # (coefficient, |H|, index of phi)
    check: bool

    def to_json(self) -> dict:
        return {"member": self.member, "check": self.check, "pass": self.member and self.check,
                "terms": [{"coefficient": c, "H_order": h, "phi": j} for c, h, j in self.terms]}


def quasi_elementary_normal_sylow(G: FiniteGroup, p: int = 2) -> list[SubgroupRecord]:
    out = []
    for H in G.subgroups_up_to_conjugacy():
        Hg = H.as_group()
        cl = classify_elementary(Hg, p)
        if cl.quasi_elementary_for and (p in cl.normal_sylow or Hg.order % p):
            out.append(H)
    return out


def solomon_dress_identity_check(G: FiniteGroup, p: int = 2) -> SolomonDressCertificate:
    subs = quasi_elementary_normal_sylow(G, p)
    gens = monomial_generators(G, p, subgroups=subs)
    tab = character_table(G)
    one = VirtualCharacter.trivial(tab)
    coeffs = solve_in_generators([m.induced.coeffs.tolist() for m in gens], one.coeffs.tolist())
    if coeffs is None:
        return SolomonDressCertificate(False, [], False)
    total = sum((m.induced * int(c) for m, c in zip(gens, coeffs) if c), VirtualCharacter.zero(tab))
    phi_idx = []
    for m in gens:
        lin = linear_characters_into_mu_podd(m.H.as_group(), p)
        phi_idx.append(next(j for j, f in enumerate(lin) if f is m.phi))
    terms = [(int(c), m.H.order, j) for m, c, j in zip(gens, coeffs, phi_idx) if c]
    return SolomonDressCertificate(True, terms, total == one)


def subring_check(G: FiniteGroup, p: int = 2) -> bool:
    """Products of monomial generators (all pairs, squares included) stay in im(kappa)."""
    L = im_kappa_lattice(G, p).lattice
    uniq = {}
    for m in monomial_generators(G, p):
        uniq.setdefault(m.induced.coeffs.tobytes(), m.induced)
    gens = list(uniq.values())
    cfs = [g.class_function() for g in gens]
    tab = character_table(G)
    if not L.contains(VirtualCharacter.trivial(tab).coeffs.tolist()):
        return False
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            if not L.contains(tab.coordinates(cfs[i] * cfs[j]).tolist()):
                return False
    return True


@dataclass
class TensorReport:
    m: int
    P: str
    dim_product: int | None
    dim_P: int | None

    @property
    def passed(self) -> bool:
        return self.dim_product is not None and self.dim_P is not None and self.dim_product == self.m * self.dim_P

    def to_json(self) -> dict:
        return {"m": self.m, "P": self.P, "dim_CmxP": self.dim_product, "dim_P": self.dim_P,
                "pass": self.passed}


def elementary_tensor_check(m: int, P_spec: str) -> TensorReport:
    from .catalog import construct_named

    if m % 2 == 0:
        raise ValueError("m must be odd")
    P = construct_named(P_spec)
    if not P.is_p_group(2):
        raise ValueError("P must be a 2-group")
    CP = construct_named(f"C{m}x{P_spec}") if m > 1 else P
    return TensorReport(m, P_spec, cokernel(CP).f2_dim, cokernel(P).f2_dim)


def sylow2_has_q8(G: FiniteGroup) -> bool:
    S = sylow_subgroup(G, 2)
    return has_quaternion_subquotient(S.as_group(), 3)[0]
