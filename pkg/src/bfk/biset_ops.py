"""Elementary biset operations on characters and the fibered standard-basis action.

Every operation accepts either a ClassFunction or a VirtualCharacter and
returns the same kind; VirtualCharacter results are certified integral by the
exact decomposition in the target table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .char_table import (
    ClassFunction,
    VirtualCharacter,
    _convolve,
    _lcm,
    character_table,
    inflate_class_function,
)
from .perm_group import FiniteGroup, GroupHom, Section, SubgroupRecord, direct_product


def _cf(chi) -> ClassFunction:
    return chi.class_function() if isinstance(chi, VirtualCharacter) else chi


def _wrap(like, f: ClassFunction):
    if isinstance(like, VirtualCharacter):
        return character_table(f.group).virtual(f)
    return f


def _fusion(H: SubgroupRecord) -> np.ndarray:
    """Parent class of every class of H.as_group()."""
    Hg = H.as_group()
    return np.array([H.parent.class_of[H.to_parent[c.representative]] for c in Hg.classes])


def induce(H: SubgroupRecord, chi):
    """Ind_H^G for a character of H.as_group()."""
    f = _cf(chi)
    Hg = H.as_group()
    if f.group is not Hg:
        raise ValueError("character is not defined on this subgroup")
    G = H.parent
    fus = _fusion(H)
    vals = np.zeros((len(G.classes), f.conductor), dtype=np.int64)
    np.add.at(vals, fus, f.values * Hg.class_sizes[:, None])
    sizes = G.class_sizes
    L = int(np.lcm.reduce(sizes))
    vals = vals * (G.order * (L // sizes))[:, None]
    return _wrap(chi, ClassFunction(G, vals, f.den * H.order * L, canonical=True))


def restrict(H: SubgroupRecord, chi):
    f = _cf(chi)
    if f.group is not H.parent:
        raise ValueError("character is not defined on the parent of this subgroup")
    return _wrap(chi, ClassFunction(H.as_group(), f.values[_fusion(H)], f.den, canonical=True))


def inflate(proj: GroupHom, chi):
    """Inf along a surjection proj: G -> G/N, for chi on G/N."""
    f = _cf(chi)
    if f.group is not proj.target:
        raise ValueError("character is not defined on the quotient")
    return _wrap(chi, inflate_class_function(proj, f))


def deflate(G: FiniteGroup, N: SubgroupRecord, chi):
    """Average over N-cosets; the result lives on G.quotient(N).group."""
    f = _cf(chi)
    if f.group is not G:
        raise ValueError("character is not defined on G")
    q = G.quotient(N)  # raises if N is not normal
    Q = q.group
    imgs = q.projection.images
    vals = np.zeros((len(Q.classes), f.conductor), dtype=np.int64)
    for t, c in enumerate(Q.classes):
        g = int(np.nonzero(imgs == c.representative)[0][0])
        cls = G.class_of[G.mul[g, N.members]]
        vals[t] = f.values[cls].sum(axis=0)
    return _wrap(chi, ClassFunction(Q, vals, f.den * N.order, canonical=True))


def iso_transport(f_iso: GroupHom, chi):
    f = _cf(chi)
    if f.group is not f_iso.source:
        raise ValueError("character is not defined on the source")
    if not f_iso.is_isomorphism():
        raise ValueError("map is not an isomorphism")
    inv = f_iso.inverse()
    T = f_iso.target
    cls = [f.group.class_of[inv.images[c.representative]] for c in T.classes]
    return _wrap(chi, ClassFunction(T, f.values[cls], f.den, canonical=True))


def mult_linear(phi, chi):
    p, f = _cf(phi), _cf(chi)
    if p.den != 1 or p.values[0, 0] != 1 or p.values[0, 1:].any():
        raise ValueError("multiplier is not of degree 1")
    return _wrap(chi, p * f)


def indinf(section: Section, chi):
    """Ind_H^G Inf_{H/N}^H, for chi on section.quotient.group."""
    q = section.quotient
    return induce(section.upper, inflate(q.projection, chi))


def defres(section: Section, chi):
    H = section.upper
    return deflate(H.as_group(), H.restrict_subgroup(section.lower), restrict(H, chi))


# -- fibered basis elements ------------------------------------------------------

_PRODUCTS: dict[tuple[int, int], FiniteGroup] = {}


def product_group(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    key = (id(G), id(H))
    P = _PRODUCTS.get(key)
    if P is None:
        P = direct_product(G, H, name=f"({G.name})x({H.name})")
        P._factor_refs = (G, H)  # keep ids alive
        _PRODUCTS[key] = P
    return P


@dataclass
class FiberedBasisElement:
    """[G x H / U, phi]: U <= G x H, phi a linear character of U.as_group()."""

    left: FiniteGroup
    right: FiniteGroup
    U: SubgroupRecord
    phi: ClassFunction

    def __post_init__(self):
        if self.U.parent is not product_group(self.left, self.right):
            raise ValueError("U must be a subgroup of product_group(left, right)")
        if self.phi.group is not self.U.as_group():
            raise ValueError("phi must be a class function on U")

    @property
    def product(self) -> FiniteGroup:
        return self.U.parent

    def theta(self) -> ClassFunction:
        return induce(self.U, self.phi)


def _pairs_subgroup(G: FiniteGroup, H: FiniteGroup, pairs) -> SubgroupRecord:
    P = product_group(G, H)
    idx = [int(P.pair_index[g, h]) for g, h in pairs]
    return P.subgroup(idx, generators=False)


def _trivial_on(U: SubgroupRecord) -> ClassFunction:
    return ClassFunction.constant(U.as_group(), 1)


def element_from_pairs(G: FiniteGroup, H: FiniteGroup, pairs, phi_of_pair=None) -> FiberedBasisElement:
    """Basis element for U = {pairs}; phi_of_pair maps an element of U (as a pair) to a ClassFunction value row."""
    U = _pairs_subgroup(G, H, pairs)
    if phi_of_pair is None:
        phi = _trivial_on(U)
    else:
        phi = phi_of_pair(U)
    return FiberedBasisElement(G, H, U, phi)


def ind_element(H: SubgroupRecord) -> FiberedBasisElement:
    G, Hg = H.parent, H.as_group()
    return element_from_pairs(G, Hg, [(int(H.to_parent[h]), h) for h in range(Hg.order)])


def res_element(H: SubgroupRecord) -> FiberedBasisElement:
    G, Hg = H.parent, H.as_group()
    return element_from_pairs(Hg, G, [(h, int(H.to_parent[h])) for h in range(Hg.order)])


def inf_element(proj: GroupHom) -> FiberedBasisElement:
    G = proj.source
    return element_from_pairs(G, proj.target, [(g, int(proj.images[g])) for g in range(G.order)])


def def_element(proj: GroupHom) -> FiberedBasisElement:
    G = proj.source
    return element_from_pairs(proj.target, G, [(int(proj.images[g]), g) for g in range(G.order)])


def iso_element(f: GroupHom) -> FiberedBasisElement:
    H = f.source
    return element_from_pairs(f.target, H, [(int(f.images[h]), h) for h in range(H.order)])


def mult_element(phi: ClassFunction) -> FiberedBasisElement:
    """[G x G / Delta(G), phi] with phi carried to the diagonal."""
    G = phi.group

    def carry(U: SubgroupRecord) -> ClassFunction:
        Ug = U.as_group()
        left = U.parent.left_of
        cls = [G.class_of[left[U.to_parent[c.representative]]] for c in Ug.classes]
        return ClassFunction(Ug, phi.values[cls], phi.den, canonical=True)

    return element_from_pairs(G, G, [(g, g) for g in range(G.order)], carry)


def act_fibered(e: FiberedBasisElement, chi):
    """(e . chi)(g) = (1/|H|) sum_h Theta(g, h) chi(h), Theta = Ind_U^{G x H}(phi)."""
    f = _cf(chi)
    G, H = e.left, e.right
    if f.group is not H:
        raise ValueError("character is not defined on the right group")
    P = e.product
    theta = e.theta()
    M = _lcm(theta.conductor, f.conductor)
    th = theta.at(M)
    fv = f.at(M)[H.class_of]  # (|H|, M)
    reps = np.array([c.representative for c in G.classes])
    tcls = P.class_of[P.pair_index[reps]]  # (classes of G, |H|)
    prod = _convolve(th[tcls], fv[None, :, :])  # (cG, |H|, M)
    vals = prod.sum(axis=1)
    return _wrap(chi, ClassFunction(G, vals, theta.den * f.den * H.order))
