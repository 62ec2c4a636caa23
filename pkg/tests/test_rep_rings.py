import numpy as np
import pytest

from bfk.biset_ops import deflate
from bfk.catalog import TABLE_GROUPS, TWO_GROUPS_32, construct_named
from bfk.char_table import VirtualCharacter, character_table, galois_orbits
from bfk.kappa import im_kappa_lattice
from bfk.rep_rings import (
    COMPLEX,
    QBAR,
    QPERM,
    FieldSpec,
    K,
    gamma_n,
    phi_P,
    ring_lattice,
    schur_index_Q,
    schur_quotient,
)
from bfk.zlinalg import IntegerLattice, quotient_invariants

G_ = construct_named


def test_field_spec_parse():
    assert FieldSpec.parse("C") == COMPLEX
    assert FieldSpec.parse("Qbar") == QBAR
    assert FieldSpec.parse("K3") == K(3)
    with pytest.raises(ValueError):
        FieldSpec.parse("R")
    with pytest.raises(ValueError):
        FieldSpec("K")


def test_lattice_examples():
    Q8 = G_("Q8")
    rq = ring_lattice(Q8, QPERM).lattice
    assert rq.rank == 5
    assert quotient_invariants(ring_lattice(Q8, QBAR).lattice, rq).torsion == (2,)
    for spec in (COMPLEX, QBAR, QPERM, K(2)):
        L = ring_lattice(G_("C1"), spec).lattice
        assert L == IntegerLattice.full(1)
    c4 = ring_lattice(G_("C4"), QBAR)
    assert c4.rank == 3 and len(c4.generators) == 3
    assert ring_lattice(G_("S4"), COMPLEX).lattice == IntegerLattice.full(5)


def test_permutation_lattice_needs_pgroup():
    with pytest.raises(ValueError):
        ring_lattice(G_("S3"), QPERM)


@pytest.mark.parametrize("spec", ["C12", "C3xQ8", "SL23", "C15", "Dic12"])
def test_K_class_sums_are_K_valued(spec):
    from bfk.kappa import is_K_valued

    for _, v in ring_lattice(G_(spec), K(2)).generators:
        assert is_K_valued(VirtualCharacter(character_table(G_(spec)), v), 2)


def test_schur_index_examples():
    Q8 = G_("Q8")
    assert schur_index_Q(Q8, 4) == 2
    D16 = G_("D16")
    assert all(schur_index_Q(D16, i) == 1 for i in range(character_table(D16).rank))
    for spec in ("Q16", "C2xQ8", "M16"):
        tab = character_table(G_(spec))
        assert all(schur_index_Q(G_(spec), i) == 1 for i in range(tab.rank) if tab.degrees[i] == 1)
    with pytest.raises(ValueError):
        schur_index_Q(G_("C3"), 0)


TWO_64 = [s for s in TABLE_GROUPS if G_(s).is_p_group(2)]


@pytest.mark.parametrize("spec", TWO_64)
def test_schur_quotient_matches_indices(spec):
    """Invariant factors of Rbar_Q/R_Q are the Schur indices, one per Q-orbit."""
    P = G_(spec)
    q = schur_quotient(P)
    assert q.is_elementary_2
    orbs = galois_orbits(character_table(P), "Q")
    m = sorted(schur_index_Q(P, o.members[0]) for o in orbs)
    assert set(m) <= {1, 2}
    assert sorted(q.invariant_factors) == m


@pytest.mark.parametrize("spec", ["C9", "C27", "C3xC3", "C5"])
def test_odd_pgroups_have_trivial_quotient(spec):
    assert schur_quotient(G_(spec)).torsion == ()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_quaternion_quotient_dim_one(n):
    assert schur_quotient(G_(f"Q{2**n}")).f2_dim == 1


def test_gamma_examples():
    Q8 = G_("Q8")
    g3 = gamma_n(3, Q8)
    assert g3.coeffs.tolist() == [0, 0, 0, 0, 1]
    vals = [g3.class_function().value(s) for s in range(5)]
    from bfk.cyclotomic import CyclotomicValue as CV

    assert vals == [CV.rational(2), CV.rational(-2), CV.rational(0), CV.rational(0), CV.rational(0)]
    Q16 = G_("Q16")
    g4 = gamma_n(4, Q16)
    assert g4.degree() == 4 and int(g4.coeffs.sum()) == 2
    for Q, g in ((Q8, g3), (Q16, g4)):
        assert deflate(Q, Q.center, g).norm() == 0
    with pytest.raises(ValueError):
        gamma_n(2)


def test_phi_examples():
    Q8 = G_("Q8")
    assert phi_P(Q8) == gamma_n(3, Q8) * 2
    C2 = G_("C2")
    assert phi_P(C2).coeffs.tolist() == [0, 1]
    SD = G_("SD16")
    ph = phi_P(SD)
    assert set(ph.coeffs.tolist()) == {0, 1}
    with pytest.raises(ValueError):
        phi_P(G_("C2xC2"))


@pytest.mark.parametrize("spec", ["Q8", "C3xQ8", "SL23", "S4", "C5xQ8", "Q16"])
def test_monomial_lattice_inside_R_K(spec):
    G = G_(spec)
    assert ring_lattice(G, K(2)).lattice.contains_lattice(im_kappa_lattice(G, 2).lattice)
