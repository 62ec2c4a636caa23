import numpy as np
import pytest

from bfk.catalog import TWO_GROUPS_32, construct_named
from bfk.char_table import VirtualCharacter, character_table, galois_orbits
from bfk.genetic import (
    FUNCTORS,
    F_n_eval_pgroup,
    _record,
    faithful_part_basis,
    frak_D,
    frak_I,
    genetic_basis,
    has_normal_rank_one,
    is_genetic,
    verify_rational,
)
from bfk.perm_group import are_isomorphic
from bfk.rep_rings import gamma_n

G_ = construct_named


def test_normal_rank_one():
    assert has_normal_rank_one(G_("Q16"), 2)
    assert not has_normal_rank_one(G_("C2xC2"), 2)
    assert not has_normal_rank_one(G_("D8"), 2)
    assert has_normal_rank_one(G_("C9"), 3)
    with pytest.raises(ValueError):
        has_normal_rank_one(G_("S3"))


def test_is_genetic_examples():
    Q8 = G_("Q8")
    assert is_genetic(Q8.whole, Q8)
    assert is_genetic(Q8.trivial, Q8)
    assert not is_genetic(Q8.center, Q8)


@pytest.mark.parametrize("spec,size", [("Q8", 5), ("C2", 2), ("C4", 3), ("Q16", 6), ("C1", 1), ("C9", 3)])
def test_basis_sizes(spec, size):
    assert len(genetic_basis(G_(spec))) == size


def test_q8_basis_subgroups():
    B = genetic_basis(G_("Q8"))
    assert sorted(r.S.order for r in B.records) == [1, 4, 4, 4, 8]


def test_faithful_part_basis():
    Q8 = G_("Q8")
    assert faithful_part_basis(Q8) == [gamma_n(3, Q8)]
    assert faithful_part_basis(G_("C2xC2")) == []
    fb = faithful_part_basis(G_("C4"))
    assert len(fb) == 1 and fb[0].coeffs.tolist().count(1) == 2


def test_frak_examples():
    Q8 = G_("Q8")
    B = genetic_basis(Q8)
    recs = B.quaternion_records()
    assert len(recs) == 1 and recs[0].S.order == 1
    assert frak_I(B, "QbarModQ", [1]) == gamma_n(3, Q8)
    assert frak_D(B, "QbarModQ", gamma_n(3, Q8)) == [1]
    C2 = G_("C2")
    rep = verify_rational(C2, "Q")
    assert rep.records == rep.target_rank == 2


@pytest.mark.parametrize("spec,functor", [("Q16", "Q"), ("C2xC2", "Qbar"), ("Q8", "QbarModQ")])
def test_verify_rational_examples(spec, functor):
    rep = verify_rational(G_(spec), functor)
    assert rep.passed
    if functor == "QbarModQ":
        assert rep.details["f2_dim_source"] == rep.details["f2_dim_target"] == 1


SMALL_2 = [s for s in TWO_GROUPS_32 if G_(s).order <= 16]


@pytest.mark.parametrize("spec", SMALL_2)
def test_basis_enumerates_rational_irreducibles(spec):
    """Each V(S) is a multiple of a distinct Q-class sum; equivalent S have isomorphic sections."""
    P = G_(spec)
    tab = character_table(P)
    orbs = galois_orbits(tab, "Q")
    B = genetic_basis(P)
    hit = []
    for r in B.records:
        nz = set(np.flatnonzero(r.V.coeffs).tolist())
        orb = next(o for o in orbs if set(o.members) == nz)
        m = int(r.V.coeffs[orb.members[0]])
        assert r.V == orb.class_sum * m and m in (1, 2)
        hit.append(orbs.index(orb))
    assert sorted(hit) == list(range(len(orbs)))
    by_v = {}
    for S in P.subgroups_up_to_conjugacy():
        rec = _record(P, S, 2)
        if rec is not None and rec.V.norm() == rec.phi.norm():
            by_v.setdefault(rec.V.coeffs.tobytes(), []).append(rec.quotient)
    for qs in by_v.values():
        assert all(are_isomorphic(qs[0], q) for q in qs[1:])


@pytest.mark.parametrize("spec", SMALL_2)
@pytest.mark.parametrize("functor", FUNCTORS)
def test_rationality_small(spec, functor):
    assert verify_rational(G_(spec), functor).passed


def test_F_n_examples():
    Q8, D16, Q16 = G_("Q8"), G_("D16"), G_("Q16")
    assert F_n_eval_pgroup(Q8, 3).dim == 1 and F_n_eval_pgroup(Q8, 4).dim == 0
    assert F_n_eval_pgroup(D16, 3).dim == 0
    assert F_n_eval_pgroup(Q16, 4).dim == 1 and F_n_eval_pgroup(Q16, 5).dim == 0


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_chain_on_quaternions(m, n):
    assert (F_n_eval_pgroup(G_(f"Q{2**m}"), n).dim != 0) == (m >= n)
