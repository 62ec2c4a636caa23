import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bfk.catalog import TABLE_GROUPS, GroupSpecError, construct_named, quaternion
from bfk.perm_group import (
    BoundExceeded,
    FiniteGroup,
    Permutation,
    Section,
    are_isomorphic,
    classify_elementary,
    find_isomorphism,
    has_quaternion_subquotient,
    is_generalized_quaternion,
    normal_rank_one_type,
    sylow_subgroup,
)

G_ = construct_named


def test_quaternion_presentation():
    for n in (3, 4, 5):
        Q = G_(f"Q{2**n}")
        a, b = Q.designated["a"], Q.designated["b"]
        m = Q.mul
        assert Q.order == 2**n
        assert Q.power(a, 2 ** (n - 1)) == 0 and Q.power(a, 2 ** (n - 2)) != 0
        assert m[b, b] == Q.power(a, 2 ** (n - 2))
        assert m[m[Q.inv[b], a], b] == Q.inv[a]


def test_named_constructions():
    assert G_("C1").order == 1
    G = G_("C3xQ8")
    assert G.order == 24 and G.center.order == 6
    assert G_("D16").order == 16 and G_("SD16").order == 16
    S = G_("perm:[(1,2,3);(1,2)]")
    assert S.order == 6 and not S.is_abelian()


@pytest.mark.parametrize("bad", ["Q4", "SD8", "D7", "C0", "Foo", "C3x", "perm:[(1,2"])
def test_bad_specs(bad):
    with pytest.raises(GroupSpecError):
        G_(bad)


def test_spec_error_position():
    with pytest.raises(GroupSpecError) as exc:
        G_("C3xQ4")
    assert exc.value.pos == 3


def test_classes():
    assert [c.size for c in G_("Q8").classes] == [1, 1, 2, 2, 2]
    assert len(G_("C1").classes) == 1
    assert [c.size for c in G_("C4").classes] == [1, 1, 1, 1]


@pytest.mark.parametrize("spec", ["Q16", "S4", "C3xQ8", "SD16", "A4", "D12"])
def test_class_invariants(spec):
    G = G_(spec)
    assert sum(c.size for c in G.classes) == G.order
    keys = [(c.element_order, c.size, min(c.members)) for c in G.classes]
    assert keys == sorted(keys)
    for H in G.subgroups_up_to_conjugacy():
        assert G.order % H.order == 0


def _brute_conjugacy_classes_of_subgroups(G: FiniteGroup) -> int:
    found = set()
    for H in G.all_subgroups():
        found.add(min(K.mask for K in G.conjugates(H)))
    return len(found)


def test_subgroup_classes():
    Q8 = G_("Q8")
    assert sorted(H.order for H in Q8.subgroups_up_to_conjugacy()) == [1, 2, 4, 4, 4, 8]
    assert len(G_("C1").subgroups_up_to_conjugacy()) == 1
    assert [H.order for H in G_("C4").subgroups_up_to_conjugacy()] == [1, 2, 4]


@pytest.mark.parametrize("spec", ["Q8", "D8", "S4", "C2xC2xC2", "SL23"])
def test_subgroup_classes_closed_world(spec):
    G = G_(spec)
    reps = G.subgroups_up_to_conjugacy()
    assert len(reps) == _brute_conjugacy_classes_of_subgroups(G)
    for H in G.all_subgroups():
        assert sum(1 for R in reps if G.class_representative(H) == R) == 1


def test_bound(monkeypatch):
    monkeypatch.setenv("BFK_ORDER_BOUND", "16")
    G = FiniteGroup([Permutation.from_cycles([(0, 1, 2, 3, 4)], 5), Permutation.from_cycles([(0, 1)], 5)])
    with pytest.raises(BoundExceeded):
        G.subgroups_up_to_conjugacy()


def test_quotients():
    Q8 = G_("Q8")
    q = Q8.quotient(Q8.center)
    assert q.group.order == 4 and q.group.exponent == 2
    assert Q8.quotient(Q8.whole).group.order == 1
    Q16 = G_("Q16")
    assert are_isomorphic(Q16.quotient(Q16.center).group, G_("D8"))
    with pytest.raises(ValueError):
        S3 = G_("S3")
        S3.quotient(next(H for H in S3.subgroups_up_to_conjugacy() if H.order == 2))


@pytest.mark.parametrize("spec", ["Q16", "S4", "C3xQ8", "D12"])
def test_projection_surjective_with_kernel(spec):
    G = G_(spec)
    for N in G.normal_subgroups():
        q = G.quotient(N)
        img = q.projection.images
        assert set(img.tolist()) == set(range(q.group.order))
        assert q.projection.is_homomorphism()
        assert np.array_equal(np.flatnonzero(img == 0), N.members)


def test_normalizer_centralizer_sections():
    Q8 = G_("Q8")
    i = next(H for H in Q8.subgroups_up_to_conjugacy() if H.order == 4)
    assert Q8.normalizer(i) == Q8.whole
    assert Q8.centralizer(Q8.trivial) == Q8.whole
    assert len(G_("C4").sections()) == 6


def test_quaternion_recognition_examples():
    assert is_generalized_quaternion(G_("Q8")) == 3
    assert is_generalized_quaternion(G_("C8")) is None
    assert is_generalized_quaternion(G_("SD16")) is None
    assert normal_rank_one_type(G_("D16")) == "dihedral"
    assert normal_rank_one_type(G_("SD16")) == "semidihedral"
    assert normal_rank_one_type(G_("C2xC2")) is None


TWO_GROUPS_64 = [s for s in TABLE_GROUPS if G_(s).order in (8, 16, 32, 64) and G_(s).is_p_group(2)]


@pytest.mark.parametrize("spec", TWO_GROUPS_64)
def test_quaternion_shortcut_matches_isomorphism(spec):
    G = G_(spec)
    n = G.order.bit_length() - 1
    iso = find_isomorphism(G, quaternion(G.order)) is not None
    assert (is_generalized_quaternion(G) == n) == iso


@pytest.mark.parametrize("n", [4, 5])
def test_two_quaternion_subgroup_classes(n):
    Q = G_(f"Q{2**n}")
    hits = [H for H in Q.subgroups_up_to_conjugacy()
            if H.order == 2 ** (n - 1) and are_isomorphic(H.as_group(), quaternion(2 ** (n - 1)))]
    assert len(hits) == 2


def test_quaternion_subquotients():
    ok, sec = has_quaternion_subquotient(G_("C3xQ8"), 3)
    assert ok and isinstance(sec, Section) and sec.order == 8
    assert not has_quaternion_subquotient(G_("D16"), 3)[0]
    assert has_quaternion_subquotient(G_("Q16"), 3)[0]
    assert not has_quaternion_subquotient(G_("Q16"), 5)[0]


def test_classify_elementary():
    assert 2 in classify_elementary(G_("C3xQ8"), 2).elementary_for
    assert 2 in classify_elementary(G_("Q8"), 2).elementary_for
    c = classify_elementary(G_("S3"), 2)
    assert 2 in c.quasi_elementary_for and 2 not in c.elementary_for


def test_sylow():
    for spec, p, order in [("S4", 2, 8), ("SL23", 2, 8), ("SL23", 3, 3), ("C3xQ16", 2, 16)]:
        assert sylow_subgroup(G_(spec), p).order == order
    assert is_generalized_quaternion(sylow_subgroup(G_("SL23"), 2).as_group()) == 3


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(6)), st.permutations(range(6)))
def test_random_permutation_groups(p, q):
    G = FiniteGroup([list(p), list(q)])
    m = G.mul
    assert (m[0] == np.arange(G.order)).all()
    assert (m[np.arange(G.order), G.inv] == 0).all()
    assert sum(c.size for c in G.classes) == G.order
    Z = G.center
    assert G.is_normal(Z) and G.centralizer(G.whole) == Z
