"""Acceptance criteria 1-9, exact (tolerance zero).

Under pytest each criterion is one test and the terminal summary prints one
PASS/FAIL line per criterion; `python tests/test_acceptance.py` prints the same lines.
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from bfk.catalog import TABLE_GROUPS, TWO_GROUPS_32, catalog, construct_named
from bfk.char_table import character_table, check_orthogonality, galois_orbits
from bfk.genetic import FUNCTORS, F_n_eval_pgroup, genetic_basis, verify_rational
from bfk.kappa import (
    EXACT_MODE_BOUND,
    F_n_eval,
    cokernel,
    solomon_dress_identity_check,
    subring_check,
    witt_berman_span_check,
)
from bfk.perm_group import normal_rank_one_type
from bfk.rep_rings import faithful_irreducibles, schur_index_Q, schur_quotient
from bfk.verify import detection_sweep, quaternion_identities

G_ = construct_named
TEST_SET = catalog(48)


def criterion_1() -> tuple[bool, str]:
    rows = [quaternion_identities(n) for n in (3, 4, 5)]
    keys = ("res_gamma_is_2gamma_smaller", "ind_gamma_smaller_is_gamma")
    pairs = all(r[k] for r in rows[1:] for k in keys)
    sign = all(r["indinf_central_sign_is_2gamma"] for r in rows[:2])
    return pairs and sign, f"Ind/Res on Q8<Q16, Q16<Q32: {pairs}; central sign n=3,4: {sign}"


def criterion_2() -> tuple[bool, str]:
    ok_q = True
    for n in (3, 4, 5):
        Q = G_(f"Q{2**n}")
        faithful = set(faithful_irreducibles(character_table(Q)))
        ok_q &= all(schur_index_Q(Q, i) == (2 if i in faithful else 1)
                    for i in range(character_table(Q).rank))
    # m = 2 exactly on Q-orbits whose genetic section is generalized quaternion
    ok_all, factors_ok = True, True
    for s in TWO_GROUPS_32:
        P = G_(s)
        tab = character_table(P)
        quat = {r.V.coeffs.nonzero()[0][0] for r in genetic_basis(P).records if r.quaternion_n}
        for o in galois_orbits(tab, "Q"):
            m = schur_index_Q(P, o.members[0])
            ok_all &= m == (2 if o.members[0] in quat else 1)
        if normal_rank_one_type(P) in ("cyclic", "dihedral", "semidihedral") or P.is_cyclic():
            ok_all &= all(schur_index_Q(P, i) == 1 for i in range(tab.rank))
        factors_ok &= set(schur_quotient(P).invariant_factors) <= {1, 2}
    odd_ok = all(schur_quotient(G_(s)).torsion == () for s in ("C9", "C27", "C3xC3"))
    ok = ok_q and ok_all and factors_ok and odd_ok
    return ok, (f"quaternion faithful=2/else=1: {ok_q}; catalog 2-groups m in {{1,2}} matching quaternion "
                f"genetic sections: {ok_all}; factors in {{1,2}}: {factors_ok}; odd p trivial: {odd_ok}")


EXPECTED = {"Q8": 1, "Q16": 1, "D16": 0, "SD16": 0, "C2": 0, "C2xC2": 0, "C2xC2xC2": 0, "C2xC2xC2xC2": 0,
            "C3xQ8": 3, "C5xQ8": 5, "C3xQ16": 3}


def criterion_3() -> tuple[bool, str]:
    wrong = [s for s, d in EXPECTED.items() if cokernel(G_(s)).f2_dim != d]
    bad = [s for s in TEST_SET if not set(cokernel(G_(s)).structure.invariant_factors) <= {1, 2}
           or cokernel(G_(s)).structure.free_rank]
    return not wrong and not bad, f"{len(EXPECTED)} dimensions, wrong={wrong}; {len(TEST_SET)} groups, bad factors={bad}"


def criterion_4() -> tuple[bool, str]:
    rows = [detection_sweep(s) for s in TEST_SET]
    n = sum(r["characters"] for r in rows)
    d = sum(r["discrepancies"] for r in rows)
    return d == 0, f"{len(rows)} groups, {n} characters, {d} discrepancies"


def exact_pairs() -> list[tuple[str, int]]:
    return [(s, n) for s in TEST_SET for n in (3, 4, 5) if G_(s).order * 2**n <= EXACT_MODE_BOUND]


def criterion_5() -> tuple[bool, str]:
    chain = all((F_n_eval_pgroup(G_(f"Q{2**m}"), n).dim != 0) == (m >= n)
                and (F_n_eval(G_(f"Q{2**m}"), n).dim != 0) == (m >= n)
                for m in (3, 4, 5) for n in (3, 4, 5))
    nonzero = [s for s in TEST_SET if cokernel(G_(s)).f2_dim]
    full = [s for s in nonzero if F_n_eval(G_(s), 3).dim != cokernel(G_(s)).f2_dim]
    pairs = exact_pairs()
    disagree = [(s, n) for s, n in pairs if F_n_eval(G_(s), n, "exact") != F_n_eval(G_(s), n, "sections")]
    ok = chain and not full and not disagree
    return ok, (f"Q_2^m pattern: {chain}; F_3 full on {len(nonzero)} groups, failures={full}; "
                f"exact=sections on {len(pairs)} pairs, disagreements={disagree}")


def criterion_6() -> tuple[bool, str]:
    fails = [(s, f) for s in TWO_GROUPS_32 for f in FUNCTORS if not verify_rational(G_(s), f).passed]
    sizes = all(len(genetic_basis(G_(s))) == len(galois_orbits(character_table(G_(s)), "Q")) for s in TWO_GROUPS_32)
    return not fails and sizes, f"{len(TWO_GROUPS_32)} groups x {len(FUNCTORS)} functors, failures={fails}; basis sizes: {sizes}"


def criterion_7() -> tuple[bool, str]:
    wb = [s for s in TEST_SET if not witt_berman_span_check(G_(s))]
    sd = [s for s in TEST_SET if not (lambda c: c.member and c.check)(solomon_dress_identity_check(G_(s)))]
    sr = [s for s in TEST_SET if not subring_check(G_(s))]
    return not (wb or sd or sr), f"{len(TEST_SET)} groups; failures witt-berman={wb} solomon-dress={sd} subring={sr}"


def criterion_8() -> tuple[bool, str]:
    from calibration import run_suite

    res = run_suite(150)
    bad = [(k, s) for k, s, ok in res if not ok]
    kinds = sorted({k for k, _, _ in res})
    return not bad and len(res) >= 100, f"{len(res)} instances over {kinds}, mismatches={bad}"


def criterion_9() -> tuple[bool, str]:
    bad = []
    for s in TABLE_GROUPS:
        G = G_(s)
        tab = character_table(G)
        if not (check_orthogonality(tab) and sum(d * d for d in tab.degrees) == G.order):
            bad.append(s)
    return not bad, f"{len(TABLE_GROUPS)} tables (orders <= 64), failures={bad}"


CRITERIA = {
    1: ("quaternion arithmetic", criterion_1),
    2: ("Schur indices", criterion_2),
    3: ("cokernel structure", criterion_3),
    4: ("detection", criterion_4),
    5: ("subfunctor chain", criterion_5),
    6: ("rationality", criterion_6),
    7: ("span identities", criterion_7),
    8: ("fibered action calibration", criterion_8),
    9: ("character-table integrity", criterion_9),
}


def _check(k: int):
    from conftest import ACCEPTANCE

    title, fn = CRITERIA[k]
    ok, detail = fn()
    ACCEPTANCE[k] = (title, ok, detail)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {title} ({detail})")
    assert ok, detail


def test_criterion_1_quaternion_arithmetic():
    _check(1)


def test_criterion_2_schur_indices():
    _check(2)


def test_criterion_3_cokernel_structure():
    _check(3)


def test_criterion_4_detection():
    _check(4)


def test_criterion_5_subfunctor_chain():
    _check(5)


def test_criterion_6_rationality():
    _check(6)


def test_criterion_7_span_identities():
    _check(7)


def test_criterion_8_calibration():
    _check(8)


def test_criterion_9_table_integrity():
    _check(9)


if __name__ == "__main__":
    failed = 0
    for k, (title, fn) in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {title} ({detail})", flush=True)
    sys.exit(1 if failed else 0)
