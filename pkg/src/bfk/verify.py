"""Named verification runs; each returns a JSON-ready dict with a boolean `pass`."""

from __future__ import annotations

import numpy as np

from .biset_ops import induce, indinf, restrict
from .catalog import MIXED_GROUPS, ODD_GROUPS, TWO_GROUPS_32, catalog, construct_named
from .char_table import VirtualCharacter, character_table, galois_orbits
from .genetic import F_n_eval_pgroup
from .kappa import (
    cokernel,
    detect,
    elementary_tensor_check,
    F_n_eval,
    im_kappa_lattice,
    solomon_dress_identity_check,
    subring_check,
    witt_berman_span_check,
)
from .perm_group import FiniteGroup, Section, is_generalized_quaternion
from .rep_rings import K, QBAR, gamma_n, phi_P, ring_lattice, schur_index_Q, schur_quotient

LEMMAS = ("roquette", "quat", "brauer-span", "dress-subring", "solomon-dress", "witt-berman",
          "tensor", "chain", "detection")


def _groups(spec: str | None, default: list[str]) -> list[str]:
    return [spec] if spec else default


def _summ(name: str, rows: list[dict], note: str) -> dict:
    return {"check": name, "note": note, "pass": all(r["pass"] for r in rows), "cases": rows}


def verify_roquette(spec: str | None = None) -> dict:
    rows = []
    for s in _groups(spec, [g for g in TWO_GROUPS_32] + ["C9", "C27", "C3xC3", "C5"]):
        P = construct_named(s)
        q = schur_quotient(P)
        odd = P.order % 2 == 1
        ok = q.is_elementary_2 and (not odd or not q.torsion)
        rows.append({"group": s, **q.to_json(), "pass": ok})
    return _summ("roquette", rows, "Rbar_Q/R_Q of a p-group has exponent <= 2 and vanishes for odd p")


def _quat_subgroup(Qbig: FiniteGroup, n_small: int):
    for H in Qbig.subgroups_up_to_conjugacy():
        if H.order == 2**n_small and is_generalized_quaternion(H.as_group()) == n_small:
            return H
    return None


def quaternion_identities(n: int) -> dict:
    """Identities for Q_{2^n}: Schur indices, F_2 quotient, Res/Ind of gamma, central-sign indinf, Phi."""
    Q = construct_named(f"Q{2**n}")
    tab = character_table(Q)
    g = gamma_n(n, Q)
    out: dict = {"group": Q.name}
    faithful = [i for i in range(tab.rank) if g.coeffs[i]]
    out["schur_faithful"] = [schur_index_Q(Q, i) for i in faithful]
    out["schur_other"] = sorted({schur_index_Q(Q, i) for i in range(tab.rank) if i not in faithful})
    out["quotient_f2_dim"] = schur_quotient(Q).f2_dim
    sec = Section(Q.center, Q.trivial)
    sign = VirtualCharacter.irreducible(character_table(sec.quotient.group), 1)
    out["indinf_central_sign_is_2gamma"] = bool(indinf(sec, sign) == g * 2)
    out["phi_is_2gamma"] = bool(phi_P(Q) == g * 2)
    checks = [out["schur_faithful"] == [2] * len(faithful), out["schur_other"] == [1],
              out["quotient_f2_dim"] == 1, out["indinf_central_sign_is_2gamma"], out["phi_is_2gamma"]]
    if n >= 4:
        H = _quat_subgroup(Q, n - 1)
        gs = gamma_n(n - 1, H.as_group())
        out["res_gamma_is_2gamma_smaller"] = bool(restrict(H, g) == gs * 2)
        out["ind_gamma_smaller_is_gamma"] = bool(induce(H, gs) == g)
        checks += [out["res_gamma_is_2gamma_smaller"], out["ind_gamma_smaller_is_gamma"]]
    out["pass"] = all(checks)
    return out


def verify_quat(spec: str | None = None) -> dict:
    ns = [is_generalized_quaternion(construct_named(spec))] if spec else [3, 4, 5]
    if ns == [None]:
        return {"check": "quat", "pass": False, "error": f"{spec} is not generalized quaternion"}
    return _summ("quat", [quaternion_identities(n) for n in ns],
                 "gamma_n arithmetic on generalized quaternion groups")


def verify_brauer_span(spec: str | None = None) -> dict:
    rows = []
    for s in _groups(spec, catalog(48)):
        G = construct_named(s)
        RK = ring_lattice(G, K(2)).lattice
        im = im_kappa_lattice(G, 2).lattice
        rows.append({"group": s, "R_K_rank": RK.rank, "im_kappa_in_R_K": RK.contains_lattice(im),
                     "pass": RK.contains_lattice(im) and RK.rank == len(galois_orbits(character_table(G), 2))})
    return _summ("brauer-span", rows, "im(kappa) lies in the span of K-class sums")


def verify_dress_subring(spec: str | None = None) -> dict:
    rows = [{"group": s, "pass": subring_check(construct_named(s))} for s in _groups(spec, catalog(48))]
    return _summ("dress-subring", rows, "products of monomial generators stay in im(kappa)")


def verify_solomon_dress(spec: str | None = None) -> dict:
    rows = []
    for s in _groups(spec, catalog(48)):
        cert = solomon_dress_identity_check(construct_named(s))
        rows.append({"group": s, **cert.to_json()})
    return _summ("solomon-dress", rows, "1_G from quasi-elementary subgroups with normal Sylow 2")


def verify_witt_berman(spec: str | None = None) -> dict:
    rows = [{"group": s, "pass": witt_berman_span_check(construct_named(s))} for s in _groups(spec, catalog(48))]
    return _summ("witt-berman", rows, "induction from K-elementary subgroups spans R_K")


TENSOR_PAIRS = [(1, "Q8"), (3, "Q8"), (5, "Q8"), (5, "D16"), (3, "Q16"), (3, "C2xQ8"), (1, "SD16")]


def verify_tensor(spec: str | None = None) -> dict:
    pairs = TENSOR_PAIRS
    if spec:
        head, _, rest = spec.partition("x")
        if head.startswith("C") and head[1:].isdigit() and int(head[1:]) % 2 and rest:
            pairs = [(int(head[1:]), rest)]
        else:
            pairs = [(1, spec)]
    rows = [elementary_tensor_check(m, P).to_json() for m, P in pairs]
    return _summ("tensor", rows, "cokernel of C_m x P has F_2-dimension m times that of P")


def chain_report(spec: str, modes=("sections",)) -> dict:
    G = construct_named(spec)
    C = cokernel(G)
    dims = {}
    spaces = {}
    for n in (3, 4, 5):
        spaces[n] = F_n_eval(G, n, modes[0])
        dims[n] = spaces[n].dim
    mono = all(spaces[n].contains_space(spaces[n + 1]) for n in (3, 4))
    full = dims[3] == (C.f2_dim or 0)
    ok = mono and full
    row = {"group": spec, "cokernel_f2_dim": C.f2_dim, "F_dims": {str(k): v for k, v in dims.items()},
           "monotone": mono, "F3_is_full": full}
    m = is_generalized_quaternion(G)
    if m:
        pattern = all((dims[n] != 0) == (m >= n) for n in (3, 4, 5))
        row["quaternion_pattern"] = pattern
        ok = ok and pattern
    if G.is_p_group(2):
        pg = {n: F_n_eval_pgroup(G, n) for n in (3, 4, 5)}
        agree = all(pg[n] == spaces[n] for n in (3, 4, 5)) if C.f2_dim else all(v.dim == 0 for v in pg.values())
        row["agrees_with_genetic"] = agree
        ok = ok and agree
    row["pass"] = ok
    return row


def verify_chain(spec: str | None = None) -> dict:
    rows = [chain_report(s) for s in _groups(spec, ["Q8", "Q16", "Q32", "C3xQ8", "C3xQ16", "C2xQ16", "SL23"])]
    return _summ("chain", rows, "F_3 contains F_4 contains F_5; F_3 is the whole cokernel")


def detection_sweep(spec: str) -> dict:
    G = construct_named(spec)
    tab = character_table(G)
    gens = [VirtualCharacter(tab, v) for _, v in ring_lattice(G, K(2)).generators]
    sweep = gens + [gens[i] + gens[j] for i in range(len(gens)) for j in range(i + 1, len(gens))]
    bad = [i for i, x in enumerate(sweep) if detect(G, x).discrepancy]
    return {"group": spec, "characters": len(sweep), "discrepancies": len(bad), "pass": not bad}


def verify_detection(spec: str | None = None) -> dict:
    rows = [detection_sweep(s) for s in _groups(spec, catalog(48))]
    return _summ("detection", rows, "restriction to 2-elementary subgroups with a Q8 subquotient detects im(kappa)")


RUNNERS = {
    "roquette": verify_roquette,
    "quat": verify_quat,
    "brauer-span": verify_brauer_span,
    "dress-subring": verify_dress_subring,
    "solomon-dress": verify_solomon_dress,
    "witt-berman": verify_witt_berman,
    "tensor": verify_tensor,
    "chain": verify_chain,
    "detection": verify_detection,
}


def run(lemma: str, spec: str | None = None) -> dict:
    if lemma not in RUNNERS:
        raise KeyError(f"unknown check {lemma!r}; choose from {', '.join(LEMMAS)}")
    return RUNNERS[lemma](spec)


__all__ = ["LEMMAS", "RUNNERS", "run", "quaternion_identities", "chain_report", "detection_sweep",
           "MIXED_GROUPS", "ODD_GROUPS", "QBAR", "np"]
