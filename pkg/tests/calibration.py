"""Random calibration instances: act_fibered against the elementary operation it encodes."""

from __future__ import annotations

import random

import numpy as np

from bfk import biset_ops as ops
from bfk.catalog import construct_named
from bfk.char_table import VirtualCharacter, character_table
from bfk.perm_group import GroupHom

POOL = ["C1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D8", "Q8", "C8", "C2xC4", "D12", "A4",
        "Dic12", "Q16", "D16", "SD16", "C3xC3", "C12"]
KINDS = ("ind", "res", "inf", "def", "iso", "mult")


def _random_virtual(G, rng: random.Random) -> VirtualCharacter:
    tab = character_table(G)
    return VirtualCharacter(tab, [rng.randint(-2, 2) for _ in range(tab.rank)])


def _conjugation_iso(G, H, g):
    """h -> g h g^-1 from H.as_group() onto the conjugate subgroup's group."""
    K = G.conjugate_subgroup(H, g)
    Hg, Kg = H.as_group(), K.as_group()
    back = K.from_parent
    imgs = [back[G.conj(g, int(H.to_parent[h]))] for h in range(Hg.order)]
    return GroupHom(Hg, Kg, np.array(imgs))


def instance(rng: random.Random, kind: str | None = None, spec: str | None = None):
    """Returns (kind, spec, act_fibered result, direct result)."""
    kind = kind or rng.choice(KINDS)
    spec = spec or rng.choice(POOL)
    G = construct_named(spec)
    subs = G.subgroups_up_to_conjugacy()
    if kind == "ind":
        H = rng.choice(subs)
        chi = _random_virtual(H.as_group(), rng)
        return kind, spec, ops.act_fibered(ops.ind_element(H), chi), ops.induce(H, chi)
    if kind == "res":
        H = rng.choice(subs)
        chi = _random_virtual(G, rng)
        return kind, spec, ops.act_fibered(ops.res_element(H), chi), ops.restrict(H, chi)
    if kind in ("inf", "def"):
        N = rng.choice(G.normal_subgroups())
        q = G.quotient(N)
        if kind == "inf":
            chi = _random_virtual(q.group, rng)
            return kind, spec, ops.act_fibered(ops.inf_element(q.projection), chi), ops.inflate(q.projection, chi)
        chi = _random_virtual(G, rng)
        return kind, spec, ops.act_fibered(ops.def_element(q.projection), chi), ops.deflate(G, N, chi)
    if kind == "iso":
        H = rng.choice(subs)
        f = _conjugation_iso(G, H, rng.randrange(G.order))
        chi = _random_virtual(H.as_group(), rng)
        return kind, spec, ops.act_fibered(ops.iso_element(f), chi), ops.iso_transport(f, chi)
    if kind == "mult":
        tab = character_table(G)
        lin = [i for i in range(tab.rank) if tab.degrees[i] == 1]
        phi = tab.character(rng.choice(lin))
        chi = _random_virtual(G, rng)
        return kind, spec, ops.act_fibered(ops.mult_element(phi), chi), ops.mult_linear(phi, chi)
    raise ValueError(kind)


def run_suite(n: int = 120, seed: int = 20240611) -> list[tuple[str, str, bool]]:
    rng = random.Random(seed)
    out = []
    # every kind on every pool group at least once, then random fill
    plan = [(k, s) for k in KINDS for s in POOL]
    rng.shuffle(plan)
    plan = plan[:n] + [(None, None)] * max(0, n - len(plan))
    for k, s in plan:
        kind, spec, a, b = instance(rng, k, s)
        out.append((kind, spec, a == b))
    return out
