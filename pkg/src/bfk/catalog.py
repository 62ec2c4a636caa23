"""Named groups and the group-spec grammar.

Grammar: ``C<n>``, ``D<n>`` (n the order), ``SD<n>`` (n = 2^k >= 16),
``Q<n>`` (n = 2^k >= 8), infix ``x`` for direct products, and
``perm:[(1,2,3);(1,2)]`` with 1-based points.  A few convenience aliases
(S3, A4, S4, SL23, Dic12, M16, Pauli) are accepted as well.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .perm_group import FiniteGroup, Permutation, direct_product


class GroupSpecError(ValueError):
    def __init__(self, msg: str, spec: str, pos: int = 0):
        super().__init__(f"{msg} at position {pos} in {spec!r}")
        self.spec = spec
        self.pos = pos


def _is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    gens = [Permutation([(i + 1) % n for i in range(n)])] if n > 1 else []
    G = FiniteGroup(gens, name=f"C{n}", degree=n)
    return G


def metacyclic(M: int, r: int, s: int, name: str) -> FiniteGroup:
    """Regular model of <a, b | a^M, b^2 = a^s, b a b^-1 = a^r>, elements a^i b^j."""
    r %= M
    s %= M

    def mul(x, y):
        (i, j), (k, l) = x, y
        e = i + (k if j == 0 else r * k) + (s if j + l >= 2 else 0)
        return (e % M, (j + l) % 2)

    elems = [(i, j) for j in range(2) for i in range(M)]
    G = regular_group(elems, mul, [(1 % M, 0), (0, 1)], name)
    G.designated = {"a": G.index(_left_perm(elems, mul, (1 % M, 0))),
                    "b": G.index(_left_perm(elems, mul, (0, 1)))}
    return G


def _left_perm(elems, mul, g):
    pos = {e: i for i, e in enumerate(elems)}
    return [pos[mul(g, x)] for x in elems]


def regular_group(elems: Sequence[Hashable], mul: Callable, gens: Sequence[Hashable],
                  name: str | None = None) -> FiniteGroup:
    """Left regular permutation model of an abstract group given by a product rule."""
    perms = [Permutation(_left_perm(elems, mul, g)) for g in gens]
    return FiniteGroup(perms, name=name, degree=len(elems))


def closure_group(gens: Sequence[Hashable], mul: Callable, name: str | None = None) -> FiniteGroup:
    """Regular model of the group generated by gens under mul (e.g. matrices)."""
    elems = list(gens)
    seen = set(elems)
    frontier = list(elems)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        elems.extend(nxt)
    elems.sort(key=repr)
    return regular_group(elems, mul, gens, name)


def dihedral(n: int) -> FiniteGroup:
    if n < 2 or n % 2:
        raise ValueError("dihedral order must be even")
    return metacyclic(n // 2, -1, 0, f"D{n}")


def quaternion(n: int) -> FiniteGroup:
    if not _is_pow2(n) or n < 8:
        raise ValueError("quaternion order must be a power of 2, at least 8")
    M = n // 2
    return metacyclic(M, -1, M // 2, f"Q{n}")


def semidihedral(n: int) -> FiniteGroup:
    if not _is_pow2(n) or n < 16:
        raise ValueError("semidihedral order must be a power of 2, at least 16")
    M = n // 2
    return metacyclic(M, M // 2 - 1, 0, f"SD{n}")


def modular(n: int) -> FiniteGroup:
    M = n // 2
    return metacyclic(M, M // 2 + 1, 0, f"M{n}")


def dicyclic(n: int) -> FiniteGroup:
    M = n // 2
    return metacyclic(M, -1, M // 2, f"Dic{n}")


def _matmul_mod(q: int):
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q)
    return mul


def sl23() -> FiniteGroup:
    return closure_group([(1, 1, 0, 1), (0, 2, 1, 0)], _matmul_mod(3), "SL23")


def pauli() -> FiniteGroup:
    # 2x2 matrices over Z[i]; entries encoded as (re, im) integer pairs
    def cm(u, v):
        return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    def ca(u, v):
        return (u[0] + v[0], u[1] + v[1])

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (ca(cm(a, e), cm(b, g)), ca(cm(a, f), cm(b, h)),
                ca(cm(c, e), cm(d, g)), ca(cm(c, f), cm(d, h)))

    o, z, m, i = (1, 0), (0, 0), (-1, 0), (0, 1)
    X = (z, o, o, z)
    Zm = (o, z, z, m)
    iI = (i, z, z, i)
    return closure_group([X, Zm, iI], mul, "Pauli")


_PERM_ALIASES = {
    "S3": "perm:[(1,2,3);(1,2)]",
    "A4": "perm:[(1,2,3);(1,2)(3,4)]",
    "S4": "perm:[(1,2,3,4);(1,2)]",
}


def parse_perm_spec(spec: str) -> FiniteGroup:
    m = re.fullmatch(r"perm:\[(.*)\]", spec.strip())
    if not m:
        raise GroupSpecError("expected perm:[...]", spec, 0)
    body = m.group(1)
    gens_cycles = []
    degree = 0
    offset = spec.index("[") + 1
    for part in body.split(";"):
        part_s = part.strip()
        cycles = []
        if part_s not in ("", "()"):
            if not re.fullmatch(r"(\(\s*\d+(\s*,\s*\d+)*\s*\))+", part_s):
                raise GroupSpecError("malformed cycle list", spec, offset)
            for cyc in re.findall(r"\(([^)]*)\)", part_s):
                pts = [int(t) - 1 for t in cyc.split(",")]
                if min(pts) < 0 or len(set(pts)) != len(pts):
                    raise GroupSpecError("bad points in cycle", spec, offset)
                degree = max(degree, max(pts) + 1)
                cycles.append(pts)
        gens_cycles.append(cycles)
        offset += len(part) + 1
    degree = max(degree, 1)
    gens = [Permutation.from_cycles(c, degree) for c in gens_cycles]
    return FiniteGroup(gens, name=spec.strip(), degree=degree)


def _split_product(spec: str) -> list[tuple[str, int]]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(spec):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif ch == "x" and depth == 0:
            parts.append((spec[start:i], start))
            start = i + 1
    parts.append((spec[start:], start))
    return parts


def _construct_factor(tok: str, spec: str, pos: int) -> FiniteGroup:
    t = tok.strip()
    if t.startswith("perm:"):
        return parse_perm_spec(t)
    if t in _PERM_ALIASES:
        G = parse_perm_spec(_PERM_ALIASES[t])
        G.name = t
        return G
    if t == "SL23":
        return sl23()
    if t == "Pauli":
        return pauli()
    m = re.fullmatch(r"(C|D|SD|Q|M|Dic)(\d+)", t)
    if not m:
        raise GroupSpecError(f"unknown group token {t!r}", spec, pos)
    kind, n = m.group(1), int(m.group(2))
    try:
        if kind == "C":
            return cyclic(n)
        if kind == "D":
            return dihedral(n)
        if kind == "Q":
            return quaternion(n)
        if kind == "SD":
            return semidihedral(n)
        if kind == "M":
            if not _is_pow2(n) or n < 16:
                raise ValueError("modular group order must be 2^k >= 16")
            return modular(n)
        if n < 8 or n % 4:
            raise ValueError("dicyclic order must be a multiple of 4, at least 8")
        return dicyclic(n)
    except ValueError as exc:
        raise GroupSpecError(str(exc), spec, pos) from None


@lru_cache(maxsize=None)
def construct_named(spec: str) -> FiniteGroup:
    """Build a group from a spec string; results are cached and shared."""
    if not spec or not spec.strip():
        raise GroupSpecError("empty group spec", spec or "", 0)
    parts = _split_product(spec)
    groups = []
    for tok, pos in parts:
        if not tok.strip():
            raise GroupSpecError("empty factor", spec, pos)
        groups.append(_construct_factor(tok, spec, pos))
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H)
    G.name = spec.strip()
    return G


# Groups used by sweeps.  2-groups of order <= 32 first.
TWO_GROUPS_32 = [
    "C1", "C2", "C4", "C2xC2", "C8", "C2xC4", "C2xC2xC2", "D8", "Q8",
    "C16", "C2xC8", "C4xC4", "C2xC2xC4", "C2xD8", "C2xQ8", "D16", "SD16", "Q16", "M16", "Pauli",
    "C32", "D32", "SD32", "Q32", "C2xQ16", "C4xQ8", "C2xD16", "C2xC2xQ8", "Q8xC4",
]

ODD_GROUPS = ["C3", "C5", "C9", "C27", "C3xC3", "C15"]

MIXED_GROUPS = ["C6", "S3", "C12", "Dic12", "A4", "D12", "C3xQ8", "SL23", "S4", "C5xQ8",
                "C3xD8", "C3xQ16", "C3xC2xQ8", "C2xSL23", "Q8xS3"]

# groups of order <= 64 for table integrity
TABLE_GROUPS = TWO_GROUPS_32 + ODD_GROUPS + MIXED_GROUPS + ["Q64", "D64", "SD64", "C2xQ32", "Q8xQ8"]


def catalog(max_order: int | None = None, kinds: Sequence[str] = ("two", "odd", "mixed")) -> list[str]:
    out = []
    pools = {"two": TWO_GROUPS_32, "odd": ODD_GROUPS, "mixed": MIXED_GROUPS, "table": TABLE_GROUPS}
    for k in kinds:
        for s in pools[k]:
            if s in out:
                continue
            if max_order is None or construct_named(s).order <= max_order:
                out.append(s)
    return out
