"""Finite permutation groups with exhaustive subgroup and section machinery.

Every group is enumerated in full: elements are the permutation tuples in
sorted order (so the identity has index 0), and the Cayley table is a numpy
array.  This is meant for groups of a few hundred elements, where brute
force is both the simplest and the most trustworthy approach.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_SUBGROUP_BOUND = 512


def order_bound(default: int = DEFAULT_SUBGROUP_BOUND) -> int:
    env = os.environ.get("BFK_ORDER_BOUND")
    return int(env) if env else default


class BoundExceeded(ValueError):
    pass


class Permutation:
    """Bijection of {0, ..., degree-1} stored by its image list."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(x) = self(other(x))
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def order(self) -> int:
        out = 1
        for c in self.cycles():
            out = out * len(c) // math.gcd(out, len(c))
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for s in range(self.degree):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            x = self.images[s]
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in self.cycles())
        return cyc or "()"


def _mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def _bool_to_mask(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr.astype(np.uint8), bitorder="little").tobytes(), "little")


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    size: int
    element_order: int
    members: tuple[int, ...]


class FiniteGroup:
    """A permutation group, fully enumerated."""

    def __init__(self, generators: Sequence[Permutation | Sequence[int]], name: str | None = None,
                 degree: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            degree = gens[0].degree if gens else 1
        if any(g.degree != degree for g in gens):
            raise ValueError("generators of different degrees")
        self.degree = degree
        self.name = name
        ident = tuple(range(degree))
        seen = {ident}
        frontier = [ident]
        gen_tuples = [g.images for g in gens]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gen_tuples:
                    y = tuple(x[i] for i in s)  # x * s
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        self.elements: list[tuple[int, ...]] = sorted(seen)
        self.order = len(self.elements)
        self._perms = np.array(self.elements, dtype=np.int64).reshape(self.order, degree)
        self._keys, self._key_sorter, self._base, self._weights = self._build_keys()
        self.generators = [self.index(g.images) for g in gens if g.images != ident]
        self._subgroup_cache: dict[int, SubgroupRecord] = {}
        self._quotient_cache: dict[int, Quotient] = {}

    # -- element bookkeeping -------------------------------------------------
    def _build_keys(self):
        n, d = self.order, self.degree
        base: list[int] = []
        P = self._perms
        distinct = 1
        for pt in range(d):
            if distinct == n:
                break
            cnt = np.unique(P[:, base + [pt]], axis=0).shape[0]
            if cnt > distinct:
                base.append(pt)
                distinct = cnt
        if not base:
            base = [0]
        if d ** len(base) >= 2**62:
            raise ValueError("base too long for integer keys")
        weights = np.array([d**k for k in range(len(base))], dtype=np.int64)
        keys = P[:, base] @ weights
        sorter = np.argsort(keys)
        return keys, sorter, base, weights

    def _lookup_keys(self, keys: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self._keys, keys, sorter=self._key_sorter)
        return self._key_sorter[pos]

    def index(self, perm: Sequence[int] | Permutation) -> int:
        if isinstance(perm, Permutation):
            perm = perm.images
        perm = tuple(perm)
        i = int(self._lookup_keys(np.array(perm, dtype=np.int64)[self._base] @ self._weights))
        if self.elements[i] != perm:
            raise KeyError(f"{perm} is not an element of {self}")
        return i

    def perm(self, i: int) -> Permutation:
        return Permutation(self.elements[i])

    @cached_property
    def mul(self) -> np.ndarray:
        """Cayley table: mul[i, j] = index of elements[i] * elements[j]."""
        n = self.order
        P = self._perms
        Pb = P[:, self._base]
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            table[i] = self._lookup_keys(P[i][Pb] @ self._weights)
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mul == 0)
        out = np.empty(self.order, dtype=np.int32)
        out[rows] = cols
        return out

    identity = 0

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        todo = np.ones(n, dtype=bool)
        while todo.any():
            hit = todo & (cur == 0)
            orders[hit] = k
            todo &= ~hit
            cur = self.mul[cur, np.arange(n)]
            k += 1
        return orders

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders)) if self.order > 1 else 1

    def power(self, i: int, k: int) -> int:
        k %= int(self.element_orders[i])
        out, base = 0, i
        while k:
            if k & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            k >>= 1
        return out

    def conj(self, x: int, g: int) -> int:
        """x g x^-1."""
        return int(self.mul[self.mul[x, g], self.inv[x]])

    def __repr__(self):
        return f"<FiniteGroup {self.name or '?'} of order {self.order}>"

    # -- conjugacy classes -------------------------------------------------------
    @cached_property
    def classes(self) -> list[ConjugacyClass]:
        """Conjugacy classes ordered by (element order, size, minimal element index)."""
        n = self.order
        assigned = np.full(n, -1)
        raw = []
        all_x = np.arange(n)
        for g in range(n):
            if assigned[g] >= 0:
                continue
            orbit = np.unique(self.mul[self.mul[all_x, g], self.inv[all_x]])
            assigned[orbit] = len(raw)
            raw.append(orbit)
        eo = self.element_orders
        cls = [ConjugacyClass(int(o[0]), len(o), int(eo[o[0]]), tuple(int(x) for x in o)) for o in raw]
        cls.sort(key=lambda c: (c.element_order, c.size, c.representative))
        return cls

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for k, c in enumerate(self.classes):
            out[list(c.members)] = k
        return out

    @cached_property
    def class_sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    def power_map(self, k: int) -> np.ndarray:
        """Class index of g^k for g in each class."""
        return np.array([self.class_of[self.power(c.representative, k)] for c in self.classes], dtype=np.int64)

    @cached_property
    def inverse_classes(self) -> np.ndarray:
        return np.array([self.class_of[self.inv[c.representative]] for c in self.classes], dtype=np.int64)

    # -- subgroups --------------------------------------------------------------
    def closure(self, gens: Iterable[int], start: np.ndarray | None = None) -> np.ndarray:
        """Boolean membership array of the subgroup generated by gens (and start)."""
        gens = np.array(sorted(set(int(g) for g in gens)), dtype=np.int64)
        inS = np.zeros(self.order, dtype=bool) if start is None else start.copy()
        inS[0] = True
        members = np.nonzero(inS)[0]
        frontier = members
        if len(gens) == 0:
            return inS
        all_gens = np.concatenate([gens, members]) if start is not None else gens
        while len(frontier):
            prod = np.unique(self.mul[np.ix_(frontier, all_gens)])
            new = prod[~inS[prod]]
            inS[new] = True
            frontier = new
        return inS

    def subgroup(self, members_or_gens: Iterable[int], generators: bool = True) -> "SubgroupRecord":
        if generators:
            arr = self.closure(members_or_gens)
        else:
            arr = np.zeros(self.order, dtype=bool)
            arr[list(members_or_gens)] = True
        return self._record(arr)

    def _record(self, arr: np.ndarray) -> "SubgroupRecord":
        mask = _bool_to_mask(arr)
        rec = self._subgroup_cache.get(mask)
        if rec is None:
            rec = SubgroupRecord(self, np.nonzero(arr)[0], mask)
            self._subgroup_cache[mask] = rec
        return rec

    @cached_property
    def whole(self) -> "SubgroupRecord":
        return self._record(np.ones(self.order, dtype=bool))

    @cached_property
    def trivial(self) -> "SubgroupRecord":
        arr = np.zeros(self.order, dtype=bool)
        arr[0] = True
        return self._record(arr)

    def conjugate_subgroup(self, S: "SubgroupRecord", x: int) -> "SubgroupRecord":
        arr = np.zeros(self.order, dtype=bool)
        arr[self.mul[self.mul[x, S.members], self.inv[x]]] = True
        return self._record(arr)

    def conjugates(self, S: "SubgroupRecord") -> list["SubgroupRecord"]:
        seen = {}
        N = self.normalizer(S)
        for x in self._transversal(N):
            T = self.conjugate_subgroup(S, x)
            seen[T.mask] = T
        return sorted(seen.values(), key=lambda T: T.mask)

    def _transversal(self, H: "SubgroupRecord") -> list[int]:
        """Left coset representatives x of H (cosets xH)."""
        covered = np.zeros(self.order, dtype=bool)
        reps = []
        for x in range(self.order):
            if not covered[x]:
                reps.append(x)
                covered[self.mul[x, H.members]] = True
        return reps

    @cached_property
    def _subgroup_classes(self) -> list[list["SubgroupRecord"]]:
        bound = order_bound()
        if self.order > bound:
            raise BoundExceeded(f"subgroup enumeration bound {bound} exceeded (order {self.order})")
        known: dict[int, int] = {}  # mask -> class id
        classes: list[list[SubgroupRecord]] = []

        def register(S):
            conj = self.conjugates(S)
            cid = len(classes)
            for T in conj:
                known[T.mask] = cid
            classes.append(conj)
            return conj[0]

        register(self.trivial)
        queue = [classes[0][0]]
        while queue:
            S = queue.pop()
            covered = S.bool_array.copy()
            for g in range(self.order):
                if covered[g]:
                    continue
                covered[self.mul[g, S.members]] = True
                arr = self.closure([g], start=S.bool_array)
                mask = _bool_to_mask(arr)
                if mask in known:
                    continue
                T = self._record(arr)
                queue.append(register(T))
        classes.sort(key=lambda c: (c[0].order, c[0].mask))
        return classes

    def subgroups_up_to_conjugacy(self) -> list["SubgroupRecord"]:
        """One representative (the smallest-mask conjugate) per subgroup class."""
        return [c[0] for c in self._subgroup_classes]

    def subgroup_class(self, S: "SubgroupRecord") -> list["SubgroupRecord"]:
        for c in self._subgroup_classes:
            if any(T.mask == S.mask for T in c):
                return c
        raise KeyError("not a subgroup of this group")

    def class_representative(self, S: "SubgroupRecord") -> "SubgroupRecord":
        return self.subgroup_class(S)[0]

    def all_subgroups(self) -> list["SubgroupRecord"]:
        return [T for c in self._subgroup_classes for T in c]

    def normal_subgroups(self) -> list["SubgroupRecord"]:
        return [c[0] for c in self._subgroup_classes if len(c) == 1]

    def is_normal(self, S: "SubgroupRecord") -> bool:
        for g in self.generators:
            conj = self.mul[self.mul[g, S.members], self.inv[g]]
            if not S.bool_array[conj].all():
                return False
        return True

    def normalizer(self, S: "SubgroupRecord") -> "SubgroupRecord":
        arr = np.zeros(self.order, dtype=bool)
        inv = self.inv
        for x in range(self.order):
            if S.bool_array[self.mul[self.mul[x, S.members], inv[x]]].all():
                arr[x] = True
        return self._record(arr)

    def centralizer(self, S: "SubgroupRecord | Iterable[int]") -> "SubgroupRecord":
        members = S.members if isinstance(S, SubgroupRecord) else np.array(list(S), dtype=np.int64)
        arr = np.all(self.mul[:, members] == self.mul[members, :].T, axis=1)
        return self._record(arr)

    @cached_property
    def center(self) -> "SubgroupRecord":
        return self.centralizer(self.whole)

    @cached_property
    def derived_subgroup(self) -> "SubgroupRecord":
        x = np.arange(self.order)
        inv = self.inv
        # [a, b] = a b a^-1 b^-1
        comms = self.mul[self.mul[x[:, None], x[None, :]], self.mul[inv[x][:, None], inv[x][None, :]]]
        return self.subgroup(np.unique(comms))

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def is_cyclic(self) -> bool:
        return bool((self.element_orders == self.order).any())

    def is_p_group(self, p: int | None = None) -> bool:
        n = self.order
        if n == 1:
            return True
        if p is None:
            p = _smallest_prime(n)
        while n % p == 0:
            n //= p
        return n == 1

    def sections(self) -> list["Section"]:
        """Sections (H, N): H over subgroup-class representatives, N over all normal subgroups of H."""
        out = []
        for H in self.subgroups_up_to_conjugacy():
            Hg = H.as_group()
            for Nl in Hg.normal_subgroups():
                out.append(Section(H, H.lift_subgroup(Nl)))
        return out

    # -- quotients -----------------------------------------------------------------
    def quotient(self, N: "SubgroupRecord") -> "Quotient":
        q = self._quotient_cache.get(N.mask)
        if q is not None:
            return q
        if not self.is_normal(N):
            raise ValueError("subgroup is not normal")
        coset_of = np.full(self.order, -1, dtype=np.int64)
        reps = []
        for x in range(self.order):
            if coset_of[x] < 0:
                coset_of[self.mul[x, N.members]] = len(reps)
                reps.append(x)
        reps_arr = np.array(reps, dtype=np.int64)
        m = len(reps)
        # left multiplication on cosets: g . xN = gxN
        all_perms = coset_of[self.mul[:, reps_arr]]  # row g = permutation of cosets
        gens = [tuple(int(v) for v in all_perms[g]) for g in self.generators]
        name = f"{self.name}/N{N.order}" if self.name else None
        Qg = FiniteGroup(gens, name=name, degree=m)
        keys = all_perms[:, Qg._base] @ Qg._weights
        images = Qg._lookup_keys(keys)
        proj = GroupHom(self, Qg, images)
        q = Quotient(Qg, proj, N)
        self._quotient_cache[N.mask] = q
        return q


def _smallest_prime(n: int) -> int:
    p = 2
    while n % p:
        p += 1
    return p


class SubgroupRecord:
    """A subgroup of a fixed parent, by its member indices."""

    def __init__(self, parent: FiniteGroup, members: np.ndarray, mask: int):
        self.parent = parent
        self.members = np.asarray(members, dtype=np.int64)
        self.mask = mask
        self.order = len(self.members)

    @cached_property
    def bool_array(self) -> np.ndarray:
        arr = np.zeros(self.parent.order, dtype=bool)
        arr[self.members] = True
        return arr

    def __contains__(self, i: int) -> bool:
        return bool(self.bool_array[i])

    def __eq__(self, other):
        return isinstance(other, SubgroupRecord) and other.parent is self.parent and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __le__(self, other: "SubgroupRecord") -> bool:
        return (self.mask & ~other.mask) == 0

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent.name or 'G'}>"

    @property
    def is_class_representative(self) -> bool:
        return self.parent.class_representative(self) == self

    def as_group(self) -> FiniteGroup:
        g = self.__dict__.get("_as_group")
        if g is None:
            P = self.parent
            gens = self._small_generating_set()
            name = f"{P.name}[{self.order}]" if P.name else None
            g = FiniteGroup([P.elements[i] for i in gens], name=name, degree=P.degree)
            # members are sorted tuples, as are g.elements
            assert g.order == self.order
            self.__dict__["_as_group"] = g
        return g

    @cached_property
    def to_parent(self) -> np.ndarray:
        """to_parent[i] = parent index of element i of as_group()."""
        return self.members.copy()

    @cached_property
    def from_parent(self) -> dict[int, int]:
        return {int(p): i for i, p in enumerate(self.members)}

    def _small_generating_set(self) -> list[int]:
        P = self.parent
        eo = P.element_orders
        cand = sorted(self.members.tolist(), key=lambda i: (-eo[i], i))
        gens: list[int] = []
        cur = np.zeros(P.order, dtype=bool)
        cur[0] = True
        for g in cand:
            if cur.sum() == self.order:
                break
            if not cur[g]:
                gens.append(g)
                cur = P.closure(gens)
        return gens

    def lift_subgroup(self, T: "SubgroupRecord") -> "SubgroupRecord":
        """Subgroup of the parent corresponding to a subgroup T of as_group()."""
        assert T.parent is self.as_group()
        return self.parent.subgroup(self.to_parent[T.members], generators=False)

    def restrict_subgroup(self, T: "SubgroupRecord") -> "SubgroupRecord":
        """T (a parent subgroup contained in self) as a subgroup of as_group()."""
        if not T <= self:
            raise ValueError("not contained")
        fp = self.from_parent
        return self.as_group().subgroup([fp[int(i)] for i in T.members], generators=False)


@dataclass
class Section:
    """A section (H, N) of G: N normal in H <= G."""

    upper: SubgroupRecord
    lower: SubgroupRecord

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError("lower is not contained in upper")
        H = self.upper.as_group()
        if not H.is_normal(self.upper.restrict_subgroup(self.lower)):
            raise ValueError("lower is not normal in upper")

    @property
    def group(self) -> FiniteGroup:
        return self.upper.parent

    @property
    def quotient(self) -> "Quotient":
        H = self.upper.as_group()
        return H.quotient(self.upper.restrict_subgroup(self.lower))

    @property
    def order(self) -> int:
        return self.upper.order // self.lower.order


class GroupHom:
    """Homomorphism given by the image index of every source element."""

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images: np.ndarray):
        self.source = source
        self.target = target
        self.images = np.asarray(images, dtype=np.int64)

    @classmethod
    def from_generators(cls, source: FiniteGroup, target: FiniteGroup,
                        gen_images: dict[int, int]) -> "GroupHom | None":
        """Extend generator images multiplicatively; None if inconsistent."""
        img = _extend_hom(source, target, list(gen_images), list(gen_images.values()))
        return None if img is None else cls(source, target, img)

    def __call__(self, i: int) -> int:
        return int(self.images[i])

    def is_homomorphism(self) -> bool:
        S, T = self.source, self.target
        lhs = self.images[S.mul]
        rhs = T.mul[self.images[:, None], self.images[None, :]]
        return bool((lhs == rhs).all())

    def kernel(self) -> SubgroupRecord:
        return self.source.subgroup(np.nonzero(self.images == 0)[0], generators=False)

    def image(self) -> SubgroupRecord:
        return self.target.subgroup(np.unique(self.images), generators=False)

    def is_isomorphism(self) -> bool:
        return self.source.order == self.target.order and len(np.unique(self.images)) == self.target.order

    def inverse(self) -> "GroupHom":
        if not self.is_isomorphism():
            raise ValueError("not an isomorphism")
        inv = np.empty(self.target.order, dtype=np.int64)
        inv[self.images] = np.arange(self.source.order)
        return GroupHom(self.target, self.source, inv)

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self o other."""
        return GroupHom(other.source, self.target, self.images[other.images])


@dataclass
class Quotient:
    group: FiniteGroup
    projection: GroupHom
    kernel: SubgroupRecord


def quotient(G: FiniteGroup, N: SubgroupRecord) -> tuple[FiniteGroup, GroupHom]:
    q = G.quotient(N)
    return q.group, q.projection


def _extend_hom(S: FiniteGroup, T: FiniteGroup, gens: list[int], imgs: list[int]) -> np.ndarray | None:
    img = np.full(S.order, -1, dtype=np.int64)
    img[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, imgs):
                y = S.mul[x, g]
                v = T.mul[img[x], h]
                if img[y] < 0:
                    img[y] = v
                    nxt.append(y)
                elif img[y] != v:
                    return None
        frontier = nxt
    if (img < 0).any():
        return None
    return img


def _invariant_signature(G: FiniteGroup):
    eo = G.element_orders
    return (G.order, tuple(sorted(eo.tolist())),
            tuple(sorted((c.element_order, c.size) for c in G.classes)))


def find_isomorphism(A: FiniteGroup, B: FiniteGroup) -> GroupHom | None:
    """Backtracking isomorphism search after invariant screening."""
    if _invariant_signature(A) != _invariant_signature(B):
        return None
    gens = A.whole._small_generating_set()
    eoA, eoB = A.element_orders, B.element_orders
    csA, csB = A.class_sizes[A.class_of], B.class_sizes[B.class_of]
    cands = [[int(y) for y in range(B.order) if eoB[y] == eoA[g] and csB[y] == csA[g]] for g in gens]

    def rec(k, imgs):
        if k == len(gens):
            img = _extend_hom(A, B, gens, imgs)
            if img is not None and len(np.unique(img)) == B.order:
                return img
            return None
        for y in cands[k]:
            if _extend_hom_partial_ok(A, B, gens[:k + 1], imgs + [y]):
                r = rec(k + 1, imgs + [y])
                if r is not None:
                    return r
        return None

    if A.order == 1:
        return GroupHom(A, B, np.zeros(1, dtype=np.int64))
    img = rec(0, [])
    return None if img is None else GroupHom(A, B, img)


def _extend_hom_partial_ok(A, B, gens, imgs) -> bool:
    # consistency on the subgroup generated by gens
    img = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, imgs):
                y = int(A.mul[x, g])
                v = int(B.mul[img[x], h])
                if y not in img:
                    img[y] = v
                    nxt.append(y)
                elif img[y] != v:
                    return False
        frontier = nxt
    return len(set(img.values())) == len(img)


def are_isomorphic(A: FiniteGroup, B: FiniteGroup) -> bool:
    return find_isomorphism(A, B) is not None


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """G x H on disjoint points; the result carries factor maps.

    Attributes set on the result: ``factors``, ``pair_index`` (|G| x |H| array),
    ``left_of`` and ``right_of`` (projections as index arrays).
    """
    dG = G.degree
    gens = [tuple(G.elements[g]) + tuple(range(dG, dG + H.degree)) for g in G.generators]
    gens += [tuple(range(dG)) + tuple(dG + x for x in H.elements[h]) for h in H.generators]
    if name is None and G.name and H.name:
        name = f"{G.name}x{H.name}"
    P = FiniteGroup(gens, name=name, degree=dG + H.degree)
    pair = np.empty((G.order, H.order), dtype=np.int64)
    GP = np.array(G.elements, dtype=np.int64).reshape(G.order, G.degree)
    HP = np.array(H.elements, dtype=np.int64).reshape(H.order, H.degree) + dG
    for i in range(G.order):
        rows = np.concatenate([np.repeat(GP[i][None, :], H.order, axis=0), HP], axis=1)
        pair[i] = P._lookup_keys(rows[:, P._base] @ P._weights)
    P.factors = (G, H)
    P.pair_index = pair
    left = np.empty(P.order, dtype=np.int64)
    right = np.empty(P.order, dtype=np.int64)
    gi, hi = np.meshgrid(np.arange(G.order), np.arange(H.order), indexing="ij")
    left[pair.ravel()] = gi.ravel()
    right[pair.ravel()] = hi.ravel()
    P.left_of = left
    P.right_of = right
    return P


# -- recognition --------------------------------------------------------------------

def is_generalized_quaternion(G: FiniteGroup) -> int | None:
    """n with G = Q_{2^n}: a noncyclic 2-group of order >= 8 with a unique involution."""
    n = G.order
    if n < 8 or n & (n - 1) or G.is_cyclic():
        return None
    if int((G.element_orders == 2).sum()) != 1:
        return None
    return n.bit_length() - 1


def normal_rank_one_type(P: FiniteGroup) -> str | None:
    """Type tag of a 2-group of normal 2-rank 1, or of an odd cyclic p-group.

    Returns 'cyclic', 'quaternion', 'dihedral', 'semidihedral', or None when P
    is not one of these (normal rank >= 2).
    """
    n = P.order
    if P.is_cyclic():
        return "cyclic"
    if n & (n - 1) or n < 8:
        return None
    if is_generalized_quaternion(P):
        return "quaternion"
    if n < 16:
        return None
    eo = P.element_orders
    cyc = np.nonzero(eo == n // 2)[0]
    if len(cyc) == 0:
        return None
    A = P.subgroup([int(cyc[0])])
    outside = ~A.bool_array
    inv_out = int((eo[outside] == 2).sum())
    four_out = int((eo[outside] == 4).sum())
    half = n // 2
    if inv_out == half:
        return "dihedral"
    if inv_out == half // 2 and four_out == half // 2:
        # semidihedral: b a b^-1 = a^(n/4 - 1); the modular group has all outside of order 2 or 2^k
        a = int(cyc[0])
        b = int(np.nonzero(outside & (eo == 2))[0][0])
        conj = P.conj(b, a)
        if conj == P.power(a, n // 4 - 1):
            return "semidihedral"
    return None


def has_quaternion_subquotient(G: FiniteGroup, n: int) -> tuple[bool, Section | None]:
    """Whether some section H/N of G is isomorphic to Q_{2^n} (with a witness)."""
    target = 2**n
    for H in G.subgroups_up_to_conjugacy():
        if H.order % target:
            continue
        Hg = H.as_group()
        for Nl in Hg.normal_subgroups():
            if H.order // Nl.order != target:
                continue
            Q = Hg.quotient(Nl).group
            if is_generalized_quaternion(Q) == n:
                return True, Section(H, H.lift_subgroup(Nl))
    return False, None


def sylow_subgroup(G: FiniteGroup, p: int) -> SubgroupRecord:
    """A Sylow p-subgroup by brute-force search for a maximal p-subgroup."""
    n = G.order
    pa = 1
    while n % p == 0:
        n //= p
        pa *= p
    cur = G.trivial
    while cur.order < pa:
        grown = False
        N = G.normalizer(cur)
        for g in N.members:
            g = int(g)
            if g in cur:
                continue
            if G.element_orders[g] & (G.element_orders[g] - 1) if p == 2 else not _is_power(int(G.element_orders[g]), p):
                continue
            T = G.subgroup(np.concatenate([cur.members, [g]]))
            if _is_power(T.order, p):
                cur = T
                grown = True
                break
        if not grown:
            raise RuntimeError("failed to grow p-subgroup")
    return cur


def _is_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class ElementaryClassification:
    quasi_elementary_for: frozenset[int]
    elementary_for: frozenset[int]
    Kp_elementary_for: frozenset[int]
    normal_sylow: frozenset[int]


def classify_elementary(G: FiniteGroup, p: int) -> ElementaryClassification:
    """Which primes q make G (quasi-)elementary, and Q(mu_p')-elementary, for q.

    G is quasi-elementary for q iff it has a normal cyclic subgroup C of
    q'-order with G/C a q-group; a Sylow q-subgroup Q is then a complement.
    Elementary: Q centralizes C.  Q(mu_p')-elementary: Q centralizes the
    p-complement of C.
    """
    n = G.order
    primes = _primes_of(n) or [2]
    quasi, elem, kp, nsyl = set(), set(), set(), set()
    eo = G.element_orders
    for q in _primes_of(n) or []:
        S = sylow_subgroup(G, q)
        if G.is_normal(S):
            nsyl.add(q)
    for q in sorted(set(primes) | ({p} if n == 1 else set())):
        m = n
        while m % q == 0:
            m //= q
        # normal cyclic q'-subgroup of order m
        C = None
        if m == 1:
            C = G.trivial
        else:
            for g in np.nonzero(eo == m)[0]:
                T = G.subgroup([int(g)])
                if G.is_normal(T):
                    C = T
                    break
        if C is None:
            continue
        quasi.add(q)
        Q = sylow_subgroup(G, q)
        cen = G.centralizer(Q)
        if C <= cen:
            elem.add(q)
        # p-complement of C: elements of C of p'-order
        m_p = m
        while m_p % p == 0:
            m_p //= p
        Cp = G.subgroup([int(x) for x in C.members if m_p % int(eo[x]) == 0], generators=True)
        if Cp <= cen:
            kp.add(q)
    if n == 1:
        quasi = elem = kp = set(primes)
    return ElementaryClassification(frozenset(quasi), frozenset(elem), frozenset(kp), frozenset(nsyl))


def _primes_of(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    return G.classes


def subgroups_up_to_conjugacy(G: FiniteGroup) -> list[SubgroupRecord]:
    return G.subgroups_up_to_conjugacy()


def normal_subgroups(G: FiniteGroup) -> list[SubgroupRecord]:
    return G.normal_subgroups()


def normalizer(G: FiniteGroup, S: SubgroupRecord) -> SubgroupRecord:
    return G.normalizer(S)


def centralizer(G: FiniteGroup, S: SubgroupRecord) -> SubgroupRecord:
    return G.centralizer(S)


def sections(G: FiniteGroup) -> list[Section]:
    return G.sections()
