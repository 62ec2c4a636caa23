"""Character expressions and operation pipelines.

Grammar (Python expression syntax, evaluated against a context group):

    irr(i)                 i-th irreducible (canonical order)
    classsum(F, i)         i-th Galois class sum over F in {Q, K2, K3, ...}
    gamma(n)               sum of faithful irreducibles; context must be Q_{2^n}
    one(), regular()
    tensor(a, b)           outer product on a direct product A x B
    on(G, e)               evaluate e with context group G
    ind(G, H, e) / res(G, H, e)
    inf(G, Q, e) / defl(G, Q, e)         Q names the quotient up to isomorphism
    indinf(G, H, Q, e) / defres(G, H, Q, e)
    mult(phi, e)           phi a linear character expression
    integer combinations with +, -, * (and * between characters for products)

Group arguments are spec strings such as Q16 or C3xQ8 (bare or quoted).
Subgroups and quotients are located up to isomorphism; the first match in the
canonical subgroup order is used.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass

import numpy as np

from . import biset_ops as ops
from .catalog import GroupSpecError, construct_named
from .char_table import VirtualCharacter, character_table, galois_orbits
from .perm_group import FiniteGroup, Section, SubgroupRecord, are_isomorphic, is_generalized_quaternion
from .rep_rings import faithful_irreducibles


class ExprError(ValueError):
    def __init__(self, msg: str, pos: int | None = None, text: str = ""):
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{msg}{where}" + (f" in {text!r}" if text else ""))
        self.pos = pos


@dataclass
class _Ctx:
    group: FiniteGroup | None


def find_subgroup(G: FiniteGroup, spec: str) -> SubgroupRecord:
    target = construct_named(spec)
    for H in G.subgroups_up_to_conjugacy():
        if H.order == target.order and are_isomorphic(H.as_group(), target):
            return H
    raise ExprError(f"{G.name} has no subgroup isomorphic to {spec}")


def find_section(G: FiniteGroup, H_spec: str, Q_spec: str) -> Section:
    H = find_subgroup(G, H_spec) if H_spec != G.name else G.whole
    Hg = H.as_group()
    target = construct_named(Q_spec)
    for N in Hg.normal_subgroups():
        if H.order // N.order == target.order and are_isomorphic(Hg.quotient(N).group, target):
            return Section(H, H.lift_subgroup(N))
    raise ExprError(f"no section {H_spec}/N isomorphic to {Q_spec} in {G.name}")


def find_quotient(G: FiniteGroup, Q_spec: str) -> SubgroupRecord:
    target = construct_named(Q_spec)
    for N in G.normal_subgroups():
        if G.order // N.order == target.order and are_isomorphic(G.quotient(N).group, target):
            return N
    raise ExprError(f"{G.name} has no quotient isomorphic to {Q_spec}")


def outer_tensor(G: FiniteGroup, a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    if not hasattr(G, "factors"):
        raise ExprError(f"{G.name} is not a direct product")
    A, B = G.factors
    if a.group is not A or b.group is not B:
        raise ExprError("tensor factors do not match the product")
    fa, fb = a.class_function(), b.class_function()
    from .char_table import ClassFunction

    reps = [c.representative for c in G.classes]
    va = fa.values[[A.class_of[G.left_of[r]] for r in reps]]
    vb = fb.values[[B.class_of[G.right_of[r]] for r in reps]]
    f = ClassFunction(G, va, fa.den, canonical=True) * ClassFunction(G, vb, fb.den, canonical=True)
    return character_table(G).virtual(f)


class _Evaluator:
    def __init__(self, text: str):
        self.text = text

    def err(self, msg, node=None):
        pos = getattr(node, "col_offset", None)
        return ExprError(msg, pos, self.text)

    def group_arg(self, node) -> str:
        if isinstance(node, ast.Name):
            return node.id
        if isinstance(node, ast.Constant) and isinstance(node.value, str):
            return node.value
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return str(node.value)
        raise self.err("expected a group spec", node)

    def group(self, node) -> FiniteGroup:
        spec = self.group_arg(node)
        try:
            return construct_named(spec)
        except GroupSpecError as exc:
            raise self.err(str(exc), node) from None

    def eval(self, node, ctx: _Ctx):
        if isinstance(node, ast.Expression):
            return self.eval(node.body, ctx)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return int(node.value)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = self.eval(node.operand, ctx)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.Add, ast.Sub, ast.Mult)):
            a, b = self.eval(node.left, ctx), self.eval(node.right, ctx)
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(a, int) != isinstance(b, int):
                raise self.err("cannot add an integer to a character", node)
            if isinstance(a, VirtualCharacter) and a.table is not b.table:
                raise self.err("characters live on different groups", node)
            return a + b if isinstance(node.op, ast.Add) else a - b
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
            return self.call(node.func.id, node.args, ctx, node)
        raise self.err("unsupported syntax", node)

    def need(self, ctx, node) -> FiniteGroup:
        if ctx.group is None:
            raise self.err("no context group; wrap the expression in on(G, ...)", node)
        return ctx.group

    def char(self, node, ctx) -> VirtualCharacter:
        v = self.eval(node, ctx)
        if not isinstance(v, VirtualCharacter):
            raise self.err("expected a character", node)
        return v

    def char_on(self, node, G: FiniteGroup) -> VirtualCharacter:
        v = self.char(node, _Ctx(G))
        if v.group is not G:
            raise self.err(f"argument must live on the operation's own model of {G.name}; "
                           "write it without on(...)", node)
        return v

    def call(self, name, args, ctx, node):
        n = len(args)

        def arity(k):
            if n != k:
                raise self.err(f"{name} takes {k} arguments", node)

        if name == "irr":
            arity(1)
            tab = character_table(self.need(ctx, node))
            i = self.eval(args[0], ctx)
            if not isinstance(i, int) or not 0 <= i < tab.rank:
                raise self.err("irr index out of range", args[0])
            return VirtualCharacter.irreducible(tab, i)
        if name == "classsum":
            arity(2)
            tab = character_table(self.need(ctx, node))
            fld = self.group_arg(args[0])
            field_ = "Q" if fld in ("Q", "Qbar") else int(fld.lstrip("K") or 2)
            orbs = galois_orbits(tab, field_)
            i = self.eval(args[1], ctx)
            if not isinstance(i, int) or not 0 <= i < len(orbs):
                raise self.err("class-sum index out of range", args[1])
            return orbs[i].class_sum
        if name == "gamma":
            arity(1)
            G = self.need(ctx, node)
            k = self.eval(args[0], ctx)
            if is_generalized_quaternion(G) != k:
                raise self.err(f"gamma({k}) needs a context group isomorphic to Q{2**k}", node)
            tab = character_table(G)
            v = np.zeros(tab.rank, dtype=np.int64)
            v[faithful_irreducibles(tab)] = 1
            return VirtualCharacter(tab, v)
        if name == "one":
            arity(0)
            return VirtualCharacter.trivial(character_table(self.need(ctx, node)))
        if name == "regular":
            arity(0)
            tab = character_table(self.need(ctx, node))
            return VirtualCharacter(tab, tab.degrees)
        if name == "on":
            arity(2)
            return self.char(args[1], _Ctx(self.group(args[0])))
        if name == "tensor":
            arity(2)
            G = self.need(ctx, node)
            if not hasattr(G, "factors"):
                raise self.err("tensor needs a direct-product context", node)
            A, B = G.factors
            return outer_tensor(G, self.char(args[0], _Ctx(A)), self.char(args[1], _Ctx(B)))
        if name == "mult":
            arity(2)
            return ops.mult_linear(self.char(args[0], ctx), self.char(args[1], ctx))
        if name in ("ind", "res"):
            arity(3)
            G = self.group(args[0])
            H = find_subgroup(G, self.group_arg(args[1]))
            if name == "ind":
                return ops.induce(H, self.char_on(args[2], H.as_group()))
            return ops.restrict(H, self.char_on(args[2], G))
        if name in ("inf", "defl"):
            arity(3)
            G = self.group(args[0])
            N = find_quotient(G, self.group_arg(args[1]))
            q = G.quotient(N)
            if name == "inf":
                return ops.inflate(q.projection, self.char_on(args[2], q.group))
            return ops.deflate(G, N, self.char_on(args[2], G))
        if name in ("indinf", "defres"):
            arity(4)
            G = self.group(args[0])
            sec = find_section(G, self.group_arg(args[1]), self.group_arg(args[2]))
            if name == "indinf":
                return ops.indinf(sec, self.char_on(args[3], sec.quotient.group))
            return ops.defres(sec, self.char_on(args[3], G))
        raise self.err(f"unknown function {name!r}", node)


def evaluate(text: str, group: FiniteGroup | None = None) -> VirtualCharacter:
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"syntax error: {exc.msg}", (exc.offset or 1) - 1, text) from None
    v = _Evaluator(text).eval(tree, _Ctx(group))
    if isinstance(v, int):
        if group is None:
            raise ExprError("an integer needs a context group", 0, text)
        return VirtualCharacter.trivial(character_table(group)) * v
    return v
