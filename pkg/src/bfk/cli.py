"""Command-line front end: `bfk <subcommand> ...`. Exit code 0 iff the report passes."""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

INT64_MAX = 2**63 - 1


def _clean(x):
    """JSON-safe copy; integers beyond 64 bits become strings."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, np.ndarray):
        return _clean(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        x = int(x)
        return str(x) if abs(x) > INT64_MAX else x
    return x


def _text(x, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(x, dict):
        for k, v in x.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(e, (dict, list)) for e in
                                                        (v.values() if isinstance(v, dict) else v)):
                out.append(f"{pad}{k}:")
                out += _text(v, indent + 1)
            else:
                out.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(x, list):
        for v in x:
            if isinstance(v, dict) or (isinstance(v, list) and any(isinstance(e, (dict, list)) for e in v)):
                out.append(f"{pad}-")
                out += _text(v, indent + 1)
            else:
                out.append(f"{pad}- {json.dumps(v)}")
    else:
        out.append(f"{pad}{json.dumps(x)}")
    return out


# -- subcommands ------------------------------------------------------------------

def cmd_table(a) -> dict:
    from .catalog import construct_named
    from .char_table import check_orthogonality, character_table

    G = construct_named(a.group)
    tab = character_table(G)
    ok = check_orthogonality(tab) and int(sum(d * d for d in tab.degrees)) == G.order
    return {**tab.to_json(), "degrees": [int(d) for d in tab.degrees], "pass": ok}


def cmd_orbits(a) -> dict:
    from .catalog import construct_named
    from .char_table import character_table, galois_orbits
    from .rep_rings import FieldSpec

    G = construct_named(a.group)
    spec = FieldSpec.parse(a.field)
    if spec.tag not in ("Qbar", "Q", "K"):
        raise ValueError("orbits needs a field Q, Qbar or K<p>")
    orbs = galois_orbits(character_table(G), "Q" if spec.tag != "K" else spec.p)
    return {"group": G.name, "field": str(spec), "count": len(orbs),
            "orbits": [list(o.members) for o in orbs],
            "class_sums": [o.class_sum.to_json() for o in orbs], "pass": True}


def cmd_cokernel(a) -> dict:
    from .catalog import construct_named
    from .kappa import cokernel

    return cokernel(construct_named(a.group), a.prime).to_json()


def cmd_detect(a) -> dict:
    from .catalog import construct_named
    from .expr import evaluate
    from .kappa import detect

    G = construct_named(a.group)
    chi = evaluate(a.expr, G)
    if chi.group is not G:
        raise ValueError("the expression must evaluate to a character of the named group")
    return {"group": G.name, "character": chi.to_json(), **detect(G, chi, a.prime).to_json()}


def cmd_genetic(a) -> dict:
    from .catalog import construct_named
    from .genetic import FUNCTORS, genetic_basis, verify_rational

    P = construct_named(a.group)
    B = genetic_basis(P)
    reports = [verify_rational(P, f).to_json() for f in FUNCTORS]
    return {**B.to_json(), "rationality": reports, "pass": all(r["pass"] for r in reports)}


def cmd_fn_eval(a) -> dict:
    from .catalog import construct_named
    from .kappa import F_n_eval, cokernel

    G = construct_named(a.group)
    sp = F_n_eval(G, a.n, a.mode)
    return {"group": G.name, "n": a.n, "mode": a.mode, "cokernel_f2_dim": cokernel(G).f2_dim,
            **sp.to_json(), "pass": True}


def cmd_verify(a) -> dict:
    from .verify import run

    return run(a.lemma, a.group)


def cmd_ops(a) -> dict:
    from .catalog import construct_named
    from .expr import evaluate

    G = construct_named(a.group) if a.group else None
    chi = evaluate(a.expr, G)
    return {"group": chi.group.name, "coefficients": chi.to_json(), "degree": chi.degree(),
            "norm": chi.norm(), "is_character": chi.is_character(), "pass": True}


def build_parser() -> argparse.ArgumentParser:
    from .verify import LEMMAS

    ap = argparse.ArgumentParser(prog="bfk", description="Exact character-ring computations for finite groups.")
    ap.add_argument("--json", action="store_true", help="emit JSON (default: text)")
    ap.add_argument("--bound", type=int, help="override the enumeration bound (BFK_ORDER_BOUND)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(fn=fn)
        return p

    p = add("table", cmd_table, "exact character table")
    p.add_argument("group")
    p = add("orbits", cmd_orbits, "Galois orbits on Irr over Q or K<p>")
    p.add_argument("group")
    p.add_argument("field")
    p = add("cokernel", cmd_cokernel, "R_K(G)/im(kappa) structure")
    p.add_argument("group")
    p.add_argument("--prime", type=int, default=2)
    p = add("detect", cmd_detect, "detection by restriction to elementary subgroups")
    p.add_argument("group")
    p.add_argument("expr")
    p.add_argument("--prime", type=int, default=2)
    p = add("genetic", cmd_genetic, "genetic basis and rationality checks of a p-group")
    p.add_argument("group")
    p = add("fn-eval", cmd_fn_eval, "the subspace F_n(G) of the cokernel")
    p.add_argument("group")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("exact", "sections"), default="sections")
    p = add("verify", cmd_verify, "run a named verification")
    p.add_argument("lemma", choices=LEMMAS)
    p.add_argument("group", nargs="?")
    p = add("ops", cmd_ops, "evaluate a character expression")
    p.add_argument("expr")
    p.add_argument("--group", help="context group for bare expressions")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    a = ap.parse_args(argv)
    saved = os.environ.get("BFK_ORDER_BOUND")
    if a.bound is not None:
        os.environ["BFK_ORDER_BOUND"] = str(a.bound)
    try:
        report = a.fn(a)
    except (ValueError, ArithmeticError, KeyError, RuntimeError) as exc:
        report = {"error": f"{type(exc).__name__}: {exc}", "pass": False}
    finally:
        if saved is None:
            os.environ.pop("BFK_ORDER_BOUND", None)
        else:
            os.environ["BFK_ORDER_BOUND"] = saved
    report = _clean(report)
    if a.json:
        print(json.dumps(report, indent=1))
    else:
        print("\n".join(_text(report)))
    return 0 if report.get("pass") else 1


if __name__ == "__main__":
    sys.exit(main())
