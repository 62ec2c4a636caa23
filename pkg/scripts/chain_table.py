"""Table of dim F_n(G) for n = 3, 4, 5 next to the cokernel dimension, in either evaluation mode."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from bfk.catalog import construct_named
from bfk.kappa import EXACT_MODE_BOUND, F_n_eval, cokernel

DEFAULT_GROUPS = ("Q8", "Q16", "Q32", "C2xQ8", "C2xQ16", "C3xQ8", "C3xQ16", "C5xQ8", "SL23",
                  "C2xSL23", "Q8xS3", "D16", "SD16", "S4")


@dataclass
class ChainConfig:
    groups: tuple[str, ...] = DEFAULT_GROUPS
    ns: tuple[int, ...] = (3, 4, 5)
    compare_exact: bool = False


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*")
    ap.add_argument("--compare-exact", action="store_true",
                    help="also run exact mode where the product group fits the bound")
    a = ap.parse_args()
    cfg = ChainConfig(groups=tuple(a.groups) or DEFAULT_GROUPS, compare_exact=a.compare_exact)
    head = "".join(f"{'F' + str(n):>5}" for n in cfg.ns)
    print(f"{'group':<10}{'coker':>6}{head}  exact")
    for spec in cfg.groups:
        G = construct_named(spec)
        dims = [F_n_eval(G, n).dim for n in cfg.ns]
        tag = ""
        if cfg.compare_exact:
            runs = [n for n in cfg.ns if G.order * 2**n <= EXACT_MODE_BOUND]
            agree = all(F_n_eval(G, n, "exact") == F_n_eval(G, n, "sections") for n in runs)
            tag = f"{'agree' if agree else 'DISAGREE'} on n={runs}" if runs else "out of range"
        print(f"{spec:<10}{str(cokernel(G).f2_dim):>6}" + "".join(f"{d:>5}" for d in dims) + f"  {tag}")


if __name__ == "__main__":
    main()
