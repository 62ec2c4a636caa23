"""Survey of R_K(G)/im(kappa) across the catalog: F_2-dimension, Q8-subquotient test, tensor identity."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from bfk.catalog import catalog, construct_named
from bfk.kappa import cokernel, sylow2_has_q8


@dataclass
class SurveyConfig:
    max_order: int = 48
    kinds: tuple[str, ...] = ("two", "odd", "mixed")
    prime: int = 2
    out: str | None = None


@dataclass
class SurveyRow:
    group: str
    order: int
    irr: int
    f2_dim: int | None
    invariant_factors: list[int] = field(default_factory=list)
    sylow2_has_q8: bool = False
    seconds: float = 0.0


def survey(cfg: SurveyConfig) -> list[SurveyRow]:
    rows = []
    for spec in catalog(cfg.max_order, cfg.kinds):
        t = time.perf_counter()
        G = construct_named(spec)
        C = cokernel(G, cfg.prime)
        rows.append(SurveyRow(spec, G.order, C.R_K.ambient_rank, C.f2_dim,
                              [d for d in C.structure.invariant_factors if d != 1],
                              sylow2_has_q8(G), round(time.perf_counter() - t, 3)))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=SurveyConfig.max_order)
    ap.add_argument("--prime", type=int, default=SurveyConfig.prime)
    ap.add_argument("--out")
    a = ap.parse_args()
    cfg = SurveyConfig(max_order=a.max_order, prime=a.prime, out=a.out)
    rows = survey(cfg)
    print(f"{'group':<12}{'|G|':>5}{'|Irr|':>7}{'dim':>5}  q8   sec")
    for r in rows:
        print(f"{r.group:<12}{r.order:>5}{r.irr:>7}{str(r.f2_dim):>5}  {'y' if r.sylow2_has_q8 else '-':<4}{r.seconds:>6.2f}")
    # nonzero cokernel forces a Q8 subquotient in the Sylow 2-subgroup
    bad = [r.group for r in rows if r.f2_dim and not r.sylow2_has_q8]
    print(f"nonzero cokernel without Q8 subquotient: {bad or 'none'}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, fh, indent=1)


if __name__ == "__main__":
    main()
