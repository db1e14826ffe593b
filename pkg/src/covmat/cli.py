"""Command-line front end.

Subcommands:
  analyze  run every applicable criterion and bound on one state
  sweep    CSV of bounds/criteria along a two-state mixing family
  bench    detection-rate table over a seeded random ensemble

Output goes to stdout, diagnostics to stderr.  Exit codes: 0 ran,
2 at least one ENTANGLED verdict (analyze only), 1 error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time

import numpy as np

from . import concurrence as conc
from . import criteria as crit
from .criteria import CriterionVerdict, MultipartiteReport
from .linalg import DensityMatrix, partial_trace, partial_transpose, min_eigenvalue, realign, trace_norm
from .states import build_state, load_state, mix, random_pure, random_separable

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ENTANGLED = 2


@dataclasses.dataclass
class AnalysisReport:
    """Everything `analyze` computed for one state."""

    state_description: str
    dims: list[int]
    purities: list[float]
    verdicts: list[CriterionVerdict]
    multipartite: MultipartiteReport | None
    bounds: conc.ConcurrenceBounds | None
    timing_ms: dict[str, float]

    def any_entangled(self) -> bool:
        found = any(v.conclusion == crit.ENTANGLED for v in self.verdicts)
        if self.multipartite is not None:
            for pair in self.multipartite.pair_verdicts.values():
                found = found or any(v.conclusion == crit.ENTANGLED for v in pair.values())
        return found

    def to_dict(self) -> dict:
        d = {
            "state_description": self.state_description,
            "dims": self.dims,
            "purities": self.purities,
            "verdicts": [dataclasses.asdict(v) for v in self.verdicts],
            "multipartite": None,
            "bounds": dataclasses.asdict(self.bounds) if self.bounds else None,
            "timing_ms": self.timing_ms,
        }
        if self.multipartite is not None:
            d["multipartite"] = {
                "pair_verdicts": {
                    f"{i},{j}": {k: dataclasses.asdict(v) for k, v in pv.items()}
                    for (i, j), pv in self.multipartite.pair_verdicts.items()
                },
                "full_sep_refuted": self.multipartite.full_sep_refuted,
                "bisep_refuted": self.multipartite.bisep_refuted,
                "fully_entangled": self.multipartite.fully_entangled,
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        multi = None
        if d.get("multipartite") is not None:
            m = d["multipartite"]
            pv = {}
            for key, pair in m["pair_verdicts"].items():
                i, j = (int(p) for p in key.split(","))
                pv[(i, j)] = {k: CriterionVerdict(**v) for k, v in pair.items()}
            multi = MultipartiteReport(
                pair_verdicts=pv,
                full_sep_refuted=m["full_sep_refuted"],
                bisep_refuted=m["bisep_refuted"],
                fully_entangled=m["fully_entangled"],
            )
        bounds = conc.ConcurrenceBounds(**d["bounds"]) if d.get("bounds") else None
        return cls(
            state_description=d["state_description"],
            dims=list(d["dims"]),
            purities=list(d["purities"]),
            verdicts=[CriterionVerdict(**v) for v in d["verdicts"]],
            multipartite=multi,
            bounds=bounds,
            timing_ms=d["timing_ms"],
        )


def fmt(x: float) -> str:
    """Locale-independent, 12 significant digits."""
    return f"{x:.12g}"


def _resolve_state(args) -> tuple[DensityMatrix, str]:
    if getattr(args, "file", None):
        return load_state(args.file), f"file:{args.file}"
    if getattr(args, "state", None):
        return build_state(args.state), args.state
    raise ValueError("no state given; use --state or --file")


def analyze_state(rho: DensityMatrix, description: str, tol: float) -> AnalysisReport:
    timing: dict[str, float] = {}
    t0 = time.perf_counter()
    purities = [partial_trace(rho, (k,)).purity() for k in range(rho.n_parties)]
    timing["purities"] = (time.perf_counter() - t0) * 1000

    verdicts: list[CriterionVerdict] = []
    multi = None
    bounds = None
    if rho.n_parties == 2:
        t0 = time.perf_counter()
        verdicts = [
            crit.kf_criterion(rho, tol),
            crit.hs_criterion(rho, tol),
            crit.ppt_criterion(rho, tol),
            crit.ccnr_criterion(rho, tol),
        ]
        timing["criteria"] = (time.perf_counter() - t0) * 1000
        t0 = time.perf_counter()
        bounds = conc.all_bounds(rho)
        timing["bounds"] = (time.perf_counter() - t0) * 1000
    else:
        t0 = time.perf_counter()
        multi = crit.multipartite_full_sep(rho, tol)
        timing["criteria"] = (time.perf_counter() - t0) * 1000
    return AnalysisReport(
        state_description=description,
        dims=list(rho.dims),
        purities=purities,
        verdicts=verdicts,
        multipartite=multi,
        bounds=bounds,
        timing_ms=timing,
    )


def _print_text_report(rep: AnalysisReport, out) -> None:
    print(f"state: {rep.state_description}", file=out)
    print(f"dims:  {'x'.join(str(d) for d in rep.dims)}", file=out)
    for k, p in enumerate(rep.purities):
        print(f"purity[{k}]: {fmt(p)}", file=out)
    if rep.verdicts:
        print("criteria:", file=out)
        for v in rep.verdicts:
            print(f"  {v.name:5s} lhs={fmt(v.lhs)} rhs={fmt(v.rhs)} "
                  f"margin={fmt(v.margin)} -> {v.conclusion}", file=out)
    if rep.multipartite is not None:
        m = rep.multipartite
        print("pairwise criteria:", file=out)
        for (i, j), pair in sorted(m.pair_verdicts.items()):
            for k, v in pair.items():
                print(f"  ({i},{j}) {k:2s} lhs={fmt(v.lhs)} rhs={fmt(v.rhs)} "
                      f"-> {v.conclusion}", file=out)
        print(f"full separability refuted: {m.full_sep_refuted}", file=out)
        print(f"fully entangled (two violations in one family): {m.fully_entangled}", file=out)
    if rep.bounds is not None:
        b = rep.bounds
        print("concurrence lower bounds:", file=out)
        print(f"  ccnr/ppt:  {fmt(b.bound_ccnr_ppt)}", file=out)
        print(f"  variance:  {fmt(b.bound_lur)}", file=out)
        print(f"  optimized: {fmt(b.bound_optimized)}", file=out)
        print(f"  best:      {fmt(b.best)}", file=out)


def cmd_analyze(args) -> int:
    rho, description = _resolve_state(args)
    rep = analyze_state(rho, description, args.tolerance)
    if args.format == "json":
        print(json.dumps(rep.to_dict()))
    else:
        _print_text_report(rep, sys.stdout)
    return EXIT_ENTANGLED if rep.any_entangled() else EXIT_OK


def _parse_grid(text: str) -> np.ndarray:
    try:
        a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise ValueError(f"bad grid {text!r}, expected start:stop:steps") from None
    if n < 1:
        raise ValueError("grid needs at least one point")
    return np.linspace(a, b, n)


SWEEP_COLUMNS = ("x", "bound10", "bound11", "bound12", "kf_margin",
                 "hs_margin", "ppt_min_eig", "ccnr_norm")


def sweep_rows(base: DensityMatrix, target: DensityMatrix, grid: np.ndarray,
               tol: float = crit.DECISION_TOL):
    for x in grid:
        rho = mix(base, target, float(x))
        yield (
            float(x),
            conc.bound_ccnr_ppt(rho),
            conc.bound_lur(rho),
            conc.bound_optimized(rho),
            crit.kf_criterion(rho, tol).margin,
            crit.hs_criterion(rho, tol).margin,
            min_eigenvalue(partial_transpose(rho, 0)),
            trace_norm(realign(rho)),
        )


def cmd_sweep(args) -> int:
    base = build_state(args.base)
    target = build_state(args.target)
    grid = _parse_grid(args.grid)
    if base.dims != target.dims:
        raise ValueError(f"incompatible dims {base.dims} vs {target.dims}")
    print(",".join(SWEEP_COLUMNS))
    for row in sweep_rows(base, target, grid, args.tolerance):
        print(",".join(fmt(v) for v in row))
    return EXIT_OK


def bench_counts(kind: str, dims, count: int, terms: int, seed: int,
                 tol: float = crit.DECISION_TOL) -> dict[str, int]:
    """Detection counts per criterion over a seeded ensemble."""
    counts = {"kf": 0, "hs": 0, "ppt": 0, "ccnr": 0, "states": count}
    rng = np.random.default_rng(seed)
    for _ in range(count):
        sub = int(rng.integers(0, 2 ** 63))
        if kind == "separable":
            rho = random_separable(dims, terms, sub)
        elif kind == "pure":
            rho = random_pure(dims, sub)
        else:
            raise ValueError(f"unknown ensemble kind {kind!r}")
        if len(dims) == 2:
            for name, fn in (("kf", crit.kf_criterion), ("hs", crit.hs_criterion),
                             ("ppt", crit.ppt_criterion), ("ccnr", crit.ccnr_criterion)):
                if fn(rho, tol).conclusion == crit.ENTANGLED:
                    counts[name] += 1
        else:
            rep = crit.multipartite_full_sep(rho, tol)
            counts.setdefault("pairwise", 0)
            if rep.full_sep_refuted:
                counts["pairwise"] += 1
    return counts


def cmd_bench(args) -> int:
    dims = tuple(int(p) for p in args.dims.split("x"))
    counts = bench_counts(args.kind, dims, args.count, args.terms, args.seed,
                          args.tolerance)
    if args.format == "json":
        print(json.dumps(counts))
    else:
        for name, c in counts.items():
            print(f"{name}: {c}")
    return EXIT_OK


def _default_seed() -> int:
    return int(os.environ.get("COVMAT_SEED", "0"))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="covmat",
                                description="Covariance-matrix entanglement criteria "
                                            "and concurrence lower bounds")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--tolerance", type=float, default=crit.DECISION_TOL,
                        help="decision tolerance for strict inequalities")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    a = sub.add_parser("analyze", help="run criteria and bounds on one state")
    a.add_argument("--state", help="state spec, e.g. bennett3x3, mes:3, isotropic:3:0.5")
    a.add_argument("--file", help="JSON state file")
    common(a)
    a.set_defaults(fn=cmd_analyze)

    s = sub.add_parser("sweep", help="CSV sweep of (1-x)*base + x*target")
    s.add_argument("--base", default="bennett3x3")
    s.add_argument("--target", default="mes:3")
    s.add_argument("--grid", default="0:1:101", help="start:stop:steps")
    common(s)
    s.set_defaults(fn=cmd_sweep)

    b = sub.add_parser("bench", help="detection rates over a random ensemble")
    b.add_argument("--kind", choices=("separable", "pure"), default="separable")
    b.add_argument("--dims", default="3x3")
    b.add_argument("--count", type=int, default=1000)
    b.add_argument("--terms", type=int, default=5)
    b.add_argument("--seed", type=int, default=None)
    common(b)
    b.set_defaults(fn=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", None) is None:
        args.seed = _default_seed()
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
