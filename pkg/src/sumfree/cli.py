"""Command-line orchestration: analyze | extract | verify | phi | lp |
oracle | report.

Reports are JSON with the full configuration echoed back, exact rationals as
[numerator, denominator] pairs, and floats only where an error bar travels
with them.  Exit codes: 0 success, 1 invariant violation, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import __version__
from .arith import SieveContext, next_prime_at_least
from .dilation import extract_certified
from .lp import lacunary_l1_diagnostic
from .mps import build_phi
from .oracle import compare
from .sets import IntegerSet, ParseError, generate, load_set, structure
from .sieve import IDENTITY_IDS, l1_lower_report, verify_identity


class MissingStageError(KeyError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    format: str = "lines"
    k: int = 2
    l: int = 1
    q: int = 5
    p: int | None = None
    cutoff: int = 2000
    grid: int = 1 << 17
    base: int = 100
    size: int = 10101
    weights: str = "unit"
    threshold_exp: float = 0.5
    seed: int = 0
    sizes: tuple[int, ...] = ()
    kind: str | None = None
    out: str | None = None


def _load_input(config: RunConfig) -> IntegerSet:
    if config.input is None:
        raise ParseError("an input set is required (--input)")
    if config.input == "-":
        return load_set(sys.stdin.read(), config.format)
    with open(config.input, "rb") as fh:
        return load_set(fh.read(), config.format)


def _context(config: RunConfig, N: int) -> SieveContext:
    P = config.p if config.p is not None else next_prime_at_least(max(N * N, 2))
    return SieveContext(Q=config.q, P=P)


def _frac(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def _structure_stage(A: IntegerSet, config: RunConfig) -> dict:
    rep = structure(A, Fraction(config.threshold_exp).limit_denominator(1000))
    return {
        "N": A.N,
        "symdiff_size": len(rep.symdiff),
        "symdiff": list(rep.symdiff),
        "cover_size": len(rep.cover_indices),
        "lacunary_exponent": rep.lacunary_exponent,
        "geometric": rep.geometric,
    }


def _extract_stage(A: IntegerSet, config: RunConfig) -> dict:
    rep = structure(A, Fraction(config.threshold_exp).limit_denominator(1000))
    cert = extract_certified(
        A, config.k, config.l, include_lacunary_route=rep.geometric
    )
    return {
        "certificate": cert.to_json(),
        "count": cert.count,
        "baseline": _frac(Fraction(A.N, config.k + config.l)),
        "route": "lacunary" if rep.geometric else "balanced-arcs",
    }


def _verify_stage(A: IntegerSet, config: RunConfig) -> dict:
    ctx = _context(config, A.N)
    results = [
        verify_identity(iid, A, ctx, config.cutoff) for iid in IDENTITY_IDS
    ]
    return {"identities": results, "all_equal": all(r["equal"] for r in results)}


def _phi_stage(config: RunConfig) -> dict:
    B = generate("interval", n=config.size)
    if config.weights == "unit":
        w = {m: 1.0 for m in B}
    else:
        import numpy as np

        rng = np.random.default_rng(config.seed)
        w = {m: complex(np.exp(2j * math.pi * rng.random())) for m in B}
    _, cert = build_phi(B, w, config.base, config.grid)
    return {"certificate": cert.to_json(), "weights": config.weights}


def _lp_stage(config: RunConfig) -> dict:
    sizes = config.sizes or (16, 32, 64)
    family = [
        IntegerSet.of([3**j for j in range(n)]) for n in sizes
    ]
    return lacunary_l1_diagnostic(family, seed=config.seed)


def _oracle_stage(A: IntegerSet, config: RunConfig) -> dict:
    return compare(A, config.k, config.l)


def _l1_growth_stage(config: RunConfig) -> list[dict]:
    rows = []
    sizes = config.sizes or (30, 100, 300)
    for N in sizes:
        A = generate("interval", n=N)
        rep = l1_lower_report(A, _context(config, N))
        best = Fraction(*rep["max_l1_GL"])
        target = math.log(N) / math.log(math.log(N)) if N > 3 else float("nan")
        rows.append(
            {
                "N": N,
                "G_l1": float(Fraction(*rep["l1"]["G"])),
                "L_l1": float(Fraction(*rep["l1"]["L"])),
                "max_l1": float(best),
                "target": target,
                "ratio": float(best) / target,
            }
        )
    return rows


def _surplus_stage(config: RunConfig) -> list[dict]:
    rows = []
    sizes = config.sizes or (30, 60, 120, 240)
    for N in sizes:
        A = generate("interval", n=N)
        cert = extract_certified(A, config.k, config.l)
        rows.append(
            {
                "N": N,
                "count": cert.count,
                "surplus": float(cert.surplus),
            }
        )
    return rows


def _phi_profile_stage(config: RunConfig, points: int = 2048) -> list[dict]:
    import numpy as np
    from .mps import _sample

    B = generate("interval", n=config.size)
    coeffs, _ = build_phi(B, {m: 1.0 for m in B}, config.base, config.grid)
    samples = _sample(coeffs, config.grid)
    step = max(1, config.grid // points)
    return [
        {"x": j / config.grid, "abs_phi": float(abs(samples[j]))}
        for j in range(0, config.grid, step)
    ]


def run(config: RunConfig) -> dict:
    """Dispatch one subcommand and assemble the report."""
    t0 = time.perf_counter()
    stages: dict = {}
    if config.command == "analyze":
        stages["structure"] = _structure_stage(_load_input(config), config)
    elif config.command == "extract":
        A = _load_input(config)
        stages["structure"] = _structure_stage(A, config)
        stages["extraction"] = _extract_stage(A, config)
    elif config.command == "verify":
        stages["verify"] = _verify_stage(_load_input(config), config)
    elif config.command == "phi":
        stages["phi"] = _phi_stage(config)
    elif config.command == "lp":
        stages["lp"] = _lp_stage(config)
    elif config.command == "oracle":
        stages["oracle"] = _oracle_stage(_load_input(config), config)
    elif config.command == "report":
        if config.kind == "l1_growth":
            stages["l1_growth"] = _l1_growth_stage(config)
        elif config.kind == "surplus_vs_N":
            stages["surplus_vs_N"] = _surplus_stage(config)
        elif config.kind == "phi_profile":
            stages["phi_profile"] = _phi_profile_stage(config)
        else:
            raise ParseError(f"unknown report kind {config.kind!r}")
    else:
        raise ParseError(f"unknown command {config.command!r}")
    return {
        "config": asdict(config),
        "stages": stages,
        "timings": {"total_s": time.perf_counter() - t0},
        "version": __version__,
    }


def emit_plotdata(report: dict, kind: str) -> str:
    """Headered CSV for a stage of a finished report."""
    stage = report.get("stages", {}).get(kind)
    if stage is None:
        raise MissingStageError(kind)
    if isinstance(stage, dict) and "rows" in stage:
        rows = stage["rows"]
    else:
        rows = stage
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sumfree",
        description="certified sum-free subset extraction and the exact "
        "Fourier/sieve toolkit behind it",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("analyze", "extract", "verify", "phi", "lp", "oracle", "report"):
        sp = sub.add_parser(name)
        sp.add_argument("--input", help="set file, or - for stdin")
        sp.add_argument("--format", choices=("lines", "json"), default="lines")
        sp.add_argument("--k", type=int, default=2)
        sp.add_argument("--l", type=int, default=1)
        sp.add_argument("--q", type=int, default=5)
        sp.add_argument("--p", type=int, default=None)
        sp.add_argument("--cutoff", type=int, default=2000)
        sp.add_argument("--grid", type=int, default=1 << 17)
        sp.add_argument("--base", type=int, default=100)
        sp.add_argument("--size", type=int, default=10101)
        sp.add_argument("--weights", choices=("unit", "random"), default="unit")
        sp.add_argument("--threshold-exp", type=float, default=0.5)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--sizes", type=str, default="")
        sp.add_argument(
            "--kind",
            choices=("l1_growth", "surplus_vs_N", "phi_profile"),
            default=None,
        )
        sp.add_argument("--out", default=None)
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    sizes = tuple(int(s) for s in args.sizes.split(",") if s) if args.sizes else ()
    config = RunConfig(
        command=args.command,
        input=args.input,
        format=args.format,
        k=args.k,
        l=args.l,
        q=args.q,
        p=args.p,
        cutoff=args.cutoff,
        grid=args.grid,
        base=args.base,
        size=args.size,
        weights=args.weights,
        threshold_exp=args.threshold_exp,
        seed=args.seed,
        sizes=sizes,
        kind=args.kind,
        out=args.out,
    )
    try:
        report = run(config)
    except (ParseError, FileNotFoundError, MissingStageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # invariant violations from the pipeline
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    if config.command == "verify" and not report["stages"]["verify"]["all_equal"]:
        print("identity verification failed", file=sys.stderr)
        return 1
    if config.command == "report" and config.kind:
        payload = emit_plotdata(report, config.kind)
    else:
        payload = json.dumps(report, indent=2, default=str)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(payload)
    else:
        print(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
