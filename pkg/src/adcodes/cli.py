"""Command-line surface for code construction, verification and simulation.

Exit codes: 0 success / pass, 1 domain failure (failed verification, invalid
code, residual out of bounds), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .concat import concatenate, dual_rail, theorem1_params
from .database import get_code, list_codes
from .oracle import erasure_lemma_check, fidelity_experiment
from .stabilizer import (
    CodeFileError,
    CodeParams,
    ResourceBudgetError,
    StabilizerCode,
    code_to_json,
    distance,
    distance_str,
    format_code_file,
    parse_code_file,
    validate,
)
from .tables import build_rows, format_rows
from .verify import VerifyConfig, verify_t_code

PASS, FAIL, USAGE = 0, 1, 2


def _load_code(spec: str) -> StabilizerCode:
    """Resolve a database name or a code file path."""
    if spec in list_codes():
        return get_code(spec)
    path = Path(spec)
    if not path.exists():
        raise FileNotFoundError(
            f"{spec!r} is neither a built-in code ({', '.join(list_codes())}) "
            "nor an existing file"
        )
    return parse_code_file(path.read_text())


def cmd_validate(args) -> int:
    code = _load_code(args.code)
    report = validate(code)
    if report:
        print(f"{code}: pass")
        return PASS
    print(f"{code}: FAIL [{report.rule}] {report.message}")
    return FAIL


def cmd_concat(args) -> int:
    outer = _load_code(args.outer)
    result = concatenate(outer, dual_rail())
    text = format_code_file(result)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {result} to {args.out}")
    else:
        sys.stdout.write(text)
    if args.params and args.d is not None:
        p = theorem1_params(CodeParams(n=outer.n, k=outer.k, d=args.d))
        print(f"parameters: [[{p.n},{p.k}]] correcting t={p.t} damping errors")
    return PASS


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    config = VerifyConfig(budget=args.budget, jobs=args.jobs)
    report = verify_t_code(code, args.t, config)
    print(report.to_text())
    if args.json:
        Path(args.json).write_text(report.to_json())
        print(f"wrote JSON report to {args.json}")
    return PASS if report.passed else FAIL


def cmd_distance(args) -> int:
    code = _load_code(args.code)
    d = distance(code, args.w_max, budget=args.budget)
    print(f"{code}: distance {distance_str(d, args.w_max)}")
    return PASS


def cmd_tables(args) -> int:
    config = VerifyConfig(budget=args.budget, jobs=args.jobs)
    rows, _ = build_rows(k=args.k, t=args.t, certify=not args.no_certify, config=config)
    print(format_rows(rows))
    payload = [r.to_json_dict() for r in rows]
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote JSON table to {args.json}")
    if args.csv:
        lines = ["n,k,t,source,outer_code,paper_n,certified"]
        lines += [
            f"{r.n},{r.k},{r.t},{r.source},{r.outer_code},{r.paper_n},{str(r.certified).lower()}"
            for r in rows
        ]
        Path(args.csv).write_text("\n".join(lines) + "\n")
        print(f"wrote CSV table to {args.csv}")
    return PASS


def cmd_channel(args) -> int:
    rng = np.random.default_rng(args.seed)
    nq = 2 if args.lemma == "dualrail" else 3
    idx = [1, 2] if args.lemma == "dualrail" else [1, 2, 4]
    worst = 0.0
    for _ in range(args.trials):
        amp = rng.standard_normal(len(idx)) + 1j * rng.standard_normal(len(idx))
        amp /= np.linalg.norm(amp)
        psi = np.zeros(1 << nq, dtype=complex)
        psi[idx] = amp
        rho = np.outer(psi, psi.conj())
        worst = max(worst, erasure_lemma_check(args.gamma, rho, args.lemma))
    ok = worst <= 1e-12
    print(
        f"erasure lemma [{args.lemma}] gamma={args.gamma}: "
        f"max residual {worst:.3e} over {args.trials} random code states "
        f"({'pass' if ok else 'FAIL'})"
    )
    return PASS if ok else FAIL


def cmd_fidelity(args) -> int:
    code = _load_code(args.code)
    gammas = args.gammas if args.gammas else None
    result = fidelity_experiment(code, args.t, gammas=gammas)
    print(f"{code}: t={args.t}")
    for g, v in zip(result.gammas, result.infidelities):
        print(f"  gamma={g:.6g}  1-F={v:.6e}")
    print(f"fitted exponent {result.fitted_exponent:.4f} (residual {result.fit_residual:.2e})")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = (code.name or "code").replace("/", "_")
        csv_path = out / f"fidelity_{stem}.csv"
        csv_lines = ["gamma,infidelity"] + [
            f"{g:.12g},{v:.12e}" for g, v in zip(result.gammas, result.infidelities)
        ]
        csv_path.write_text("\n".join(csv_lines) + "\n")
        summary = {
            "code": code.name,
            "n": code.n,
            "k": code.k,
            "t": args.t,
            "exponent": result.fitted_exponent,
            "residual": result.fit_residual,
            "gammas": list(result.gammas),
            "infidelities": list(result.infidelities),
        }
        json_path = out / f"fidelity_{stem}.json"
        json_path.write_text(json.dumps(summary, indent=2) + "\n")
        from .plots import render_fidelity_figure

        fig_path = out / f"fidelity_{stem}.png"
        render_fidelity_figure(result, fig_path, title=str(code))
        print(f"wrote {csv_path}, {json_path}, {fig_path}")
    return PASS


def cmd_export_json(args) -> int:
    code = _load_code(args.code)
    text = json.dumps(code_to_json(code), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return PASS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="adcodes",
        description="Construct and verify multi-error-correcting amplitude-damping codes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check stabilizer-code invariants")
    p.add_argument("code", help="database name or code file path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("concat", help="concatenate an outer code with the dual-rail inner code")
    p.add_argument("outer", help="outer code: database name or file path")
    p.add_argument("--inner", choices=["dualrail"], default="dualrail")
    p.add_argument("--out", help="output code file path (default: stdout)")
    p.add_argument("--params", action="store_true", help="also print the [[2m,k]] t parameters")
    p.add_argument("--d", type=int, help="outer code distance for --params")
    p.set_defaults(func=cmd_concat)

    p = sub.add_parser("verify", help="verify the damping t-code detection conditions")
    p.add_argument("code")
    p.add_argument("--t", type=int, required=True, help="number of damping errors to correct")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--json", help="write the canonical JSON report here")
    p.add_argument("--budget", type=int, default=10**9, help="work-unit cap for the run")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", help="brute-force minimum distance search")
    p.add_argument("code")
    p.add_argument("--w-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=5_000_000)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("tables", help="reproduce the published t-code comparison table")
    p.add_argument("--k", type=int, help="restrict to one logical-qubit count")
    p.add_argument("--t", type=int, help="restrict to one damping order")
    p.add_argument("--no-certify", action="store_true", help="skip verifier certification")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=10**9)
    p.add_argument("--json", help="write rows as JSON here")
    p.add_argument("--csv", help="write rows as CSV here")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("channel", help="check the two-uses-simulate-erasure identity")
    p.add_argument("--lemma", choices=["dualrail", "qutrit3"], default="dualrail")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_channel)

    p = sub.add_parser("fidelity", help="entanglement-fidelity scaling experiment")
    p.add_argument("--code", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--gammas", type=float, nargs="+", help="damping rates (default log grid 1e-3..1e-2)")
    p.add_argument("--out-dir", help="write CSV, JSON summary and figure here")
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("export-json", help="emit a code in the JSON mirror format")
    p.add_argument("code")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_json)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except CodeFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE
    except (FileNotFoundError, KeyError) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return USAGE
    except ResourceBudgetError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return FAIL
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
