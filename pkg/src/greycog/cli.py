"""Command line front end.

Subcommands:

    simulate   run a model file, write the trajectory CSV
    check      print the convergence report as JSON
    sweep      run several lambdas, write per-run files plus a summary CSV
    corpus     export a built-in benchmark variant as a model file

Exit codes: 0 success, 2 usage or parse failure, 3 model or parameter
validation failure, 4 criterion structurally inapplicable (mixed-sign
interval weight).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from pathlib import Path

from . import _modelio, convergence, corpus
from .cogmap import Model, simulate
from .dynamics import Classification, classify
from .errors import (
    GreycogError,
    InsufficientDataError,
    MalformedInputError,
    MixedSignWeightError,
)

__all__ = ["entrypoint", "main"]

_FIELDS = {
    "fcm": ("value",),
    "fgcm": ("lo", "hi"),
    "fggcm": ("kernel", "greyness"),
}


def _cell_values(family, cell):
    if family == "fcm":
        return (cell,)
    if family == "fgcm":
        return (cell.lo, cell.hi)
    return (cell.kernel, cell.greyness)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greycog",
        description="Cognitive map engines over crisp, interval, and "
                    "kernel/greyness grey numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a model and write its trajectory CSV")
    p.add_argument("--model", required=True, help="model file (JSON)")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="override the model file steepness")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--out", required=True, help="trajectory CSV path")

    p = sub.add_parser("check", help="print the convergence report as JSON")
    p.add_argument("--model", required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--eps", type=float, default=1e-8)
    p.add_argument("--max-period", type=int, default=50)

    p = sub.add_parser("sweep", help="run several lambdas and summarize")
    p.add_argument("--model", required=True)
    p.add_argument("--lambdas", required=True,
                   help="comma-separated steepness values, e.g. 0.5,1,2,4")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--eps", type=float, default=1e-8)
    p.add_argument("--max-period", type=int, default=50)
    p.add_argument("--out-dir", required=True)

    p = sub.add_parser("corpus", help="export a built-in benchmark variant")
    p.add_argument("variant", help="variant id, e.g. web_fcm")
    p.add_argument("--out", required=True, help="model file path to write")

    return parser


def _usage_error(message: str) -> int:
    print(f"greycog: error: {message}", file=sys.stderr)
    return 2


def _load(args) -> Model:
    m = _modelio.load_model(args.model)
    if args.lam is not None:
        m = dataclasses.replace(m, lam=args.lam)
    return m


def _write_trajectory(path, model: Model, traj) -> None:
    fields = _FIELDS[model.family]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "node", "field", "value"])
        for t, state in enumerate(traj.states):
            for name, cell in zip(model.node_names, state):
                for field, value in zip(fields, _cell_values(model.family, cell)):
                    writer.writerow([t, name, field, repr(float(value))])


def _classification_dict(cls: Classification) -> dict:
    return {
        "verdict": cls.verdict,
        "t_alpha": cls.t_alpha,
        "period": cls.period,
        "epsilon": cls.epsilon,
        "max_period": cls.max_period,
    }


def _verdict_dict(v: convergence.Verdict) -> dict:
    return {
        "criterion": v.criterion_value,
        "criterion_display": f"{v.criterion_value:.4f}",
        "threshold": v.threshold,
        "outcome": v.outcome,
    }


def _report(model: Model, model_label: str, steps: int, eps: float,
            max_period: int) -> tuple[dict, Classification]:
    traj = simulate(model, steps, model_id=model_label)
    cls = classify(traj, epsilon=eps, max_period=max_period)
    report = {
        "model": model_label,
        "family": model.family,
        "lambda": model.lam,
        "classification": _classification_dict(cls),
    }
    if model.family == "fcm":
        report.update(_verdict_dict(convergence.check_fcm(model.weights, model.lam)))
    elif model.family == "fgcm":
        report.update(_verdict_dict(convergence.check_fgcm(model.weights, model.lam)))
    else:
        full = convergence.check_fggcm(model, traj, cls)
        report["kernel"] = _verdict_dict(full.kernel_verdict)
        report["greyness"] = _verdict_dict(full.greyness_verdict)
        report["evaluation_state"] = {
            "kernels": [g.kernel for g in full.evaluation_state],
            "greyness": [g.greyness for g in full.evaluation_state],
            "kernel_converged": full.kernel_converged,
        }
        report["overall"] = full.overall
    return report, cls


def _cmd_simulate(args) -> int:
    if args.steps < 1:
        return _usage_error(f"--steps must be >= 1, got {args.steps}")
    if args.lam is not None and not args.lam > 0.0:
        return _usage_error(f"--lambda must be > 0, got {args.lam}")
    model = _load(args)
    traj = simulate(model, args.steps, model_id=Path(args.model).stem)
    _write_trajectory(args.out, model, traj)
    return 0


def _cmd_check(args) -> int:
    if args.steps < 1:
        return _usage_error(f"--steps must be >= 1, got {args.steps}")
    if args.lam is not None and not args.lam > 0.0:
        return _usage_error(f"--lambda must be > 0, got {args.lam}")
    if not args.eps > 0.0:
        return _usage_error(f"--eps must be > 0, got {args.eps}")
    if args.max_period < 2:
        return _usage_error(f"--max-period must be >= 2, got {args.max_period}")
    model = _load(args)
    label = Path(args.model).stem
    try:
        report, _ = _report(model, label, args.steps, args.eps, args.max_period)
    except MixedSignWeightError as exc:
        print(json.dumps({
            "error": "MixedSignWeight",
            "i": exc.i,
            "j": exc.j,
            "message": str(exc),
            "hint": "the interval criterion cannot rank a weight straddling "
                    "zero; model it as kernel/greyness (fggcm) instead",
        }, indent=2))
        return 4
    print(json.dumps(report, indent=2))
    return 0


def _cmd_sweep(args) -> int:
    if args.steps < 1:
        return _usage_error(f"--steps must be >= 1, got {args.steps}")
    if not args.eps > 0.0:
        return _usage_error(f"--eps must be > 0, got {args.eps}")
    if args.max_period < 2:
        return _usage_error(f"--max-period must be >= 2, got {args.max_period}")
    raw = [s for s in args.lambdas.split(",") if s.strip()]
    if not raw:
        return _usage_error("--lambdas must list at least one value")
    try:
        lams = [float(s) for s in raw]
    except ValueError:
        return _usage_error(f"--lambdas contains a non-number: {args.lambdas!r}")
    if any(not lam > 0.0 for lam in lams):
        return _usage_error("every lambda must be > 0")

    base = _modelio.load_model(args.model)
    label = Path(args.model).stem
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    worst = 0
    rows = []
    for lam in lams:
        model = dataclasses.replace(base, lam=lam)
        tag = f"{lam:g}"
        try:
            traj = simulate(model, args.steps, model_id=f"{label}@{tag}")
            cls = classify(traj, epsilon=args.eps, max_period=args.max_period)
            report, _ = _report(model, label, args.steps, args.eps, args.max_period)
        except MixedSignWeightError as exc:
            rows.append([tag, "", "", f"error(MixedSignWeight {exc.i},{exc.j})", ""])
            worst = max(worst, 4)
            continue
        except GreycogError as exc:
            rows.append([tag, "", "", f"error({type(exc).__name__})", ""])
            worst = max(worst, 3)
            continue
        _write_trajectory(out_dir / f"trajectory_lam{tag}.csv", model, traj)
        with open(out_dir / f"report_lam{tag}.json", "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
        if model.family == "fggcm":
            kernel_crit = report["kernel"]["criterion"]
            grey_crit = report["greyness"]["criterion"]
        else:
            kernel_crit = report["criterion"]
            grey_crit = ""
        rows.append([
            tag,
            repr(float(kernel_crit)),
            repr(float(grey_crit)) if grey_crit != "" else "",
            cls.verdict,
            cls.period if cls.period is not None else "",
        ])
    with open(out_dir / "summary.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "lambda", "criterion_kernel", "criterion_greyness",
            "classification", "period",
        ])
        writer.writerows(rows)
    return worst


def _cmd_corpus(args) -> int:
    if args.variant not in corpus.VARIANTS:
        valid = ", ".join(sorted(corpus.VARIANTS))
        return _usage_error(f"unknown variant {args.variant!r}; valid ids: {valid}")
    doc = corpus.export_variant(args.variant)
    _modelio.save_doc(doc, args.out)
    return 0


_HANDLERS = {
    "simulate": _cmd_simulate,
    "check": _cmd_check,
    "sweep": _cmd_sweep,
    "corpus": _cmd_corpus,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except MalformedInputError as exc:
        print(f"greycog: parse error: {exc}", file=sys.stderr)
        return 2
    except MixedSignWeightError as exc:
        print(f"greycog: criterion inapplicable: {exc}", file=sys.stderr)
        return 4
    except InsufficientDataError as exc:
        print(f"greycog: {exc}", file=sys.stderr)
        return 3
    except GreycogError as exc:
        print(f"greycog: validation error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())
