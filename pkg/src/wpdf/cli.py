"""Command-line front end.

Subcommands: ``fit``, ``simulate``, ``compare``, ``ttt``, ``sample``,
``props``.  Exit status is 0 on success, 1 on a usage error and 2 on a
domain or data error.  CSV output uses 6 significant digits; JSON output
carries full double precision.
"""

from __future__ import annotations

import argparse
import csv
import difflib
import io
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import estimators, lab, properties, rng, study
from .errors import DomainError
from .family import Origin, hazard_shape, make_family, pdf_shape
from . import family as fam

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt_csv(v):
    if isinstance(v, float):
        return format(v, ".6g")
    return "" if v is None else str(v)


def write_csv(out, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt_csv(v) for v in row])


def write_json(out, obj) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _floats(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of numbers, got {text!r}") from None


def _pairs(text: str):
    out = []
    for item in text.split(","):
        try:
            b, g = item.split(":")
            out.append((float(b), float(g)))
        except ValueError:
            raise UsageError(f"expected beta:gamma pairs like 1:2,3:2, got {item!r}") from None
    return out


# -- subcommands -----------------------------------------------------------

def cmd_fit(args, out) -> None:
    data = lab.load_dataset(args.data)
    res = estimators.fit(data.values, args.method, H=args.H, L=args.L)
    d = res.to_dict()
    if args.format == "json":
        write_json(out, d)
    else:
        keys = ["method", "beta_hat", "gamma_hat", "k_hat", "n", "log_likelihood", "out_of_support"]
        write_csv(out, keys, [[d[k] for k in keys]])


STUDY_COLUMNS = [
    "method", "n", "beta", "gamma", "beta_hat", "gamma_hat", "mse_beta_hat", "mse_gamma_hat",
    "se_beta_hat", "se_gamma_hat", "se_mse_beta_hat", "se_mse_gamma_hat", "replications", "failures",
]


def study_rows(cells):
    return [
        [c.method.value, c.n, c.beta_true, c.gamma_true, c.mean_beta_hat, c.mean_gamma_hat, c.mse_beta,
         c.mse_gamma, c.se_mean_beta, c.se_mean_gamma, c.se_mse_beta, c.se_mse_gamma, c.replications, c.failures]
        for c in cells
    ]


def cmd_simulate(args, out) -> None:
    base = study.StudyConfig.from_json(args.config).to_dict() if args.config else study.StudyConfig().to_dict()
    if args.config is None:
        base["master_seed"] = rng.default_seed()
    if args.replications is not None:
        base["replications"] = args.replications
    if args.sizes is not None:
        base["sample_sizes"] = [int(n) for n in _floats(args.sizes)]
    if args.pairs is not None:
        base["param_pairs"] = _pairs(args.pairs)
    if args.methods is not None:
        base["methods"] = [m for m in args.methods.split(",") if m]
    if args.seed is not None:
        base["master_seed"] = args.seed
    if args.H is not None:
        base["H"] = args.H
    if args.L is not None:
        base["L"] = args.L
    cfg = study.StudyConfig.from_dict(base)
    cells = study.run_study(cfg, workers=args.workers, block_size=args.block_size)
    rows = study_rows(cells)
    if args.format == "json":
        write_json(out, {"config": cfg.to_dict(), "cells": [dict(zip(STUDY_COLUMNS, r)) for r in rows]})
    else:
        write_csv(out, STUDY_COLUMNS, rows)


def _models(text: str):
    try:
        return [Origin(m.strip().lower()) for m in text.split(",") if m.strip()]
    except ValueError as exc:
        raise UsageError(f"--models: {exc}; choose from {[o.value for o in Origin]}") from None


def cmd_compare(args, out) -> None:
    data = lab.load_dataset(args.data)
    reports, errors = lab.compare_models(data.values, _models(args.models))
    for e in errors:
        print(f"warning: {e}", file=args.stderr)
    if args.format == "json":
        write_json(out, {
            "dataset": data.name,
            "n": len(data),
            "note": data.source_note,
            "models": [
                {"distribution": r.model.label, "family": r.family.to_dict(), "num_params": r.num_params,
                 "log_likelihood": r.log_likelihood, "AIC": r.aic, "CAIC": r.caic, "BIC": r.bic, "HQIC": r.hqic}
                for r in reports
            ],
            "errors": errors,
        })
    else:
        write_csv(out, ["Distribution", "AIC", "CAIC", "BIC", "HQIC"],
                  [[r.model.label, r.aic, r.caic, r.bic, r.hqic] for r in reports])


def cmd_ttt(args, out) -> None:
    data = lab.load_dataset(args.data)
    pts = lab.ttt_transform(data.values)
    if args.format == "json":
        write_json(out, {"dataset": data.name, "u": [p[0] for p in pts], "T": [p[1] for p in pts]})
    else:
        write_csv(out, ["u", "T"], pts)


def _single(text, flag):
    values = _floats(text)
    if len(values) != 1:
        raise UsageError(f"{flag} takes a single number, got {text!r}")
    return values[0]


def cmd_sample(args, out) -> None:
    seed = args.seed if args.seed is not None else rng.default_seed()
    theta = None if args.theta is None else _single(args.theta, "--theta")
    f = make_family(args.origin, beta=_single(args.beta, "--beta"), gamma=_single(args.gamma, "--gamma"), theta=theta)
    batch = fam.sample(f, args.n, seed)
    if args.format == "json":
        write_json(out, {"family": f.to_dict(), "seed": seed, "values": batch.values.tolist()})
    else:
        write_csv(out, ["x"], [[v] for v in batch.values.tolist()])


def _pointwise(fn):
    return lambda f, a, o: float(fn(f, a))


PROPERTIES: Dict[str, Callable] = {
    "pdf": _pointwise(fam.pdf),
    "cdf": _pointwise(fam.cdf),
    "sf": _pointwise(fam.sf),
    "hrf": _pointwise(fam.hrf),
    "mills": _pointwise(fam.mills),
    "quantile": _pointwise(fam.quantile),
    "raw_moment": lambda f, a, o: properties.raw_moment(f, a),
    "inverse_moment": lambda f, a, o: properties.inverse_moment(f, a),
    "incomplete_moment": lambda f, a, o: properties.incomplete_moment(f, o.order, a),
    "conditional_moment": lambda f, a, o: properties.conditional_moment(f, o.order, a),
    "mgf": lambda f, a, o: properties.mgf(f, a).value,
    "mrf": lambda f, a, o: properties.mrf(f, a),
    "vitality": lambda f, a, o: properties.vitality(f, a),
    "renyi_entropy": lambda f, a, o: properties.renyi_entropy(f, a),
    "information_fn": lambda f, a, o: properties.information_fn(f, a),
    "order_stat_pdf": lambda f, a, o: properties.order_stat_pdf(f, o.j, o.n, a),
    "lorenz": lambda f, a, o: properties.lorenz(f, a),
    "bonferroni": lambda f, a, o: properties.bonferroni(f, a),
    "dtm": lambda f, a, o: properties.dtm(f, *a),
    "mean": lambda f, a, o: properties.mean(f),
    "variance": lambda f, a, o: properties.variance(f),
    "cv": lambda f, a, o: properties.cv(f),
    "shannon_entropy": lambda f, a, o: properties.shannon_entropy(f),
    "pdf_shape": lambda f, a, o: pdf_shape(f).value,
    "hazard_shape": lambda f, a, o: hazard_shape(f).value,
}
SCALAR_PROPERTIES = {"mean", "variance", "cv", "shannon_entropy", "pdf_shape", "hazard_shape"}


def _dtm_args(text: str):
    out = []
    for item in text.split(","):
        try:
            x, y = item.split(":")
            out.append((float(x), float(y)))
        except ValueError:
            raise UsageError(f"dtm arguments are x:y pairs, got {item!r}") from None
    return out


def cmd_props(args, out) -> None:
    names = [p.strip() for p in args.property.split(",") if p.strip()]
    for p in names:
        if p not in PROPERTIES:
            hint = difflib.get_close_matches(p, PROPERTIES, n=1)
            raise UsageError(f"unknown property {p!r}" + (f"; did you mean {hint[0]!r}?" if hint else ""))
    thetas = _floats(args.theta) if args.theta else [None]
    rows = []
    for gamma in _floats(args.gamma):
        for beta in _floats(args.beta):
            for theta in thetas:
                f = make_family(args.origin, beta=beta, gamma=gamma, theta=theta)
                for p in names:
                    if p in SCALAR_PROPERTIES:
                        grid = [None]
                    elif args.arg is None:
                        raise UsageError(f"property {p!r} needs --arg")
                    elif p == "dtm":
                        grid = _dtm_args(args.arg)
                    else:
                        grid = _floats(args.arg)
                    for a in grid:
                        label = None if a is None else (f"{a[0]!r}:{a[1]!r}" if p == "dtm" else a)
                        rows.append([f.origin.value, f.beta, f.gamma, f.theta, f.k, p, label, PROPERTIES[p](f, a, args)])
    header = ["origin", "beta", "gamma", "theta", "k", "property", "arg", "value"]
    if args.format == "json":
        write_json(out, [dict(zip(header, r)) for r in rows])
    else:
        write_csv(out, header, rows)


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wpdf", description="Weighted power function distribution toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        return sp

    sp = add("fit", "estimate (beta, gamma) from a data file or bundled dataset")
    sp.add_argument("--data", required=True, help="chemotherapy, devices, or a path")
    sp.add_argument("--method", default="mlm", type=str.lower, choices=("mlm", "mmlm", "pe", "mpe"))
    sp.add_argument("--H", type=float, default=0.75)
    sp.add_argument("--L", type=float, default=0.25)
    sp.set_defaults(func=cmd_fit)

    sp = add("simulate", "Monte Carlo comparison of the estimators")
    sp.add_argument("--config", help="JSON file with StudyConfig fields")
    sp.add_argument("--replications", type=int)
    sp.add_argument("--sizes", help="comma-separated sample sizes, e.g. 40,100")
    sp.add_argument("--pairs", help="comma-separated beta:gamma pairs, e.g. 1:2,3:2,4:3")
    sp.add_argument("--methods", help="comma-separated subset of MLM,MMLM,PE,MPE")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--H", type=float)
    sp.add_argument("--L", type=float)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--block-size", type=int, default=1000)
    sp.set_defaults(func=cmd_simulate)

    sp = add("compare", "information-criterion comparison of the family members")
    sp.add_argument("--data", required=True)
    sp.add_argument("--models", default="wpdf,pfd,mwpdf1,mwpdf2")
    sp.set_defaults(func=cmd_compare)

    sp = add("ttt", "scaled total-time-on-test transform")
    sp.add_argument("--data", required=True)
    sp.set_defaults(func=cmd_ttt)

    def family_args(sp):
        sp.add_argument("--origin", default="wpdf", type=str.lower, choices=[o.value for o in Origin])
        sp.add_argument("--beta", required=True)
        sp.add_argument("--gamma", required=True)
        sp.add_argument("--theta")

    sp = add("sample", "draw a seeded sample")
    family_args(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_sample)

    sp = add("props", "evaluate properties over a parameter grid")
    family_args(sp)
    sp.add_argument("--property", required=True, help=f"comma-separated, from: {', '.join(PROPERTIES)}")
    sp.add_argument("--arg", help="comma-separated argument grid (x:y pairs for dtm)")
    sp.add_argument("--order", type=int, default=1, help="moment order for incomplete/conditional moments")
    sp.add_argument("--j", type=int, default=1)
    sp.add_argument("--n", type=int, default=1)
    sp.set_defaults(func=cmd_props)
    return p


def _suggest(parser: argparse.ArgumentParser, command: str, unknown: Sequence[str]) -> str:
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    options = set()
    for action in subparsers.choices[command]._actions:
        options.update(action.option_strings)
    msgs = []
    for u in unknown:
        flag = u.split("=", 1)[0]
        hint = difflib.get_close_matches(flag, options, n=1)
        msgs.append(f"unrecognized argument {u!r}" + (f"; did you mean {hint[0]!r}?" if hint else ""))
    return "; ".join(msgs)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args, unknown = parser.parse_known_args(argv)
        if unknown:
            raise UsageError(_suggest(parser, args.command, unknown))
        args.stderr = stderr
        buf = io.StringIO()
        args.func(args, buf)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
