"""Command-line front end.

    python -m softedge density    --beta 2 --n 10 --p 40
    python -m softedge expansion  --beta 1 --n 10 --p 40 --order 2
    python -m softedge compare    --beta 1 --n 10 --p 40 --smin -4 --smax 4 --points 161
    python -m softedge reconstruct --beta 1 --j 2
    python -m softedge validate
    python -m softedge tables

Exit status: 0 ok, 1 validation failure or reconstruction mismatch,
2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import polyalg, tables
from .densities import EnsembleSpec, rho_rescaled
from .errors import SoftEdgeError
from .expansions import expansion_density_terms, omega_coeff, tables_json
from .validation import compare_grid, fit_slope, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    beta: int = 2
    n: int = 10
    p: float | None = None
    s_min: float = -4.0
    s_max: float = 4.0
    points: int = 161
    order: int = 2
    format: str = "csv"
    output: str | None = None
    j: int = 1
    family: str = "laguerre"
    n_ladder: tuple = ()
    summary: str | None = None

    def validate(self):
        if self.points < 2:
            raise _Usage("the s grid needs at least 2 points")
        if not 0 <= self.order <= tables.MAX_ORDER:
            raise _Usage(f"--order must be in 0..{tables.MAX_ORDER}")
        if self.s_max <= self.s_min:
            raise _Usage("--smax must exceed --smin")

    def spec(self):
        return EnsembleSpec(self.beta, self.n, self.p)

    def grid(self):
        return np.linspace(self.s_min, self.s_max, self.points)


class _Usage(Exception):
    pass


def fmt(v):
    """Shortest round-trip decimal."""
    return repr(float(v))


def csv_text(header, columns):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in zip(*columns):
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _report(cfg, results, failures=()):
    params = {k: v for k, v in asdict(cfg).items() if k not in ("command", "output", "summary")}
    params["n_ladder"] = list(cfg.n_ladder)
    return {"command": cfg.command, "params": params, "results": results, "failures": list(failures)}


def _emit(cfg, text):
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _table_output(cfg, header, columns):
    if cfg.format == "csv":
        return csv_text(header, columns)
    results = {h: [float(v) for v in col] for h, col in zip(header, columns)}
    return _json_text(_report(cfg, results))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_density(cfg):
    spec = cfg.spec()
    s = cfg.grid()
    x = spec.scaling().x_of_s(s)
    rho = rho_rescaled(spec, s)
    _emit(cfg, _table_output(cfg, ["s", "x", "rho_rescaled"], [s, x, rho]))
    return EXIT_OK


def cmd_expansion(cfg):
    spec = cfg.spec()
    s = cfg.grid()
    terms = expansion_density_terms(spec, s)[: cfg.order + 1]
    header = ["s"] + [f"m{m}" for m in range(cfg.order + 1)]
    _emit(cfg, _table_output(cfg, header, [s, *terms]))
    return EXIT_OK


def _ladder_slopes(cfg, s):
    ratio = None if cfg.p is None else cfg.p / cfg.n
    hs, maxerr = [], []
    for n in cfg.n_ladder:
        spec = EnsembleSpec(cfg.beta, n, None if ratio is None else ratio * n)
        _, _, errs = compare_grid(spec, s)
        hs.append(spec.scaling().h)
        maxerr.append([float(np.max(e)) for e in errs[: cfg.order + 1]])
    maxerr = np.array(maxerr)
    return [fit_slope(hs, maxerr[:, m]) for m in range(cfg.order + 1)]


def cmd_compare(cfg):
    spec = cfg.spec()
    s = cfg.grid()
    exact, terms, errs = compare_grid(spec, s)
    terms, errs = terms[: cfg.order + 1], errs[: cfg.order + 1]
    m_cols = [f"m{m}" for m in range(cfg.order + 1)]
    header = ["s", "exact", *m_cols, *[f"err{m}" for m in range(cfg.order + 1)]]
    summary = {"max_err": {c: float(np.max(e)) for c, e in zip(m_cols, errs)}}
    if cfg.n_ladder:
        slopes = _ladder_slopes(cfg, s)
        summary["n_ladder"] = list(cfg.n_ladder)
        summary["slope"] = dict(zip(m_cols, slopes))
    if cfg.format == "csv":
        _emit(cfg, csv_text(header, [s, exact, *terms, *errs]))
        text = _json_text(_report(cfg, summary))
        if cfg.summary:
            with open(cfg.summary, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stderr.write(text)
    else:
        results = {h: [float(v) for v in col] for h, col in zip(header, [s, exact, *terms, *errs])}
        results["summary"] = summary
        _emit(cfg, _json_text(_report(cfg, results)))
    return EXIT_OK


def cmd_reconstruct(cfg):
    omega = omega_coeff(cfg.beta, cfg.j, cfg.family)
    got = polyalg.reconstruct_P(cfg.beta, cfg.j, omega)
    key = (1 if cfg.beta == 4 else cfg.beta, cfg.j)
    expected = tables.GENERATING[key]
    if cfg.family == "gaussian":
        expected = [p.subs_tau(0) for p in expected]
    match = got == expected
    verdict = "MATCH" if match else "MISMATCH"
    names = [f"P_{{{cfg.beta},{cfg.j},{k}}}" for k in range(1, len(got) + 1)]
    if cfg.format == "json":
        results = {"polynomials": {nm: p.render() for nm, p in zip(names, got)}, "verdict": verdict}
        failures = [] if match else ["reconstruction differs from the built-in table"]
        _emit(cfg, _json_text(_report(cfg, results, failures)))
    else:
        lines = [f"{nm} = {p.render()}" for nm, p in zip(names, got)]
        _emit(cfg, "\n".join(lines + [f"verdict: {verdict}"]) + "\n")
    return EXIT_OK if match else EXIT_FAIL


def cmd_validate(cfg):
    checks = run_suite()
    failures = [c.name for c in checks if not c.passed]
    report = _report(cfg, [c.as_dict() for c in checks], failures)
    _emit(cfg, _json_text(report))
    return EXIT_FAIL if failures else EXIT_OK


def cmd_tables(cfg):
    _emit(cfg, _json_text(_report(cfg, tables_json())))
    return EXIT_OK


COMMANDS = {
    "density": cmd_density,
    "expansion": cmd_expansion,
    "compare": cmd_compare,
    "reconstruct": cmd_reconstruct,
    "validate": cmd_validate,
    "tables": cmd_tables,
}


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _ladder(text):
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad ladder {text!r}") from exc
    if len(vals) < 2:
        raise argparse.ArgumentTypeError("a ladder needs at least two values of n")
    return vals


def build_parser():
    parser = argparse.ArgumentParser(prog="softedge", description="Soft-edge level densities and their Airy expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_args(p):
        p.add_argument("--beta", type=int, choices=(1, 2, 4), default=2)
        p.add_argument("--n", type=int, default=10)
        p.add_argument("--p", type=float, default=None, help="Laguerre parameter; omit for Gaussian")
        p.add_argument("--smin", dest="s_min", type=float, default=-4.0)
        p.add_argument("--smax", dest="s_max", type=float, default=4.0)
        p.add_argument("--points", type=int, default=161)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None)

    p = sub.add_parser("density", help="exact rescaled density on an s grid")
    grid_args(p)
    p = sub.add_parser("expansion", help="truncated Airy expansions on an s grid")
    grid_args(p)
    p.add_argument("--order", type=int, default=2)
    p = sub.add_parser("compare", help="exact density vs truncations, with errors")
    grid_args(p)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--n-ladder", dest="n_ladder", type=_ladder, default=())
    p.add_argument("--summary", default=None, help="path for the JSON summary (default: stderr)")
    p = sub.add_parser("reconstruct", help="rebuild the generating-function polynomials")
    p.add_argument("--beta", type=int, choices=(1, 2, 4), default=1)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--family", choices=("laguerre", "gaussian"), default="laguerre")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)
    p = sub.add_parser("validate", help="run the invariant suite")
    p.add_argument("--output", default=None)
    p = sub.add_parser("tables", help="dump the exact coefficient tables as JSON")
    p.add_argument("--output", default=None)
    return parser


def config_from_args(args):
    known = RunConfig.__dataclass_fields__
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in known})
    cfg.validate()
    return cfg


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except _Usage as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (SoftEdgeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
