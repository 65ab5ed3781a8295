"""Command-line front end: ``thetaroot <subcommand> [flags]``.

Exit status is 0 on success, 1 when a computation fails and 2 for invalid
arguments (argparse's own convention, reused for bad values and unwritable
output paths).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from . import asymptotics, checks, polyomino, theta, trees

SUBCOMMANDS = ("xi", "refine", "sigma", "stacks", "ferrers", "trees", "mu", "verify")
FORMATS = ("json", "csv", "plain", "dot")
DEFAULT_ORDER = 30
DEFAULT_MAX_AREA = 7
DEFAULT_MU_ORDER = 300
DOT_MAX_AREA = 5


class UsageError(ValueError):
    """Invalid configuration; maps to exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    order: int = DEFAULT_ORDER
    max_area: int = DEFAULT_MAX_AREA
    method: str = "theta"
    sigma_word: str = "0"
    format: str = "plain"
    out_path: str | None = None
    unconstrained: bool = False
    max_height: int | None = None
    window: tuple[int, int] | None = None
    depth: int = 3
    inject_fault: str | None = None

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.order < 0 or self.max_area < 0:
            raise UsageError("order and max-area must be non-negative")
        if self.method not in ("theta", "fix1", "fix2"):
            raise UsageError(f"unknown method {self.method!r}")
        if not self.sigma_word or set(self.sigma_word) - {"0", "1"}:
            raise UsageError(f"sigma word must be a non-empty word over 0/1, got {self.sigma_word!r}")
        allowed = _FORMATS_BY_COMMAND[self.subcommand]
        if self.format not in allowed:
            raise UsageError(f"{self.subcommand} supports --format {', '.join(allowed)}")
        if self.subcommand == "trees" and self.format == "dot" and self.max_area > DOT_MAX_AREA:
            raise UsageError(f"DOT output is limited to --max-area <= {DOT_MAX_AREA}")
        if self.inject_fault is not None and self.inject_fault not in {c.name for c in checks.CHECKS}:
            raise UsageError(f"unknown check {self.inject_fault!r}")


_FORMATS_BY_COMMAND = {
    "xi": ("plain", "json", "csv"),
    "refine": ("plain", "json", "csv"),
    "sigma": ("plain", "json", "csv"),
    "stacks": ("csv", "json"),
    "ferrers": ("csv", "json"),
    "trees": ("csv", "json", "dot"),
    "mu": ("plain", "json"),
    "verify": ("plain", "json"),
}


# ---------------------------------------------------------------------------
# renderers


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _render_qseries(series, fmt: str) -> str:
    if fmt == "plain":
        return " ".join(map(str, series.coeffs)) + "\n"
    if fmt == "csv":
        return _csv(("n", "coeff"), enumerate(series.coeffs))
    return _json(series.to_dict())


def _render_tqseries(series, fmt: str) -> str:
    if fmt == "plain":
        return str(series) + "\n"
    if fmt == "csv":
        rows = ((k, d, c) for k, p in enumerate(series.coeffs) for d, c in enumerate(p) if c)
        return _csv(("area", "vertices", "count"), rows)
    return _json(series.to_dict())


def _render_table(table, header: tuple[str, ...], fmt: str) -> str:
    if fmt == "csv":
        return polyomino.table_to_csv(table, header)
    rows = [dict(zip(header + ("count",), (*key, table[key]))) for key in sorted(table) if table[key]]
    return _json(rows)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_xi(cfg: RunConfig) -> tuple[str, int]:
    return _render_qseries(theta.xi0(cfg.order, cfg.method), cfg.format), 0


def _cmd_refine(cfg: RunConfig) -> tuple[str, int]:
    if cfg.sigma_word not in ("0", "1"):
        raise UsageError("refine takes --sigma 0 (stacks) or --sigma 1 (Ferrers)")
    solver = theta.A_refined if cfg.sigma_word == "0" else theta.Atilde_refined
    return _render_tqseries(solver(cfg.order), cfg.format), 0


def _cmd_sigma(cfg: RunConfig) -> tuple[str, int]:
    return _render_tqseries(theta.A_sigma_infinite(cfg.sigma_word, cfg.order), cfg.format), 0


def _cmd_stacks(cfg: RunConfig) -> tuple[str, int]:
    n = cfg.max_area
    table = polyomino.stack_gf_closed(n, n, n, n)
    return _render_table(table, ("area", "width", "height", "rise"), cfg.format), 0


def _cmd_ferrers(cfg: RunConfig) -> tuple[str, int]:
    n = cfg.max_area
    if cfg.unconstrained:
        table = polyomino.ferrers_gf_two_forms(n, n, n)[1]
    else:
        table = polyomino.ferrers_gf_constrained(n, n, n)
    return _render_table(table, ("area", "width", "height"), cfg.format), 0


def _cmd_trees(cfg: RunConfig) -> tuple[str, int]:
    if cfg.format == "dot":
        found = [
            t
            for area in range(cfg.max_area + 1)
            for t in trees.generate_trees(cfg.sigma_word, area, cfg.max_height)
        ]
        return trees.to_dot(found), 0
    table = trees.enumerate_trees(cfg.sigma_word, cfg.max_area, cfg.max_height)
    return _render_table(table, ("area", "vertices"), cfg.format), 0


def _cmd_mu(cfg: RunConfig) -> tuple[str, int]:
    window = cfg.window or (cfg.order // 3, cfg.order)
    coeffs = theta.xi_via_theta(cfg.order)
    est = asymptotics.estimate_mu(coeffs, window, cfg.depth)
    if cfg.format == "json":
        return _json(est.to_dict()), 0
    lines = [
        f"mu         {asymptotics.mpmath.nstr(est.mu, 20)}",
        f"residual   {asymptotics.mpmath.nstr(est.residual, 5)}",
        f"window     {est.n_used[0]}..{est.n_used[1]}",
        f"reference  {asymptotics.MU_REFERENCE}",
    ]
    return "\n".join(lines) + "\n", 0


def _cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    results = checks.run_checks(cfg.order, cfg.inject_fault)
    status = 0 if all(ok for _, ok in results) else 1
    if cfg.format == "json":
        return _json({"passed": status == 0, "checks": [{"name": n, "ok": ok} for n, ok in results]}), status
    return "".join(f"{'PASS' if ok else 'FAIL'} {name}\n" for name, ok in results), status


_DISPATCH = {
    "xi": _cmd_xi,
    "refine": _cmd_refine,
    "sigma": _cmd_sigma,
    "stacks": _cmd_stacks,
    "ferrers": _cmd_ferrers,
    "trees": _cmd_trees,
    "mu": _cmd_mu,
    "verify": _cmd_verify,
}


def _open_output(path: str | None) -> TextIO | None:
    if path is None:
        return None
    try:
        return open(path, "w", encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def run(config: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Execute one configured command and return its exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config.validate()
        sink = _open_output(config.out_path)
    except UsageError as exc:
        print(f"thetaroot: error: {exc}", file=stderr)
        return 2
    try:
        text, status = _DISPATCH[config.subcommand](config)
    except UsageError as exc:
        print(f"thetaroot: error: {exc}", file=stderr)
        status, text = 2, ""
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"thetaroot: computation failed: {exc}", file=stderr)
        status, text = 1, ""
    if sink is None:
        stdout.write(text)
    else:
        with sink:
            sink.write(text)
    return status


# ---------------------------------------------------------------------------
# argument parsing


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(v) for v in text.replace(",", ":").split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like LO:HI, got {text!r}") from None
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetaroot", description="Leading root of the partial theta function.")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    def add(name, help, order=None, max_area=False, fmt="plain"):
        p = sub.add_parser(name, help=help)
        if order is not None:
            p.add_argument("--order", type=int, default=order)
        if max_area:
            p.add_argument("--max-area", type=int, default=DEFAULT_MAX_AREA)
        p.add_argument("--format", choices=_FORMATS_BY_COMMAND[name], default=fmt)
        p.add_argument("--out", dest="out_path", metavar="PATH")
        return p

    p = add("xi", "coefficients of xi0(q)", order=DEFAULT_ORDER)
    p.add_argument("--method", choices=("theta", "fix1", "fix2"), default="theta")

    p = add("refine", "A(t,q) (--sigma 0) or Atilde(t,q) (--sigma 1)", order=DEFAULT_ORDER)
    p.add_argument("--sigma", dest="sigma_word", default="0")

    p = add("sigma", "A_sigma(t,q), the word extended by its last letter", order=DEFAULT_ORDER)
    p.add_argument("--sigma", dest="sigma_word", required=True)

    add("stacks", "stack polyominoes by area, width, height and rise", max_area=True, fmt="csv")

    p = add("ferrers", "Ferrers diagrams by area, width and height", max_area=True, fmt="csv")
    p.add_argument("--unconstrained", action="store_true", help="drop the Durfee condition")

    p = add("trees", "enriched trees by area and vertices", max_area=True, fmt="csv")
    p.add_argument("--sigma", dest="sigma_word", default="0")
    p.add_argument("--max-height", type=int)

    p = add("mu", "growth rate of the coefficients of xi0", order=DEFAULT_MU_ORDER)
    p.add_argument("--window", type=_window, help="LO:HI (default ORDER/3:ORDER)")
    p.add_argument("--depth", type=int, default=3)

    p = add("verify", "run the cross-check suite", order=DEFAULT_ORDER)
    p.add_argument("--inject-fault", metavar="CHECK", help=argparse.SUPPRESS)
    return parser


def parse_args(argv: list[str] | None = None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    return RunConfig(**{k: v for k, v in ns.items() if v is not None or k in ("out_path",)})


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
