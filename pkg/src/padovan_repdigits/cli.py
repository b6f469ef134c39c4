"""Command-line driver: search, bounds, reduce, verify-all, report."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .certificate import Certificate, SchemaViolation, render_markdown
from .errors import DepthExhausted, DomainError, PrecisionExhausted, UnresolvedException
from .heights import SEARCH_THRESHOLD, absolute_bound, case_bounds
from .numerics import MIN_DIGITS, plastic_roots
from .padovan import binet_coefficients
from .reduction import run_full_reduction
from .search import KNOWN_REPDIGITS, enumerate_solutions

log = logging.getLogger("padovan_repdigits")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PRECISION = 3
EXIT_MISMATCH = 4


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    precision_digits: int = 400
    n_max: int = 500
    ell_max: int = 100
    M_override: int | None = None
    output_path: str | None = None
    format: str = "json"
    threads: int = 1

    def __post_init__(self):
        if self.precision_digits < MIN_DIGITS:
            raise ConfigError(f"precision must be >= {MIN_DIGITS} digits")
        if self.n_max < 5:
            raise ConfigError("n_max must be >= 5")
        if self.ell_max < 2:
            raise ConfigError("l_max must be >= 2")
        if self.M_override is not None and self.M_override < 1:
            raise ConfigError("M override must be positive")
        if self.format not in ("json", "markdown"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")

    @property
    def is_default_search(self) -> bool:
        return self.n_max == 500 and self.ell_max == 100

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("output_path")
        d.pop("format")
        d.pop("threads")  # results do not depend on it
        if d["M_override"] is not None:
            d["M_override"] = str(d["M_override"])
        return d


@dataclass
class CommandResult:
    status: int
    certificate: Certificate
    message: str = ""


def _new_certificate(config: RunConfig) -> Certificate:
    return Certificate(config=config.echo())


def _failure(cert: Certificate, exc: Exception) -> CommandResult:
    if isinstance(exc, (PrecisionExhausted, DepthExhausted)):
        status = EXIT_PRECISION
    elif isinstance(exc, DomainError):
        status = EXIT_CONFIG
    else:
        status = EXIT_MISMATCH
    cert.meta["failure"] = f"{type(exc).__name__}: {exc}"
    return CommandResult(status, cert, cert.meta["failure"])


def cmd_search(config: RunConfig) -> CommandResult:
    cert = _new_certificate(config)
    rs = enumerate_solutions(config.n_max, config.ell_max)
    cert.solutions = rs
    if config.is_default_search and rs.values != set(KNOWN_REPDIGITS):
        return CommandResult(EXIT_MISMATCH, cert, "solution set differs from the expected list")
    msg = f"{len(rs.values)} values, {len(rs)} representations" if len(rs) else "no solutions"
    return CommandResult(EXIT_OK, cert, msg)


def cmd_bounds(config: RunConfig) -> CommandResult:
    cert = _new_certificate(config)
    try:
        roots = plastic_roots(config.precision_digits)
        cert.bounds = case_bounds(roots, binet_coefficients(roots))
    except (PrecisionExhausted, DepthExhausted) as e:
        return _failure(cert, e)
    b = cert.bounds
    msg = f"c1={b.c1:.4e} c2={b.c2:.4e} c3={b.c3:.4e} n1<{b.absolute_bound:.1e}"
    return CommandResult(EXIT_OK, cert, msg)


def _reduction_M(config: RunConfig, cert: Certificate) -> int:
    if config.M_override is not None:
        return config.M_override
    return absolute_bound(cert.bounds)


def cmd_reduce(config: RunConfig) -> CommandResult:
    res = cmd_bounds(config)
    cert = res.certificate
    if res.status:
        return res
    try:
        cert.reduction = run_full_reduction(_reduction_M(config, cert), config.precision_digits,
                                            workers=config.threads)
    except (PrecisionExhausted, DepthExhausted, UnresolvedException) as e:
        return _failure(cert, e)
    r = cert.reduction
    msg = f"stage bounds {r.stage1_bound}/{r.stage2_bound}/{r.stage3_bound}"
    status = EXIT_OK if r.contradiction else EXIT_MISMATCH
    return CommandResult(status, cert, msg)


def cmd_verify_all(config: RunConfig) -> CommandResult:
    res = cmd_reduce(config)
    cert = res.certificate
    if cert.reduction is None:
        return res
    n_max = max(cert.reduction.stage3_bound, SEARCH_THRESHOLD, config.n_max)
    rs = enumerate_solutions(n_max, config.ell_max)
    cert.solutions = rs
    closes = cert.reduction.stage3_bound <= n_max and rs.values == set(KNOWN_REPDIGITS)
    cert.meta["proof_closes"] = closes
    if not closes:
        return CommandResult(EXIT_MISMATCH, cert, "end-to-end check failed")
    return CommandResult(EXIT_OK, cert, f"closed: n1 <= {cert.reduction.stage3_bound} <= {n_max}")


def cmd_report(path: str) -> tuple[int, str]:
    try:
        cert = Certificate.from_json(Path(path).read_text())
    except OSError as e:
        return EXIT_CONFIG, f"cannot read {path}: {e}"
    except SchemaViolation as e:
        return EXIT_CONFIG, f"schema violation: {e}"
    return EXIT_OK, render_markdown(cert)


# --- argument handling ------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=400, help="working precision in decimal digits")
    common.add_argument("--n-max", type=int, default=500)
    common.add_argument("--l-max", type=int, default=100)
    common.add_argument("--m-override", type=int, default=None, help="replace the Baker bound M")
    common.add_argument("--out", default=None, help="output path (stdout if omitted)")
    common.add_argument("--format", choices=["json", "markdown"], default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="padovan-repdigits")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("search", parents=[common], help="enumerate small solutions")
    sub.add_parser("bounds", parents=[common], help="linear-forms-in-logarithms bounds")
    sub.add_parser("reduce", parents=[common], help="three-stage reduction")
    sub.add_parser("verify-all", parents=[common], help="full pipeline")
    rep = sub.add_parser("report", parents=[common], help="render a saved certificate")
    rep.add_argument("certificate")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


COMMANDS = {
    "search": cmd_search,
    "bounds": cmd_bounds,
    "reduce": cmd_reduce,
    "verify-all": cmd_verify_all,
}


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_CONFIG
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")

    if args.command == "report":
        status, text = cmd_report(args.certificate)
        if status:
            print(text, file=sys.stderr)
        else:
            _emit(text, args.out)
        return status

    try:
        config = RunConfig(args.precision, args.n_max, args.l_max, args.m_override,
                           args.out, args.format, args.threads)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG

    t0 = time.perf_counter()
    res = COMMANDS[args.command](config)
    log.info("%s finished in %.1fs", args.command, time.perf_counter() - t0)
    # all output happens here, after any parallel work has joined
    text = res.certificate.to_json() if config.format == "json" else render_markdown(res.certificate)
    try:
        _emit(text, config.output_path)
    except OSError as e:
        print(f"cannot write output: {e}", file=sys.stderr)
        return EXIT_CONFIG
    print(res.message, file=sys.stderr)
    return res.status


if __name__ == "__main__":
    sys.exit(main())
