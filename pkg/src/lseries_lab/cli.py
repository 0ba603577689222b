"""Command-line interface: data-export front end for the lab.

Commands
--------
* ``characters Q``          -- list characters mod Q (``--real`` for the real
                               enumeration only, which is what ``-k`` indexes).
* ``lfun eval -q Q -k K -s S``   -- one continued L-value with provenance.
* ``lfun scan -q Q -k K``        -- real-axis grid scan; exit 1 if a sign
                               change (candidate zero) is found.
* ``geom verify-appendix``  -- recompute the golden bilinear-geometry table;
                               exit 1 on any mismatch.
* ``pappus check -q Q -k K -s S -N N`` -- solid-of-revolution identity audit.
* ``audit -q Q -k K -s S -N N1,N2,...`` -- the eight-claim truncation audit.
* ``survey --qmax Q``       -- min |L| survey over all real non-principal
                               characters; exit 1 if any row saw a sign change.

Conventions: ``--format`` picks json/csv/table (default table); CSV uses a
'.' decimal point regardless of locale; complex numbers print as "a+bi" in
tables and CSV and as {"re": ..., "im": ...} in JSON.  ``-s`` accepts a
complex literal like ``0.5``, ``0.5+2i``, or ``-1.2i``.  Exit codes: 0 for
success / no finding, 1 for a finding (sign change or golden mismatch),
2 for usage or domain errors.

The environment variable LSERIES_LAB_CONFIG may point to a ``key=value``
file overriding the defaults: ``hurwitz_tol`` (default 1e-10), ``default_n``
(default 10000), ``grid_step`` (default 0.01), ``output_format``
(default table).  Command-line flags override the config file.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from . import audit as audit_mod
from . import cgeom
from .characters import enumerate_characters, enumerate_real_characters
from .lseries import (
    ContinuationRangeError,
    NonRealCharacterError,
    PoleError,
    ScanGridError,
    evaluate,
    scan_zeros,
)
from .rotation import ZeroAreaError, pappus_check

__all__ = ["Config", "load_config", "main", "run"]

ENV_CONFIG = "LSERIES_LAB_CONFIG"
FORMATS = ("json", "csv", "table")

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class Config:
    """Run defaults; see the module docstring for the config-file keys."""

    hurwitz_tol: float = 1e-10
    default_n: int = 10_000
    grid_step: float = 0.01
    output_format: str = "table"

    def validate(self) -> "Config":
        if not self.hurwitz_tol > 0:
            raise ValueError(f"hurwitz_tol must be positive, got {self.hurwitz_tol}")
        if self.default_n < 1:
            raise ValueError(f"default_n must be >= 1, got {self.default_n}")
        if not 0 < self.grid_step < 0.5:
            raise ValueError(f"grid_step must lie in (0, 0.5), got {self.grid_step}")
        if self.output_format not in FORMATS:
            raise ValueError(
                f"output_format must be one of {FORMATS}, got {self.output_format!r}"
            )
        return self


def load_config(environ=None) -> Config:
    """Config from the LSERIES_LAB_CONFIG key=value file, if set."""
    environ = os.environ if environ is None else environ
    path = environ.get(ENV_CONFIG)
    if not path:
        return Config()
    fields = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line (expected key=value): {line!r}")
            key, _, value = line.partition("=")
            fields[key.strip()] = value.strip()
    known = {
        "hurwitz_tol": float,
        "default_n": int,
        "grid_step": float,
        "output_format": str,
    }
    kwargs = {}
    for key, value in fields.items():
        if key not in known:
            raise ValueError(f"unknown config key {key!r}")
        kwargs[key] = known[key](value)
    return Config(**kwargs).validate()


def parse_complex_s(text: str) -> complex:
    """Parse 'sigma+ti' literals: '0.5', '0.5+2i', '-1.5-0.25i', '2i'."""
    cleaned = text.strip().replace(" ", "").replace("I", "i").replace("j", "i")
    try:
        return complex(cleaned.replace("i", "j"))
    except ValueError:
        raise ValueError(f"cannot parse complex number from {text!r}") from None


def format_complex(z: complex) -> str:
    """'a+bi' with round-trippable float fields."""
    re, im = z.real, z.imag
    sign = "+" if im >= 0 or im != im else "-"
    return f"{re!r}{sign}{abs(im)!r}i"


def _json_complex(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _emit_table(headers, rows, out) -> None:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    for r, row in enumerate(cells):
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip(), file=out)
        if r == 0:
            print("  ".join("-" * w for w in widths), file=out)


def _emit_csv(headers, rows, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)


def _emit(headers, rows, json_payload, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(json_payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        _emit_csv(headers, rows, out)
    else:
        _emit_table(headers, rows, out)


def _select_character(q: int, k: int):
    chars = enumerate_real_characters(q)
    if not 0 <= k < len(chars):
        raise ValueError(
            f"character index {k} out of range: modulus {q} has "
            f"{len(chars)} real characters (indices 0..{len(chars) - 1})"
        )
    return chars[k]


def _values_cell(chi) -> str:
    def one(v):
        if isinstance(v, int):
            return str(v)
        return f"({v[0]},{v[1]})"

    return ";".join(one(v) for v in chi.values)


def _cmd_characters(args, config: Config, out) -> int:
    if args.q < 1:
        raise ValueError(f"modulus must be >= 1, got {args.q}")
    chars = enumerate_real_characters(args.q) if args.real else enumerate_characters(args.q)
    headers = ["q", "index", "real", "principal", "conductor", "values"]
    rows = [
        [c.modulus, i, c.is_real, c.is_principal, c.conductor, _values_cell(c)]
        for i, c in enumerate(chars)
    ]
    _emit(headers, rows, [c.to_json_dict() for c in chars], args.format, out)
    return EXIT_OK


def _cmd_lfun_eval(args, config: Config, out) -> int:
    chi = _select_character(args.q, args.k)
    s = parse_complex_s(args.s)
    ev = evaluate(chi, s, tol=args.tol)
    headers = ["q", "k", "s", "value", "method", "n_used", "err_estimate"]
    rows = [
        [
            args.q,
            args.k,
            format_complex(s),
            format_complex(ev.value),
            ev.method,
            ev.n_used,
            repr(ev.err_estimate),
        ]
    ]
    payload = {
        "q": args.q,
        "k": args.k,
        "s": _json_complex(s),
        "value": _json_complex(ev.value),
        "method": ev.method,
        "n_used": ev.n_used,
        "err_estimate": ev.err_estimate,
    }
    _emit(headers, rows, payload, args.format, out)
    return EXIT_OK


def _cmd_lfun_scan(args, config: Config, out) -> int:
    chi = _select_character(args.q, args.k)
    step = args.grid_step
    lo = args.lo if args.lo is not None else step
    hi = args.hi if args.hi is not None else 1.0 - step
    points = args.grid_points
    if points is None:
        points = round((hi - lo) / step) + 1
    result = scan_zeros(chi, lo, hi, points, args.tol)
    headers = ["q", "char_index", "sigma", "L_value", "err_estimate"]
    rows = [
        [args.q, args.k, repr(sig), repr(val), repr(err)]
        for sig, val, err in zip(result.sigmas, result.values, result.err_estimates)
    ]
    payload = {
        "q": args.q,
        "k": args.k,
        "rows": [
            {"sigma": sig, "L_value": val, "err_estimate": err}
            for sig, val, err in zip(result.sigmas, result.values, result.err_estimates)
        ],
        "brackets": [
            {"lo": b.lo, "hi": b.hi, "root": b.root} for b in result.brackets
        ],
        "min_abs": result.min_abs,
        "argmin_sigma": result.argmin_sigma,
    }
    _emit(headers, rows, payload, args.format, out)
    if args.format == "table":
        print(
            f"min |L| = {result.min_abs!r} at sigma = {result.argmin_sigma!r}; "
            f"sign changes: {len(result.brackets)}",
            file=out,
        )
        for b in result.brackets:
            print(f"  bracket [{b.lo!r}, {b.hi!r}] root {b.root!r}", file=out)
    return EXIT_FINDING if result.found_sign_change else EXIT_OK


def _cmd_geom_verify(args, config: Config, out) -> int:
    checks = cgeom.verify_appendix()
    headers = ["example", "quantity", "computed", "expected", "residual", "status"]
    rows = [
        [
            c.example,
            c.quantity,
            format_complex(c.computed),
            format_complex(c.expected),
            f"{c.residual:.3e}",
            "pass" if c.ok else "FAIL",
        ]
        for c in checks
    ]
    payload = [
        {
            "example": c.example,
            "quantity": c.quantity,
            "computed": _json_complex(c.computed),
            "expected": _json_complex(c.expected),
            "residual": c.residual,
            "ok": c.ok,
        }
        for c in checks
    ]
    _emit(headers, rows, payload, args.format, out)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FINDING


def _cmd_pappus_check(args, config: Config, out) -> int:
    chi = _select_character(args.q, args.k)
    s = parse_complex_s(args.s)
    report = pappus_check(chi, s, args.N)
    headers = ["q", "k", "s", "N", "S", "V", "xi", "eta", "residual"]
    rows = [
        [
            args.q,
            args.k,
            format_complex(s),
            args.N,
            format_complex(report.profile_area),
            format_complex(report.volume),
            format_complex(report.xi),
            format_complex(report.eta),
            repr(report.residual),
        ]
    ]
    payload = {"q": args.q, "k": args.k, "s": _json_complex(s), "N": args.N}
    payload.update(report.to_json_dict())
    _emit(headers, rows, payload, args.format, out)
    return EXIT_OK


def _cmd_audit(args, config: Config, out) -> int:
    chi = _select_character(args.q, args.k)
    s = parse_complex_s(args.s)
    truncations = args.N
    claims = audit_mod.run_audit(
        chi, s, truncations, grid_step=args.grid_step, scan_tol=args.tol
    )
    headers = ["claim_id", "verdict", "evidence_points", "note"]
    rows = [[c.claim_id, c.verdict, len(c.evidence), c.note] for c in claims]
    _emit(headers, rows, [c.to_json_dict() for c in claims], args.format, out)
    return EXIT_OK


def _cmd_survey(args, config: Config, out) -> int:
    if args.qmax < 1:
        raise ValueError(f"--qmax must be >= 1, got {args.qmax}")
    rows_data = audit_mod.nonvanishing_survey(args.qmax, args.grid_step, args.tol)
    headers = ["q", "char_index", "min_abs", "argmin_sigma", "sign_changes"]
    rows = [
        [r.q, r.char_index, repr(r.min_abs), repr(r.argmin_sigma), r.sign_changes]
        for r in rows_data
    ]
    _emit(headers, rows, [r.to_json_dict() for r in rows_data], args.format, out)
    found = any(r.sign_changes for r in rows_data)
    return EXIT_FINDING if found else EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def build_parser(config: Config) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lseries-lab",
        description="Dirichlet character L-series lab: exact characters, "
        "continued L-values, zero scans, and truncation audits (data export only).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=FORMATS,
            default=config.output_format,
            help=f"output format (default {config.output_format})",
        )

    def add_selector(p):
        p.add_argument("-q", type=int, required=True, help="character modulus")
        p.add_argument(
            "-k",
            type=int,
            required=True,
            help="index into the real character enumeration mod q (0 = principal)",
        )

    p_chars = sub.add_parser("characters", help="list characters mod q")
    p_chars.add_argument("q", type=int, help="modulus")
    p_chars.add_argument(
        "--real", action="store_true", help="only the real enumeration (what -k indexes)"
    )
    add_format(p_chars)
    p_chars.set_defaults(func=_cmd_characters)

    p_lfun = sub.add_parser("lfun", help="L-function evaluation and scanning")
    lfun_sub = p_lfun.add_subparsers(dest="subcommand", required=True)

    p_eval = lfun_sub.add_parser("eval", help="evaluate L(s, chi)")
    add_selector(p_eval)
    p_eval.add_argument("-s", required=True, help="point, e.g. '1', '0.5+2i'")
    p_eval.add_argument(
        "--tol", type=float, default=config.hurwitz_tol, help="evaluation tolerance"
    )
    add_format(p_eval)
    p_eval.set_defaults(func=_cmd_lfun_eval)

    p_scan = lfun_sub.add_parser("scan", help="scan L(sigma, chi) on (0, 1)")
    add_selector(p_scan)
    p_scan.add_argument("--lo", type=float, default=None, help="grid start (default grid step)")
    p_scan.add_argument("--hi", type=float, default=None, help="grid end (default 1 - step)")
    p_scan.add_argument(
        "--grid-step",
        type=float,
        default=config.grid_step,
        help=f"grid spacing (default {config.grid_step})",
    )
    p_scan.add_argument(
        "--grid-points", type=int, default=None, help="explicit point count (overrides step)"
    )
    p_scan.add_argument("--tol", type=float, default=1e-9, help="bisection width tolerance")
    add_format(p_scan)
    p_scan.set_defaults(func=_cmd_lfun_scan)

    p_geom = sub.add_parser("geom", help="bilinear-geometry checks")
    geom_sub = p_geom.add_subparsers(dest="subcommand", required=True)
    p_verify = geom_sub.add_parser(
        "verify-appendix", help="recompute the golden worked-example table"
    )
    add_format(p_verify)
    p_verify.set_defaults(func=_cmd_geom_verify)

    p_pappus = sub.add_parser("pappus", help="solid-of-revolution identity")
    pappus_sub = p_pappus.add_subparsers(dest="subcommand", required=True)
    p_check = pappus_sub.add_parser("check", help="check V = 2 pi eta S at truncation N")
    add_selector(p_check)
    p_check.add_argument("-s", required=True, help="point, e.g. '0.7'")
    p_check.add_argument(
        "-N", type=int, default=config.default_n, help=f"truncation (default {config.default_n})"
    )
    add_format(p_check)
    p_check.set_defaults(func=_cmd_pappus_check)

    p_audit = sub.add_parser("audit", help="run the eight-claim truncation audit")
    add_selector(p_audit)
    p_audit.add_argument("-s", required=True, help="point, e.g. '0.5+0i'")
    default_ns = sorted({max(1, config.default_n // 100), max(1, config.default_n // 10), config.default_n})
    p_audit.add_argument(
        "-N",
        type=_int_list,
        default=default_ns,
        help=f"comma-separated truncations (default {','.join(map(str, default_ns))})",
    )
    p_audit.add_argument(
        "--grid-step", type=float, default=config.grid_step, help="scan grid spacing"
    )
    p_audit.add_argument("--tol", type=float, default=1e-9, help="scan bisection tolerance")
    add_format(p_audit)
    p_audit.set_defaults(func=_cmd_audit)

    p_survey = sub.add_parser(
        "survey", help="min |L| survey over real non-principal characters"
    )
    p_survey.add_argument("--qmax", type=int, required=True, help="largest modulus")
    p_survey.add_argument(
        "--grid-step", type=float, default=config.grid_step, help="scan grid spacing"
    )
    p_survey.add_argument("--tol", type=float, default=1e-9, help="scan bisection tolerance")
    add_format(p_survey)
    p_survey.set_defaults(func=_cmd_survey)

    return parser


def main(argv=None, out=None) -> int:
    """Entry point; returns the process exit code."""
    out = sys.stdout if out is None else out
    try:
        config = load_config()
    except (OSError, ValueError) as exc:
        print(f"error: bad config ({exc})", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(config)
    args = parser.parse_args(argv)
    try:
        return args.func(args, config, out)
    except (
        PoleError,
        ContinuationRangeError,
        NonRealCharacterError,
        ScanGridError,
        ZeroAreaError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
