"""Command-line front end: ``lrslist <command> ...``.

Reports are JSON objects ``{command, inputs, outputs, versions}`` with sorted
keys; tables can be emitted as CSV instead. Exit codes: 0 success, 1 a
verification failed, 2 usage or spec error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import sys
from fractions import Fraction
from importlib import metadata

import numpy as np

from . import bounds, checks
from .errors import EnumerationTooLarge, InvariantViolation, LrsError
from .lrs import (
    DEFAULT_MAX_ENUM,
    code_from_spec,
    code_to_spec,
    encode,
    list_size_oracle,
    min_distance_exhaustive,
)
from .skewpoly import SkewPoly

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
_SAFE_INT = 1 << 53


class VerificationFailed(Exception):
    def __init__(self, report: dict):
        super().__init__("verification failed")
        self.report = report


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def _plain(x):
    """JSON-ready copy: Fractions and large ints become strings."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        x = int(x)
        return str(x) if abs(x) >= _SAFE_INT else x
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, Fraction):
        return str(x)
    return x


def make_report(command: str, inputs: dict, outputs: dict) -> dict:
    inputs = _plain(inputs)
    digest = hashlib.sha256(json.dumps(inputs, sort_keys=True).encode()).hexdigest()
    return {
        "command": command,
        "inputs": inputs,
        "outputs": _plain(outputs),
        "versions": {"artifact": _version(), "inputs_sha256": digest},
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _load_spec(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


# -- commands --

def cmd_encode(args) -> str:
    spec = _load_spec(args.spec)
    code = code_from_spec(spec)
    coeffs = json.loads(args.message)
    f = SkewPoly(code.sigma, [code.tower.elem(c) for c in coeffs])
    cw = encode(code, f)
    return dumps(make_report("encode", {"spec": code_to_spec(code), "message": coeffs},
                             {"codeword": cw.to_record()}))


def cmd_mindist(args) -> str:
    code = code_from_spec(_load_spec(args.spec))
    d = min_distance_exhaustive(code, args.max_enum)
    return dumps(make_report("mindist", {"spec": code_to_spec(code)},
                             {"min_distance": d, "singleton": code.n - code.k + 1,
                              "msrd": d == code.n - code.k + 1}))


def cmd_oracle(args) -> str:
    code = code_from_spec(_load_spec(args.spec))
    res = list_size_oracle(code, args.tau, args.strategy, max_enum=args.max_enum)
    out = res.to_record()
    out["verified"] = res.verify()
    report = make_report("oracle", {"spec": code_to_spec(code), "tau": args.tau,
                                    "strategy": args.strategy}, out)
    if not out["verified"]:
        raise VerificationFailed(report)
    return dumps(report)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise LrsError("missing parameter(s): " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def cmd_bound(args) -> str:
    kind = args.kind
    inputs = {k: v for k, v in vars(args).items()
              if k in ("q", "ell", "m", "eta", "d", "tau", "t", "n", "k", "g", "eps", "R", "a", "C", "D")
              and v is not None}
    if kind == "theorem1":
        out = bounds.theorem1_bound(*_need(args, "ell", "eta", "m", "q", "d", "tau")).to_record()
    elif kind == "lemma2":
        out = bounds.lemma2_bound(*_need(args, "t", "ell", "eta", "m", "q")).to_record()
    elif kind == "corollary1":
        ell, m, n, d, q, eps = _need(args, "ell", "m", "n", "d", "q", "eps")
        r = bounds.corollary1_radius(ell, m, n, d, q, eps)
        c = math.ceil(r - 1e-12)
        out = {"radius": r, "ceiling": c, "target_exponent": eps * n / ell}
        if c < d and n % ell == 0:
            out["theorem1_at_ceiling"] = bounds.theorem1_bound(ell, n // ell, m, q, d, c).to_record()
    elif kind == "corollary2":
        R, ell, n, eps = _need(args, "R", "ell", "n", "eps")
        out = {"radius": bounds.corollary2_radius(R, ell, n, eps)}
    elif kind == "corollary3":
        R, a, q, eps = _need(args, "R", "a", "q", "eps")
        zeta, delta, b = bounds.corollary3_params(R, a, q, eps)
        out = {"zeta": zeta, "delta": delta, "b": b}
    elif kind == "corollary4":
        ell, eta, m, q, g, tau = _need(args, "ell", "eta", "m", "q", "g", "tau")
        out = bounds.corollary4_bound(ell, eta, m, q, g, tau, args.k).to_record()
    elif kind == "theorem2":
        out = bounds.theorem2_bound(*_need(args, "ell", "eta", "m", "q", "g", "tau")).to_record()
    elif kind == "theorem3":
        ell, C, D, g, q = _need(args, "ell", "C", "D", "g", "q")
        inst = bounds.construction1_instance(bounds.FamilyParams(ell, C, D, g), q)
        out = {"instance": inst.to_record(), "bound": inst.bound().to_record()}
    else:  # pragma: no cover - argparse restricts choices
        raise LrsError(f"unknown bound kind {kind}")
    return dumps(make_report(f"bound {kind}", inputs, out))


def cmd_witness(args) -> str:
    code = code_from_spec(_load_spec(args.spec))
    if args.sparsity:
        params = bounds.SparseSetParams(code.pair, args.sparsity, args.tau)
        S = bounds.sparse_set_enumerate(params, as_array=True, cap=args.max_enum)
        source = f"sparse set, g={args.sparsity}"
    else:
        S = bounds.dense_low_weight_set(code, args.tau, args.max_enum)
        source = "all polynomials of image weight <= tau"
    w = bounds.pigeonhole_witness(code, S, args.tau)
    out = w.to_record()
    out["source"] = source
    out["verified"] = w.verify()
    return dumps(make_report("witness", {"spec": code_to_spec(code), "tau": args.tau,
                                         "sparsity": args.sparsity}, out))


def cmd_table1(args) -> str:
    ells = _parse_range(args.ell)
    searches = [bounds.minimize_rate(ell) for ell in ells]
    rows = [s.to_row() for s in searches]
    header = ["ell", "rate_numerator", "rate_denominator", "rate_decimal_6dp", "C", "D"]
    if args.format == "csv":
        return _csv(header, [[r[h] for h in header] for r in rows])
    note = ("for each ell the scan over C stops at the first C with 1 - 2/sqrt(C-1) >= best rate; "
            "every later C has 1 - 2D/C > 1 - 2/sqrt(C-1) >= best")
    for r, s in zip(rows, searches):
        r["search_stopped_at_C"] = s.last_C
    return dumps(make_report("table1", {"ell": ells}, {"rows": rows, "search_bound": note}))


def cmd_regions(args) -> str:
    grid = [i / args.steps for i in range(args.steps + 1)] if args.R is None else \
        [float(v) for v in args.R.split(",")]
    rows = bounds.emit_region_data(grid)
    if args.format == "csv":
        return _csv(["R", "johnson", "unique"], [[f"{v:.6f}" for v in r] for r in rows])
    return dumps(make_report("regions", {"R": grid},
                             {"rows": [dict(R=a, johnson=b, unique=c) for a, b, c in rows]}))


def cmd_verify(args) -> str:
    names = args.suites or ["all"]
    unknown = [n for n in names if n != "all" and n not in checks.SUITES]
    if unknown:
        raise LrsError(f"unknown suite(s) {unknown}; choose from {sorted(checks.SUITES)} or all")
    results = checks.run_suites(names, args.max_enum, args.seed)
    out = {"suites": [r.to_record() for r in results],
           "passed": all(r.passed for r in results)}
    report = make_report("verify", {"suites": names, "seed": args.seed, "max_enum": args.max_enum}, out)
    if not out["passed"]:
        raise VerificationFailed(report)
    return dumps(report)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                        help="cap on exhaustive enumerations (default 2^20)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised suites")

    ap = argparse.ArgumentParser(prog="lrslist", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="encode a message polynomial")
    p.add_argument("--spec", required=True)
    p.add_argument("--message", required=True,
                   help="JSON list of coefficients, each a coordinate list or integer code")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("mindist", parents=[common], help="exhaustive minimum distance")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("oracle", parents=[common], help="exact maximum list size")
    p.add_argument("--spec", required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--strategy", choices=("cosets", "all"), default="cosets")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bound", parents=[common], help="evaluate a list-size bound")
    p.add_argument("kind", choices=("theorem1", "lemma2", "corollary1", "corollary2",
                                    "corollary3", "corollary4", "theorem2", "theorem3"))
    for name in ("q", "ell", "m", "eta", "d", "tau", "t", "n", "k", "g", "C", "D"):
        p.add_argument(f"--{name}", type=int)
    for name in ("eps", "R", "a"):
        p.add_argument(f"--{name}", type=float)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("witness", parents=[common], help="pigeonhole list witness")
    p.add_argument("--spec", required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--sparsity", type=int, default=0, help="use the g-sparse set instead")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("table1", parents=[common], help="minimal family rates per ell")
    p.add_argument("--ell", default="1..20", help="range like 1..20 or list like 1,2,5")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("regions", parents=[common], help="Johnson and unique-decoding curves")
    p.add_argument("--R", default=None, help="comma-separated rates")
    p.add_argument("--steps", type=int, default=20)
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("verify", parents=[common], help="run named property suites")
    p.add_argument("suites", nargs="*", help=f"any of {sorted(checks.SUITES)} or all")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        stdout.write(args.func(args))
        return EXIT_OK
    except VerificationFailed as exc:
        stdout.write(dumps(exc.report))
        return EXIT_FAILED
    except InvariantViolation as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_FAILED
    except EnumerationTooLarge as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (LrsError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
