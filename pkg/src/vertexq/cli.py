"""Command-line surface: vertex | verify | series | oracles.

Output is deterministic byte-for-byte for a fixed configuration: JSON keys
are sorted and rationals render as "num/den".  Exit codes: 0 pass, 1 failure,
2 inconclusive, 3 usage or configuration error.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import lattice_denom_for, mutations
from .errors import VertexqError
from .qscalar import QRing
from .reports import jsonable, merge_status
from .suites import SUITES, RunConfig, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (flags override it)")
    common.add_argument("--window", type=int, help="truncation width in lattice units")
    common.add_argument("--lattice-denom", type=int, help="exponent lattice denominator L")
    common.add_argument("--min-width", type=int, help="minimum conclusive window width")
    common.add_argument("--fock-cutoff", type=int, help="state-weight bound D for operator checks")
    common.add_argument("--jobs", type=int, help="parallel workers for triple sweeps")
    common.add_argument("--out", help="write the JSON/CSV result to this path")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument(
        "--mutate",
        action="append",
        default=[],
        metavar="NAME",
        help="enable a negative-control mutation (test-only)",
    )

    p = argparse.ArgumentParser(
        prog="vertexq",
        description="Exact q-series computations and verification suites "
        "for the topological vertex.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser(
        "vertex", parents=[common], help="compute C, tildeC and the theorem-1 comparison"
    )
    pv.add_argument("--mu", required=True, help='triple as JSON, e.g. "[[1],[],[]]"')
    pv.add_argument("--tau", default=None, help="also cross-check through the fermionic kernel")
    pv.add_argument("--check", choices=("theorem1",), default="theorem1")

    pw = sub.add_parser("verify", parents=[common], help="run a verification suite")
    pw.add_argument("suite", choices=sorted(SUITES) + ["all"])
    pw.add_argument("--weight", type=int, help="triple weight bound")
    pw.add_argument("--degree", type=int, help="t-weighted degree bound")
    pw.add_argument("--N", type=int, action="append", dest="N_list", help="reduction order(s)")

    ps = sub.add_parser("series", parents=[common], help="emit a truncated generating function")
    ps.add_argument("kind", choices=("W", "expG", "tau"))
    ps.add_argument("--tau", default="1")
    ps.add_argument("--N", type=int, default=1)
    ps.add_argument("--weight", type=int, default=2, help="per-family weight bound")
    ps.add_argument("--degree", type=int, default=4, help="t-degree bound for tau series")

    po = sub.add_parser("oracles", parents=[common], help="run the brute-force oracle battery")
    po.add_argument("--full", action="store_true", help="documented full ranges")
    po.add_argument("--scope", help="comma-separated subset of oracle targets")
    return p


def _parse_fraction(text):
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _config_from(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
        for key, value in data.items():
            if key == "taus":
                value = tuple(_parse_fraction(v) for v in value)
            elif key in ("Ns", "series_bounds", "mutate"):
                value = tuple(value)
            if not hasattr(cfg, key):
                raise VertexqError(f"unknown config key {key!r}")
            setattr(cfg, key, value)
    if args.window is not None:
        cfg.window = args.window
    if args.lattice_denom is not None:
        cfg.lattice_denom = args.lattice_denom
    if args.min_width is not None:
        cfg.min_width = args.min_width
    if args.fock_cutoff is not None:
        cfg.fock_cutoff = args.fock_cutoff
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if args.mutate:
        cfg.mutate = tuple(args.mutate)
    if getattr(args, "weight", None) is not None:
        cfg.weight_bound = args.weight
    if getattr(args, "degree", None) is not None:
        cfg.t_degree = args.degree
    if getattr(args, "N_list", None):
        cfg.Ns = tuple(args.N_list)
    return cfg


def _emit(args, payload, csv_rows=None) -> None:
    if args.format == "csv" and csv_rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in csv_rows:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        text = json.dumps(jsonable(payload), sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _qscalar_csv_rows(name, value):
    L2 = 2 * value.ring.lattice_denom
    rows = []
    for u in sorted(value.coeffs):
        rows.append((name, str(Fraction(u, L2)), str(value.coeffs[u])))
    return rows


def cmd_vertex(args) -> int:
    from .partitions import as_partition
    from .vertex import theorem1_pair, vertex_C, vertex_C_via_fock

    cfg = _config_from(args)
    try:
        mu = json.loads(args.mu)
        triple = tuple(as_partition(m) for m in mu)
        if len(triple) != 3:
            raise ValueError("need exactly three partitions")
    except (ValueError, TypeError) as exc:
        sys.stderr.write(f"--mu parse error: {exc}\n")
        return EXIT_USAGE
    taus = [1] + ([_parse_fraction(args.tau)] if args.tau else [])
    ring = cfg.ring_for(taus)
    lhs, rhs = theorem1_pair(ring, triple)
    cmp = lhs.compare(rhs, cfg.min_width)
    payload = {
        "mu": [list(m) for m in triple],
        "C": vertex_C(ring, triple).to_json(),
        "tildeC": lhs.to_json(),
        "theorem1": cmp.status,
        "config": cfg.to_json(),
    }
    rows = _qscalar_csv_rows("C", vertex_C(ring, triple)) + _qscalar_csv_rows("tildeC", lhs)
    if args.tau:
        via = vertex_C_via_fock(ring, triple, _parse_fraction(args.tau))
        payload["C_via_fock_tau"] = str(args.tau)
        payload["fock_agrees"] = via.compare(vertex_C(ring, triple), cfg.min_width).status
    _emit(args, payload, rows)
    return _status_code(cmp.status if "fock_agrees" not in payload else merge_status([cmp.status, payload["fock_agrees"]]))


def _status_code(status: str) -> int:
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[status]


def cmd_verify(args) -> int:
    cfg = _config_from(args)
    for name in cfg.mutate:
        if name not in mutations.KNOWN_MUTATIONS:
            sys.stderr.write(f"unknown mutation {name!r}\n")
            return EXIT_USAGE
    payload, timings = run_suite(args.suite, cfg)
    for suite_name, secs in timings.items():
        sys.stderr.write(f"[{suite_name}] {secs}s\n")
    rows = [("check", "status", "pairs")] + [
        (c["identity"], c["status"], c["pairs_checked"]) for c in payload["checks"]
    ]
    _emit(args, payload, rows)
    return _status_code(payload["status"])


def cmd_series(args) -> int:
    from .hodge import W_coefficients, expG_coefficients
    from .kp import build_tau

    cfg = _config_from(args)
    tau = _parse_fraction(args.tau)
    if args.kind == "tau":
        ring = cfg.ring_for([args.N])
        series = build_tau(ring, args.N, None, ("formal", 2), args.degree)
        meta = {"kind": "tau", "N": args.N, "degree": args.degree}
    else:
        ring = cfg.ring_for([tau])
        bounds = (args.weight,) * 3
        fn = W_coefficients if args.kind == "W" else expG_coefficients
        series = fn(ring, tau, bounds)
        meta = {"kind": args.kind, "tau": str(tau), "weight": args.weight}
    payload = {**meta, "config": cfg.to_json(), "series": series.to_json()}
    rows = [("monomial", "exponent", "coeff")]
    for key, coeff in series.sorted_terms():
        mono = json.dumps([list(p) for p in key])
        L2 = 2 * ring.lattice_denom
        for u in sorted(coeff.coeffs):
            rows.append((mono, str(Fraction(u, L2)), str(coeff.coeffs[u])))
    _emit(args, payload, rows)
    return EXIT_PASS


def cmd_oracles(args) -> int:
    cfg = _config_from(args)
    cfg.full = bool(args.full)
    from .suites import suite_oracles

    reports = suite_oracles(cfg)
    if args.scope:
        wanted = {f"oracle:{s.strip()}" for s in args.scope.split(",")}
        reports = [r for r in reports if r.identity in wanted]
    status = merge_status(r.status for r in reports)
    payload = {
        "suite": "oracles",
        "status": status,
        "config": cfg.to_json(),
        "checks": [r.to_json() for r in reports],
    }
    _emit(args, payload, [(r.identity, r.status, r.pairs_checked) for r in reports])
    return _status_code(status)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "vertex":
            return cmd_vertex(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "series":
            return cmd_series(args)
        if args.command == "oracles":
            return cmd_oracles(args)
    except VertexqError as exc:
        sys.stderr.write(f"error: {exc}\n")
        hint = getattr(exc, "feasible", None)
        if hint:
            sys.stderr.write(f"feasible range: {hint}\n")
        return EXIT_USAGE
    parser.error("unknown command")
    return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
