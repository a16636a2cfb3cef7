"""``qcong`` command line.

Exit status: 0 when every check passes, 1 on a verification failure,
2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from qcong import __version__, claims, dissect, qexpr, residues, verify
from qcong.oracle import OracleLimitError
from qcong.products import DomainError
from qcong.report import VerificationReport
from qcong.series import SeriesError, reduce_mod

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"LO..HI"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI or an integer, got {text!r}")


def _write_json(path: str | None, command: str, reports: list[VerificationReport], **extra) -> None:
    if not path:
        return
    doc = {
        "artifact_version": __version__,
        "command": command,
        "reports": [r.to_dict() for r in reports],
    }
    doc.update(extra)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _finish(args, reports: list[VerificationReport], **extra) -> int:
    for r in reports:
        print(r.describe())
    ok = all(r.passed for r in reports)
    print(f"{sum(r.passed for r in reports)}/{len(reports)} passed")
    _write_json(args.json, args.command, reports, **extra)
    return EXIT_OK if ok else EXIT_FAIL


def _print_series(coeffs) -> None:
    for n, c in enumerate(coeffs):
        print(f"{n:>6}  {c}")


def cmd_expand(args) -> int:
    s = qexpr.evaluate(args.expr, args.order)
    if args.mod is not None:
        s = reduce_mod(s, args.mod)
    _print_series(s.coeffs)
    _write_json(args.json, "expand", [], series=[str(c) for c in s.coeffs])
    return EXIT_OK


def cmd_dissect(args) -> int:
    s = qexpr.evaluate(args.expr, args.order)
    piece = dissect.extract(s, dissect.Progression(args.mod_a, args.residue))
    _print_series(piece.coeffs)
    _write_json(args.json, "dissect", [], series=[str(c) for c in piece.coeffs])
    return EXIT_OK


def cmd_identities(args) -> int:
    fixtures = dissect.load_fixtures(args.fixture_file)
    return _finish(args, dissect.run_fixtures(fixtures, args.order))


def cmd_theorem(args) -> int:
    ranges = {
        name: getattr(args, name)
        for name in ("alpha", "beta", "k", "i")
        if getattr(args, name) is not None
    }
    if args.claim:
        if args.claim not in claims.REGISTRY:
            raise UsageError(f"unknown claim {args.claim!r}")
        claim = claims.REGISTRY[args.claim]
        if args.theorem not in ("all", claim.theorem):
            raise UsageError(f"claim {claim.id} belongs to {claim.theorem}, not {args.theorem}")
        order = args.order or verify.DEFAULT_ORDERS[claim.theorem]
        # explicit points go straight to verify_claim so a bad point is rejected, not skipped
        points = _cartesian(claim, ranges) if ranges else claims.sweep_points(claim, {}, args.explore)
        reports = [
            verify.verify_claim(claim, p, order, args.min_instances, args.explore) for p in points
        ]
    else:
        reports = verify.verify_theorem_suite(
            args.theorem, ranges, args.order, args.min_instances, args.explore, args.workers
        )
    if not reports:
        raise UsageError("no admissible parameter points in the given ranges")
    return _finish(args, reports)


def _cartesian(claim, ranges) -> list[dict[str, int]]:
    points = [{}]
    for name, default in claim.sweep.items():
        grown = []
        for p in points:
            values = ranges.get(name) or (default(p) if callable(default) else default)
            grown.extend({**p, name: v} for v in values)
        points = grown
    return points


def cmd_oracle(args) -> int:
    return _finish(args, [verify.oracle_crosscheck(args.l1, args.l2, args.n_max)])


def cmd_residues(args) -> int:
    reports = []
    for case in residues.PARITY_CASES:
        print(f"alpha {case[0]}, beta {case[1]}:")
        for fam in residues.FAMILIES:
            got = residues.residue_table(fam, *case)
            want = residues.PRINTED[case][fam]
            mark = "ok" if got == want else "MISMATCH"
            print(f"  {fam:<20} {sorted(got)!s:<22} printed {sorted(want)!s:<22} {mark}")
            missing = sorted(got ^ want)
            reports.append(
                VerificationReport(
                    claim_id=f"residues[{fam}]",
                    params={"alpha_odd": int(case[0] == "odd"), "beta_odd": int(case[1] == "odd")},
                    order=12,
                    status="pass" if got == want else "fail",
                    instances_checked=1,
                    first_violation=None if got == want else (missing[0], 0),
                    modulus=12,
                )
            )
    return _finish(args, reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcong", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_default):
        p.add_argument("--order", type=int, default=order_default, help="truncation order N")
        p.add_argument("--json", metavar="PATH", help="write a JSON report")

    p = sub.add_parser("expand", help="print the coefficients of an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--mod", type=int)
    common(p, 20)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("dissect", help="print coefficients a*n+b of an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--mod-a", type=int, required=True)
    p.add_argument("--residue", type=int, required=True)
    common(p, 100)
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("identities", help="run the identity fixtures")
    p.add_argument("--fixture-file", metavar="PATH")
    common(p, None)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("theorem", help="sweep a theorem's congruence families")
    p.add_argument("theorem", choices=claims.THEOREMS + ("all",))
    p.add_argument("--claim", help="restrict to one claim id; out-of-hypothesis points are errors")
    for name in ("alpha", "beta", "k", "i"):
        p.add_argument(f"--{name}", type=parse_range, metavar="LO..HI")
    p.add_argument("--explore", action="store_true", help="also report points outside the hypothesis")
    p.add_argument("--min-instances", type=int, default=verify.DEFAULT_MIN_INSTANCES)
    p.add_argument("--workers", type=int, default=1)
    common(p, None)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("oracle", help="cross-check the generating function against direct counting")
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("residues", help="reproduce the mod-12 residue tables")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_residues)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (
        UsageError,
        claims.RejectedParametersError,
        qexpr.QExprError,
        dissect.FixtureError,
        SeriesError,
        DomainError,
        OracleLimitError,
        OSError,
    ) as exc:
        print(f"qcong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
