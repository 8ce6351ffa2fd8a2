"""Command-line front end: generation, certification, series expansion, and
cross-verification with machine-readable output.

Subcommands: gen, matrix, stieltjes, hankel-det, tp, series, verify,
catalog.  Every number prints as an exact integer or "p/q" string; --format
selects text, json, or csv.  Exit codes: 0 for success or PASS, 1 for a
checked FAIL (or a certification that came back FALSE or INCONCLUSIVE), 2
for usage and parse errors.  The MOMENTS_BUDGET environment variable
overrides the minor-enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .exact import DEFAULT_MINOR_BUDGET, FALSE, TRUE, as_rat, det_bareiss, format_rat
from .hankel import (
    PASS,
    MomentSequence,
    build_hankel,
    hankel_det_product,
    stieltjes_check,
    verify_H_eq_RTRt,
)
from .jacobi import (
    JacobiMatrix,
    JacobiParams,
    leading_minors,
    tp_certify,
    tp_criterion_pqst,
)
from .recursive import (
    ORACLE_MAX_LENGTH,
    build_recursive,
    catalan_like,
    motzkin_oracle,
    verify_RJ_identity,
    verify_step_factorization,
)
from .seqspec import CATALOG, SequenceSpec, catalog_lookup, pqst_of
from .series import DEFAULT_ORDER, NamedGF, gf_expand, gf_from_json, gf_to_json

DEFAULT_DEPTH = 8


class UsageError(Exception):
    """Bad command-line input; reported on stderr with exit code 2."""


def _read_arg_payload(text: str) -> str:
    """Resolve @path arguments to file contents."""
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as handle:
                return handle.read()
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc}") from exc
    return text


def parse_spec_arg(text: str, expected_start: int, flag: str) -> SequenceSpec:
    payload = _read_arg_payload(text)
    try:
        data = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: not valid JSON: {exc}") from exc
    try:
        spec = SequenceSpec.from_json(data)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc
    if spec.start != expected_start:
        raise UsageError(f"{flag}: start must be {expected_start}, got {spec.start}")
    return spec


def parse_terms_arg(text: str) -> list[Fraction]:
    pieces = [p for p in re.split(r"[\s,]+", _read_arg_payload(text).strip()) if p]
    if not pieces:
        raise UsageError("--terms: no values given")
    try:
        return [as_rat(p) for p in pieces]
    except ValueError as exc:
        raise UsageError(f"--terms: {exc}") from exc


def parse_pqst_arg(text: str) -> JacobiParams:
    pieces = [p for p in re.split(r"[\s,]+", text.strip()) if p]
    if len(pieces) != 4:
        raise UsageError(f"--pqst: need exactly 4 values p,q,s,t, got {len(pieces)}")
    try:
        return JacobiParams(*[as_rat(p) for p in pieces])
    except ValueError as exc:
        raise UsageError(f"--pqst: {exc}") from exc


def parse_gf_arg(text: str):
    payload = _read_arg_payload(text)
    stripped = payload.strip()
    if not stripped.startswith("{"):
        try:
            return NamedGF(stripped)
        except ValueError as exc:
            raise UsageError(f"--gf: {exc}") from exc
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--gf: not valid JSON: {exc}") from exc
    try:
        return gf_from_json(data)
    except ValueError as exc:
        raise UsageError(f"--gf: {exc}") from exc


def resolve_weights(args) -> tuple[SequenceSpec, SequenceSpec, str | None]:
    """Weight pair from --name or --sigma/--tau, plus the name when named."""
    name = getattr(args, "name", None) or getattr(args, "jacobi_name", None)
    if name is not None:
        try:
            entry = catalog_lookup(name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from exc
        return entry.sigma, entry.tau, entry.name
    sigma_text = getattr(args, "sigma", None)
    tau_text = getattr(args, "tau", None)
    if sigma_text is None or tau_text is None:
        raise UsageError("provide either a catalog name or both --sigma and --tau")
    sigma = parse_spec_arg(sigma_text, 0, "--sigma")
    tau = parse_spec_arg(tau_text, 1, "--tau")
    return sigma, tau, None


def minor_budget() -> int:
    raw = os.environ.get("MOMENTS_BUDGET")
    if raw is None:
        return DEFAULT_MINOR_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"MOMENTS_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise UsageError(f"MOMENTS_BUDGET must be >= 1, got {value}")
    return value


def emit(text: str):
    print(text, end="" if text.endswith("\n") else "\n")


def cmd_gen(args) -> int:
    sigma, tau, name = resolve_weights(args)
    terms = catalan_like(sigma, tau, args.n)
    if args.format == "json":
        data = {
            "sigma": sigma.to_json(),
            "tau": tau.to_json(),
            "n": args.n,
            "terms": [format_rat(v) for v in terms],
        }
        if name:
            data = {"name": name, **data}
        emit(json.dumps(data))
    elif args.format == "csv":
        lines = ["n,term"] + [f"{i},{format_rat(v)}" for i, v in enumerate(terms)]
        emit("\n".join(lines))
    else:
        emit(" ".join(format_rat(v) for v in terms))
    return 0


def cmd_matrix(args) -> int:
    sigma, tau, name = resolve_weights(args)
    matrix = build_recursive(sigma, tau, args.n)
    if args.format == "json":
        data = matrix.to_json()
        if name:
            data = {"name": name, **data}
        emit(json.dumps(data))
    else:
        sep = "," if args.format == "csv" else " "
        emit("\n".join(sep.join(format_rat(v) for v in matrix.row(n))
                       for n in range(args.n + 1)))
    return 0


def _moment_sequence(args, count: int) -> tuple[MomentSequence, str | None]:
    terms_text = getattr(args, "terms", None)
    if terms_text is not None:
        return MomentSequence.from_terms(parse_terms_arg(terms_text)), None
    sigma, tau, name = resolve_weights(args)
    return MomentSequence.from_recurrence(sigma, tau, count), name


def cmd_stieltjes(args) -> int:
    seq, name = _moment_sequence(args, 2 * args.depth + 2)
    try:
        report = stieltjes_check(seq, args.depth)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        data = report.to_json()
        if name:
            data = {"name": name, **data}
        emit(json.dumps(data))
    elif args.format == "csv":
        emit(report.to_csv())
    else:
        emit(f"verdict: {report.verdict} (depth {report.depth})")
        emit("k det0 det1")
        for k in range(report.depth + 1):
            emit(f"{k} {format_rat(report.dets0[k])} {format_rat(report.dets1[k])}")
        if report.witness:
            w = report.witness
            emit(f"first negative: {w['family']} at k={w['k']} value {w['value']}")
    return 0 if report.verdict == PASS else 1


def cmd_hankel_det(args) -> int:
    sigma, tau, name = resolve_weights(args)
    seq = MomentSequence.from_recurrence(sigma, tau, 2 * args.depth + 1 + args.shift)
    rows = []
    all_match = True
    for k in range(args.depth + 1):
        det = det_bareiss(build_hankel(seq, k, args.shift))
        row = {"k": k, "det": format_rat(det)}
        if args.shift == 0:
            product = hankel_det_product(tau, k)
            row["product"] = format_rat(product)
            row["match"] = det == product
            all_match = all_match and det == product
        rows.append(row)
    if args.format == "json":
        data = {"depth": args.depth, "shift": args.shift, "rows": rows}
        if name:
            data = {"name": name, **data}
        emit(json.dumps(data))
    elif args.format == "csv":
        if args.shift == 0:
            lines = ["k,det,product,match"]
            lines += [f"{r['k']},{r['det']},{r['product']},{str(r['match']).lower()}"
                      for r in rows]
        else:
            lines = ["k,det"] + [f"{r['k']},{r['det']}" for r in rows]
        emit("\n".join(lines))
    else:
        for r in rows:
            if args.shift == 0:
                flag = "ok" if r["match"] else "MISMATCH"
                emit(f"k={r['k']} det={r['det']} product={r['product']} {flag}")
            else:
                emit(f"k={r['k']} det={r['det']}")
    return 0 if all_match else 1


def cmd_tp(args) -> int:
    if args.pqst is not None:
        params = parse_pqst_arg(args.pqst)
        report = tp_criterion_pqst(params)
        extra = {"params": params.to_json()}
    else:
        sigma, tau, name = resolve_weights(args)
        report = tp_certify(JacobiMatrix(sigma, tau), args.depth, minor_budget())
        extra = {"name": name} if name else {}
    data = {**extra, **report.to_json()}
    if args.format == "json":
        emit(json.dumps(data))
    elif args.format == "csv":
        lines = ["key,value"]
        lines += [f"{k},{json.dumps(v) if isinstance(v, dict) else v}"
                  for k, v in data.items() if v is not None]
        emit("\n".join(lines))
    else:
        emit(f"verdict: {report.verdict} (criterion {report.criterion}, "
             f"depth {report.depth})")
        if report.detail:
            emit(report.detail)
        if report.witness:
            emit(f"witness: rows {report.witness['rows']} cols {report.witness['cols']} "
                 f"value {report.witness['value']}")
    return 0 if report.verdict == TRUE else 1


def cmd_series(args) -> int:
    gf = parse_gf_arg(args.gf)
    try:
        series = gf_expand(gf, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    coeffs = [format_rat(c) for c in series.coeffs]
    if args.format == "json":
        emit(json.dumps({"spec": gf_to_json(gf), "order": args.n, "coeffs": coeffs}))
    elif args.format == "csv":
        emit("\n".join(["n,coeff"] + [f"{i},{c}" for i, c in enumerate(coeffs)]))
    else:
        emit(" ".join(coeffs))
    return 0


def verify_checks(name: str, depth: int, budget: int) -> list[tuple[str, bool]]:
    """The cross-check bundle for one catalog entry at one depth."""
    entry = catalog_lookup(name)
    sigma, tau = entry.sigma, entry.tau
    terms = catalan_like(sigma, tau, max(2 * depth + 1, 16))
    seq = MomentSequence.from_terms(terms, "recurrence")
    matrix = build_recursive(sigma, tau, depth)
    J = JacobiMatrix(sigma, tau)
    checks: list[tuple[str, bool]] = []

    checks.append(("reference_terms",
                   tuple(terms[:8]) == entry.reference_terms))
    oracle_depth = min(depth, 10, ORACLE_MAX_LENGTH)
    checks.append(("oracle", all(
        motzkin_oracle(sigma, tau, n) == terms[n] for n in range(oracle_depth + 1))))
    checks.append(("shift_identity", verify_RJ_identity(matrix, J, depth) == TRUE))
    checks.append(("step_factorization",
                   verify_step_factorization(sigma, tau, depth) == TRUE))
    checks.append(("hankel_factorization", verify_H_eq_RTRt(sigma, tau, depth) == TRUE))
    checks.append(("det_product", all(
        det_bareiss(build_hankel(seq, n, 0)) == hankel_det_product(tau, n)
        for n in range(depth + 1))))
    checks.append(("stieltjes", stieltjes_check(seq, depth).verdict == PASS))
    chain = leading_minors(J, depth)
    checks.append(("leading_minors_vs_det", all(
        chain.values[n] == det_bareiss(J.section(n)) for n in range(depth + 1))))
    checks.append(("tp_certified", tp_certify(J, depth, budget).verdict == TRUE))
    if entry.gf is not None:
        expansion = gf_expand(entry.gf, depth)
        checks.append(("gf_terms", list(expansion.coeffs) == terms[: depth + 1]))
    pqst = pqst_of(sigma, tau)
    if pqst is not None:
        from .series import riordan_column_check

        checks.append(("riordan_columns",
                       riordan_column_check(*pqst, order=depth,
                                            k_max=min(5, depth)) == TRUE))
    return checks


def cmd_verify(args) -> int:
    try:
        catalog_lookup(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    checks = verify_checks(args.name, args.depth, minor_budget())
    failed = [label for label, ok in checks if not ok]
    verdict = PASS if not failed else "FAIL"
    if args.format == "json":
        emit(json.dumps({
            "name": args.name,
            "depth": args.depth,
            "checks": [{"check": label, "status": "PASS" if ok else "FAIL"}
                       for label, ok in checks],
            "verdict": verdict,
        }))
    elif args.format == "csv":
        lines = ["check,status"]
        lines += [f"{label},{'PASS' if ok else 'FAIL'}" for label, ok in checks]
        emit("\n".join(lines))
    else:
        width = max(len(label) for label, _ in checks)
        for label, ok in checks:
            emit(f"{label:<{width}}  {'PASS' if ok else 'FAIL'}")
        emit(f"verdict: {verdict} (depth {args.depth})"
             + (f", first failing check: {failed[0]}" if failed else ""))
    return 0 if not failed else 1


def cmd_catalog(args) -> int:
    entries = list(CATALOG.values())
    if args.format == "json":
        emit(json.dumps([entry.to_json() for entry in entries]))
    elif args.format == "csv":
        lines = ["name,terms,gf"]
        for entry in entries:
            terms = " ".join(format_rat(v) for v in entry.reference_terms)
            lines.append(f"{entry.name},{terms},{entry.gf.name if entry.gf else ''}")
        emit("\n".join(lines))
    else:
        width = max(len(entry.name) for entry in entries)
        for entry in entries:
            terms = " ".join(format_rat(v) for v in entry.reference_terms)
            gf = f"  gf={entry.gf.name}" if entry.gf else ""
            emit(f"{entry.name:<{width}}  {terms}{gf}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (default: text)")

    named = argparse.ArgumentParser(add_help=False)
    named.add_argument("--name", help="catalog sequence name")
    named.add_argument("--sigma", metavar="SPEC",
                       help="diagonal weight spec as JSON or @file (start 0)")
    named.add_argument("--tau", metavar="SPEC",
                       help="subdiagonal weight spec as JSON or @file (start 1)")

    parser = argparse.ArgumentParser(
        prog="catmoments",
        description="Exact generation and Stieltjes moment certification of "
                    "sequences driven by three-term weight recurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common, named],
                       help="generate sequence terms 0..N")
    p.add_argument("-n", type=int, default=DEFAULT_DEPTH, help="last index (default 8)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("matrix", parents=[common, named],
                       help="dump the recursive matrix triangle")
    p.add_argument("-n", type=int, default=DEFAULT_DEPTH, help="last row (default 8)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("stieltjes", parents=[common, named],
                       help="evaluate both Hankel determinant families")
    p.add_argument("--terms", metavar="LIST",
                   help="explicit comma-separated terms (alternative to specs)")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                   help="largest section index (default 8)")
    p.set_defaults(func=cmd_stieltjes)

    p = sub.add_parser("hankel-det", parents=[common, named],
                       help="Hankel determinants against the weight-product formula")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                   help="largest section index (default 8)")
    p.add_argument("--shift", type=int, choices=(0, 1), default=0,
                   help="0 for [m_{i+j}], 1 for [m_{i+j+1}] (default 0)")
    p.set_defaults(func=cmd_hankel_det)

    p = sub.add_parser("tp", parents=[common],
                       help="certify total positivity of a coefficient matrix")
    p.add_argument("--pqst", metavar="P,Q,S,T",
                   help="exact criterion for weights constant after the first entry")
    p.add_argument("--jacobi-name", help="catalog name for the weight pair")
    p.add_argument("--sigma", metavar="SPEC", help="diagonal weight spec (start 0)")
    p.add_argument("--tau", metavar="SPEC", help="subdiagonal weight spec (start 1)")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                   help="section depth for bounded routes (default 8)")
    p.set_defaults(func=cmd_tp)

    p = sub.add_parser("series", parents=[common],
                       help="expand a generating function spec")
    p.add_argument("--gf", required=True, metavar="SPEC",
                   help="named gf or JSON spec with a 'kind' field, or @file")
    p.add_argument("-n", type=int, default=DEFAULT_ORDER,
                   help="truncation order (default 16)")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common],
                       help="run the full cross-check bundle for a catalog entry")
    p.add_argument("--name", required=True, help="catalog sequence name")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                   help="check depth (default 8)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="list the catalog entries")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
