"""Command-line interface.

Reports are emitted as canonical JSON: sorted keys, two-space indent, a
single trailing newline, and no runtime metadata (timings, worker counts,
hostnames) in the body, so two runs with the same inputs produce identical
bytes regardless of parallelism.  Runtime chatter goes to stderr.

Exit codes: 0 all checks passed, 1 a mathematical assertion failed (a
counterexample witness is reported), 2 usage or resource errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .binary import BinaryParamError, binary_params, l2_structure, theorem9_verify
from .characters import gauss_sum
from .field import FieldError, build_field
from .spectrum import DecimationCase, b3_count, spectrum, verify_moments
from .suite import DEFAULT_SEED, run_suite
from .ternary import ternary_context, ternary_params, verify_theorem4

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_USAGE = 2


def _workers(args) -> int:
    if getattr(args, "workers", None) is not None:
        return args.workers
    env = os.environ.get("MSEQCORR_WORKERS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise FieldError(f"MSEQCORR_WORKERS is not an integer: {env!r}")
    return 1


def _parse_poly(text: str | None):
    if text is None:
        return None
    try:
        coeffs = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise FieldError(f"polynomial must be comma-separated integers, got {text!r}")
    return coeffs


def canonical_report(body: dict) -> str:
    return json.dumps(body, sort_keys=True, indent=2) + "\n"


def _spectrum_csv(dist) -> str:
    lines = ["rational,coords,count"]
    for v, c in dist.sorted_entries():
        r = v.rational()
        coords = ";".join(str(x) for x in v.coords)
        lines.append(f"{'' if r is None else r},{coords},{c}")
    return "\n".join(lines) + "\n"


def emit(args, text: str) -> None:
    path = getattr(args, "path", None)
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
        print(f"report written to {path}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _field_args(sub, with_d: bool = True):
    sub.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    sub.add_argument("--n", type=int, required=True, help="extension degree")
    sub.add_argument(
        "--poly",
        type=str,
        default=None,
        help="primitive polynomial, comma-separated coefficients from the "
        "constant term up (default: built-in table)",
    )
    if with_d:
        sub.add_argument("--d", type=int, required=True, help="decimation exponent")


def _out_args(sub, csv: bool = False):
    if csv:
        sub.add_argument("--out", choices=("json", "csv"), default="json")
    sub.add_argument("--path", type=str, default=None, help="write the report here instead of stdout")


# -- subcommand handlers ---------------------------------------------------


def cmd_field_info(args) -> int:
    ctx = build_field(args.p, args.n, _parse_poly(args.poly))
    body = {
        "p": ctx.p,
        "n": ctx.n,
        "order": ctx.q,
        "poly": list(ctx.poly),
        "generator": ctx.generator,
        "generator_order": ctx.q - 1,
        "trace_of_one": ctx.trace_int(1),
        "primitive": True,
    }
    emit(args, canonical_report(body))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    ctx = build_field(args.p, args.n, _parse_poly(args.poly))
    case = DecimationCase(ctx, args.d)
    include_zero = not args.exclude_zero
    dist = spectrum(case, method=args.method, include_zero=include_zero, workers=_workers(args))
    if args.out == "csv":
        emit(args, _spectrum_csv(dist))
        return EXIT_OK
    body = {
        "p": ctx.p,
        "n": ctx.n,
        "d": case.d,
        "poly": list(ctx.poly),
        "method": args.method,
        "gcd": case.gcd_flag,
        "degenerate": case.degenerate,
        "family": case.family_tag(),
        "includes_zero": include_zero,
        "distinct_values": dist.distinct(),
        "distribution": dist.to_json(),
    }
    if include_zero:
        body["moments"] = verify_moments(case, dist).to_json()
    emit(args, canonical_report(body))
    return EXIT_OK


def cmd_verify_ternary(args) -> int:
    params = ternary_params(args.r, args.variant)
    ctx = ternary_context(params, _parse_poly(args.poly))
    verdict = verify_theorem4(params, method=args.method, ctx=ctx, workers=_workers(args))
    emit(args, canonical_report(verdict.to_json()))
    if not verdict.match:
        closed = verdict.closed_form
        emp = verdict.empirical
        for k in sorted(set(closed) | set(emp)):
            if closed.get(k) != emp.get(k):
                print(
                    f"FAIL: C = {k} attained {emp.get(k, 0)} times, "
                    f"closed form says {closed.get(k, 0)}",
                    file=sys.stderr,
                )
        return EXIT_MATH_FAIL
    return EXIT_OK


def cmd_verify_binary(args) -> int:
    params = binary_params(args.l, args.m, args.s)
    if not params.valid:
        raise BinaryParamError(f"invalid parameters: {params.gcd_reason}")
    ctx = build_field(2, params.n, _parse_poly(args.poly))
    rep = theorem9_verify(params, ctx)
    body = rep.to_json()
    if params.l == 2:
        body["l2_structure"] = l2_structure(params, ctx).to_json()
    if args.full_spectrum:
        case = DecimationCase(ctx, params.d % (ctx.q - 1))
        body["distribution"] = spectrum(case, "fast").to_json()
    emit(args, canonical_report(body))
    ok = rep.all_ok and (params.l != 2 or not body["l2_structure"]["mismatches"])
    if not ok:
        if not rep.zero_attained:
            print("FAIL: S = 0 never attained on z != 0", file=sys.stderr)
        if not rep.min_distinct_ok:
            print(f"FAIL: only {rep.distinct_values} distinct values on z != 0", file=sys.stderr)
        if not rep.large_value_ok:
            print(
                f"FAIL: max S = {rep.max_value} at z = {rep.max_witness}, "
                f"below 2^(lm+1)",
                file=sys.stderr,
            )
        if not rep.divisibility_ok:
            print("FAIL: some S not divisible by 2^lm", file=sys.stderr)
        for z, predicted, actual in body.get("l2_structure", {}).get("mismatches", []):
            print(f"FAIL: l=2 structure at z = {z}: predicted {predicted}, got {actual}", file=sys.stderr)
        return EXIT_MATH_FAIL
    return EXIT_OK


def cmd_verify_moments(args) -> int:
    ctx = build_field(args.p, args.n, _parse_poly(args.poly))
    rep = verify_moments(DecimationCase(ctx, args.d))
    emit(args, canonical_report(rep.to_json()))
    if not rep.all_ok:
        for name, st in rep.status.items():
            if st == "fail":
                print(f"FAIL: moment identity {name}", file=sys.stderr)
        return EXIT_MATH_FAIL
    return EXIT_OK


def cmd_gauss(args) -> int:
    res = gauss_sum(args.p, args.s)
    emit(args, canonical_report(res.to_json()))
    if not res.match:
        print(
            f"FAIL: Gauss sum for q = {res.q}: exact={res.match_exact} "
            f"branch={res.match_float}",
            file=sys.stderr,
        )
        return EXIT_MATH_FAIL
    return EXIT_OK


def cmd_b3(args) -> int:
    ctx = build_field(args.p, args.n, _parse_poly(args.poly))
    case = DecimationCase(ctx, args.d)
    body = {"p": args.p, "n": args.n, "d": args.d, "b3": b3_count(case)}
    emit(args, canonical_report(body))
    return EXIT_OK


def cmd_suite(args) -> int:
    big = args.big or os.environ.get("MSEQCORR_BIG", "") not in ("", "0")
    results = run_suite(big=big, seed=args.seed)
    for res in results:
        print(res.line())
    failed = [r.name for r in results if not r.passed]
    if args.path:
        body = {
            "big": big,
            "seed": args.seed,
            "results": [
                {"name": r.name, "passed": r.passed, "skipped": r.skipped, "details": r.details}
                for r in results
            ],
        }
        emit(args, canonical_report(body))
    if failed:
        print(f"FAIL: {len(failed)} criteria failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_MATH_FAIL
    print(f"all {len(results)} criteria passed", file=sys.stderr)
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mseqcorr",
        description="Exact cross-correlation spectra of m-sequences and their decimations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="finite-field context operations")
    field_sub = p_field.add_subparsers(dest="field_command", required=True)
    p_info = field_sub.add_parser("info", help="build a field and report its parameters")
    _field_args(p_info, with_d=False)
    _out_args(p_info)
    p_info.set_defaults(func=cmd_field_info)

    p_spec = sub.add_parser("spectrum", help="full Weil-sum spectrum for (p, n, d)")
    _field_args(p_spec)
    p_spec.add_argument("--method", choices=("fast", "naive"), default="fast")
    p_spec.add_argument("--exclude-zero", action="store_true", help="omit z = 0")
    p_spec.add_argument("--workers", type=int, default=None, help="parallel workers for the naive engine")
    _out_args(p_spec, csv=True)
    p_spec.set_defaults(func=cmd_spectrum)

    p_verify = sub.add_parser("verify", help="verify a published result")
    verify_sub = p_verify.add_subparsers(dest="verify_command", required=True)

    p_tern = verify_sub.add_parser("ternary", help="closed-form distribution for d = 3^r + 2 / 3^(2r) + 2")
    p_tern.add_argument("--r", type=int, required=True)
    p_tern.add_argument("--variant", choices=("r", "2r"), default="r")
    p_tern.add_argument("--method", choices=("fast", "naive"), default="fast")
    p_tern.add_argument("--poly", type=str, default=None)
    p_tern.add_argument("--workers", type=int, default=None)
    _out_args(p_tern)
    p_tern.set_defaults(func=cmd_verify_ternary)

    p_bin = verify_sub.add_parser("binary", help="spectrum claims for d = (2^n-1)/(2^m+1) + 2^s")
    p_bin.add_argument("--l", type=int, required=True)
    p_bin.add_argument("--m", type=int, required=True)
    p_bin.add_argument("--s", type=int, required=True)
    p_bin.add_argument("--poly", type=str, default=None)
    p_bin.add_argument("--full-spectrum", action="store_true", help="include the value distribution")
    _out_args(p_bin)
    p_bin.set_defaults(func=cmd_verify_binary)

    p_mom = verify_sub.add_parser("moments", help="power-sum identities for any (p, n, d)")
    _field_args(p_mom)
    _out_args(p_mom)
    p_mom.set_defaults(func=cmd_verify_moments)

    p_gauss = sub.add_parser("gauss", help="quadratic Gauss sum vs its closed form")
    p_gauss.add_argument("--p", type=int, required=True)
    p_gauss.add_argument("--s", type=int, required=True)
    _out_args(p_gauss)
    p_gauss.set_defaults(func=cmd_gauss)

    p_b3 = sub.add_parser("b3", help="count solutions of x + y + 1 = 0 = x^d + y^d + 1")
    _field_args(p_b3)
    _out_args(p_b3)
    p_b3.set_defaults(func=cmd_b3)

    p_suite = sub.add_parser("suite", help="run the full verification battery")
    p_suite.add_argument("--big", action="store_true", help="include the large-field checks (3^15, 2^16)")
    p_suite.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized sub-checks")
    p_suite.add_argument("--path", type=str, default=None, help="also write a JSON report here")
    p_suite.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FieldError, BinaryParamError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
