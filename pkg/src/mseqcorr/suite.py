"""The full verification battery behind the `suite` CLI subcommand.

Each criterion is exact (integer multiset equality) unless stated otherwise;
the only floating tolerances in the package are the Gauss-sum branch check
(1e-6) and the complex embedding itself (1e-9).  Expensive large-field runs
(3^15 ternary, 2^16 binary) sit behind the ``big`` flag.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dfield

from .binary import binary_params, l2_structure, theorem9_verify
from .characters import gauss_sum, quadratic_sum
from .field import build_field
from .spectrum import DecimationCase, spectrum, verify_moments
from .ternary import (
    lemma6_count,
    ternary_params,
    theorem4_distribution,
    trace_form_check,
    verify_theorem4,
)

__all__ = ["CriterionResult", "run_suite", "CRITERIA"]

DEFAULT_SEED = 12345


@dataclass
class CriterionResult:
    name: str
    passed: bool
    details: dict = dfield(default_factory=dict)
    skipped: list[str] = dfield(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" (skipped: {', '.join(self.skipped)})" if self.skipped else ""
        return f"{status} {self.name}{extra}"


def _ternary_criterion(r: int, variants, method: str) -> CriterionResult:
    details = {}
    ok = True
    for variant in variants:
        params = ternary_params(r, variant)
        verdict = verify_theorem4(params, method=method)
        details[f"d={params.d}"] = {
            "match": verdict.match,
            "conjecture_mode": verdict.conjecture_mode,
        }
        ok = ok and verdict.match
    return CriterionResult(f"theorem4-r{r}", ok, details)


def criterion_1(big: bool, seed: int) -> CriterionResult:
    res = _ternary_criterion(2, ("r", "2r"), "naive")
    res.name = "c01-theorem4-r2-exhaustive"
    # the closed form itself must reproduce the spelled-out r=2 table
    expected = {-1: 396, 80: 9, 26: 108, -28: 108, 53: 54, -55: 54}
    table_ok = theorem4_distribution(ternary_params(2)) == expected
    res.details["closed_form_table"] = table_ok
    res.passed = res.passed and table_ok
    return res


def criterion_2(big: bool, seed: int) -> CriterionResult:
    res = _ternary_criterion(3, ("r", "2r"), "fast")
    res.name = "c02-remark-r3"
    expected = {-1: 13338, 728: 27, 242: 3159, -244: 3159}
    for variant in ("r", "2r"):
        params = ternary_params(3, variant)
        verdict = verify_theorem4(params, method="fast")
        if verdict.empirical != expected:
            res.passed = False
            res.details[f"d={params.d}-table"] = "mismatch with published table"
    return res


def criterion_3(big: bool, seed: int) -> CriterionResult:
    res = _ternary_criterion(4, ("r",), "fast")
    res.name = "c03-theorem4-r4-r5"
    if big:
        v5 = verify_theorem4(ternary_params(5), method="fast")
        res.details["r5"] = {"match": v5.match}
        res.passed = res.passed and v5.match
    else:
        res.skipped.append("r5 (3^15 field; --big)")
    return res


def criterion_4(big: bool, seed: int) -> CriterionResult:
    details = {}
    ok = True
    for r, zn in ((2, 1000), (4, 1000)):
        rep = trace_form_check(ternary_params(r), z_samples=zn, seed=seed)
        details[f"r{r}"] = {
            "xd": rep.xd_identity_ok,
            "xz": rep.xz_identity_ok,
            "z_samples": rep.z_samples,
        }
        ok = ok and rep.ok
    return CriterionResult("c04-trace-forms", ok, details)


def criterion_5(big: bool, seed: int) -> CriterionResult:
    details = {}
    ok = True
    for r in (1, 2, 3):
        for variant in ("r", "2r"):
            res = lemma6_count(ternary_params(r, variant))
            key = f"r{r}-{variant}"
            details[key] = {"closed": res.closed, "brute": res.brute}
            ok = ok and res.agree and res.brute == res.closed
    for r in (1, 2):
        for variant in ("r", "2r"):
            params = ternary_params(r, variant)
            ctx = build_field(3, params.n)
            rep = verify_moments(DecimationCase(ctx, params.d))
            details[f"m3-r{r}-{variant}"] = rep.status["m3"]
            ok = ok and rep.status["m3"] == "pass"
    return CriterionResult("c05-lemma6-b3", ok, details)


def moment_triples() -> list[tuple[int, int, int]]:
    """20 deterministic gcd-1 triples with p in {2,3,5} and p^n <= 3^7."""
    out = []
    fields = [
        (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (2, 10), (2, 11),
        (3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7),
        (5, 2), (5, 3), (5, 4),
    ]
    for p, n in fields:
        q = p**n
        picked = 0
        degenerate = {p**i for i in range(n)}
        for d in range(2, q - 1):
            if d in degenerate or math.gcd(d, q - 1) != 1:
                continue
            out.append((p, n, d))
            picked += 1
            if picked == (2 if p == 5 else 1):
                break
    assert len(out) >= 20
    return out[:20]


def criterion_6(big: bool, seed: int) -> CriterionResult:
    details = {}
    ok = True
    for p, n, d in moment_triples():
        ctx = build_field(p, n)
        rep = verify_moments(DecimationCase(ctx, d))
        key = f"p{p}-n{n}-d{d}"
        details[key] = rep.status
        ok = ok and rep.all_ok and rep.status["m1"] == "pass" and rep.status["m2_abs"] == "pass"
    return CriterionResult("c06-moment-suite", ok, details)


THEOREM9_CASES = [(2, 1, 1), (2, 1, 3), (2, 2, 0), (2, 3, 1), (4, 1, 0)]
THEOREM9_BIG_CASES = [(2, 4, 0)]  # n = 16


def criterion_7(big: bool, seed: int) -> CriterionResult:
    details = {}
    ok = True
    cases = list(THEOREM9_CASES) + (THEOREM9_BIG_CASES if big else [])
    skipped = [] if big else [f"{c} (n=16; --big)" for c in THEOREM9_BIG_CASES]
    for l, m, s in cases:
        rep = theorem9_verify(binary_params(l, m, s))
        details[f"l{l}-m{m}-s{s}"] = rep.to_json()
        ok = ok and rep.all_ok
    return CriterionResult("c07-theorem9", ok, details, skipped)


def criterion_8(big: bool, seed: int) -> CriterionResult:
    details = {}
    ok = True
    for l, m, s in THEOREM9_CASES + (THEOREM9_BIG_CASES if big else []):
        if l != 2:
            continue
        rep = l2_structure(binary_params(l, m, s))
        details[f"l{l}-m{m}-s{s}"] = {
            "u": rep.u,
            "branch": rep.branch,
            "ok": rep.ok,
        }
        ok = ok and rep.ok
    return CriterionResult("c08-l2-structure", ok, details)


def criterion_9(big: bool, seed: int) -> CriterionResult:
    details = {}
    ok = True
    for p, s in ((3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)):
        g = gauss_sum(p, s)
        details[f"q={p ** s}"] = {"exact": g.match_exact, "branch": g.match_float}
        ok = ok and g.match_exact and g.match_float
    rng = random.Random(seed)
    for p, n in ((3, 1), (3, 2), (3, 3), (5, 1)):
        ctx = build_field(p, n)
        bad = 0
        for _ in range(100):
            a2 = rng.randrange(1, ctx.q)
            a1 = rng.randrange(ctx.q)
            a0 = rng.randrange(ctx.q)
            if not quadratic_sum(ctx, a2, a1, a0).match:
                bad += 1
        details[f"lemma2-GF({p}^{n})"] = {"mismatches": bad}
        ok = ok and bad == 0
    return CriterionResult("c09-gauss-quadratic", ok, details)


def equivalence_cases() -> list[tuple[int, int]]:
    """Every prime-power field with 4 <= p^n <= 3^6 and n >= 2."""
    out = []
    for p in (2, 3, 5, 7):
        n = 2
        while p**n <= 3**6:
            out.append((p, n))
            n += 1
    return out


def criterion_10(big: bool, seed: int) -> CriterionResult:
    details = {"cases": 0}
    ok = True
    first_bad = None
    for p, n in equivalence_cases():
        ctx = build_field(p, n)
        q = p**n
        degenerate = {p**i for i in range(n)}
        for d in range(2, q - 1):
            if d in degenerate or math.gcd(d, q - 1) != 1:
                continue
            case = DecimationCase(ctx, d)
            if spectrum(case, "naive") != spectrum(case, "fast"):
                ok = False
                if first_bad is None:
                    first_bad = (p, n, d)
            details["cases"] += 1
    for p, n, d in ((3, 9, 29), (2, 12, 67)):
        ctx = build_field(p, n)
        case = DecimationCase(ctx, d)
        same = spectrum(case, "naive") == spectrum(case, "fast")
        details[f"spot-p{p}-n{n}-d{d}"] = same
        ok = ok and same
    # worker-count determinism at the multiset level; byte-level determinism
    # of reports is exercised through the CLI tests
    ctx = build_field(3, 5)
    case = DecimationCase(ctx, 7)
    base = spectrum(case, "naive", workers=1)
    for w in (2, 8):
        same = spectrum(case, "naive", workers=w) == base
        details[f"workers-{w}"] = same
        ok = ok and same
    if first_bad:
        details["first_mismatch"] = first_bad
    return CriterionResult("c10-engine-equivalence", ok, details)


def criterion_11(big: bool, seed: int) -> CriterionResult:
    details = {}
    ok = True
    for name, n, d, expect in (
        ("gold", 5, 3, 3),
        ("helleseth", 6, 11, 5),
        ("niho", 4, 7, 4),
    ):
        ctx = build_field(2, n)
        got = spectrum(DecimationCase(ctx, d), "fast", include_zero=False).distinct()
        details[name] = {"n": n, "d": d, "distinct": got, "expected": expect}
        ok = ok and got == expect
    return CriterionResult("c11-table1-sanity", ok, details)


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
]


def run_suite(big: bool = False, seed: int = DEFAULT_SEED) -> list[CriterionResult]:
    return [fn(big, seed) for fn in CRITERIA]
