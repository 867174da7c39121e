"""The binary family: period 2^(2lm) - 1 with d = (2^(2lm)-1)/(2^m+1) + 2^s.

Covers the cyclotomic-class machinery (C_inf, C_0, C_1), the class counts
n_i(z) and the resulting integer formula for S_d(z), the full-sweep verifier
for the at-least-four-values / zero-attained / large-value claims, and the
structural analysis of the l = 2 case.  Odd l is Niho territory and is
rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import FieldContext, FieldError, build_field
from .spectrum import DecimationCase, spectrum, weil_sum, weil_values_rational

__all__ = [
    "BinaryParams",
    "binary_params",
    "binary_context",
    "classify",
    "n_counts",
    "cc_from_counts",
    "theorem9_verify",
    "l2_structure",
]


class BinaryParamError(ValueError):
    """Rejected (l, m, s) input."""


@dataclass(frozen=True)
class BinaryParams:
    l: int
    m: int
    s: int
    n: int
    d: int
    inv_2s: int  # inverse of 2^s modulo 2^n - 1
    valid: bool
    gcd_reason: str

    @property
    def order(self) -> int:
        return 2**self.n


def binary_params(l: int, m: int, s: int) -> BinaryParams:
    """Validate and populate (l, m, s).

    The validity rule gcd(2^(s-1) - l, 2^m + 1) = 1 is evaluated with
    2^(s-1) as a residue modulo 2^m + 1 (the inverse of 2 when s = 0), and
    independently re-verified as gcd(d, 2^n - 1) = 1; a mismatch between the
    two would be an internal error.
    """
    if l < 2 or l % 2:
        raise BinaryParamError(
            f"l must be even and >= 2 (odd l is the Niho-type case, out of scope); got {l}"
        )
    if m < 1:
        raise BinaryParamError(f"m must be >= 1, got {m}")
    n = 2 * l * m
    if not 0 <= s < n:
        raise BinaryParamError(f"s must lie in [0, {n}), got {s}")
    big = 2**n - 1
    small = 2**m + 1
    d = big // small + pow(2, s, big)
    # 2^(s-1) mod (2^m + 1); exponents of 2 have period 2m there
    v = pow(2, (s - 1) % (2 * m), small)
    g = math.gcd(v - l, small)
    valid = g == 1
    if valid != (math.gcd(d, big) == 1):
        raise AssertionError(
            "validity rule disagrees with gcd(d, 2^n - 1) (internal error): "
            f"l={l} m={m} s={s} d={d}"
        )
    inv_2s = pow(pow(2, s, big), -1, big)
    reason = f"gcd(2^(s-1) - l, 2^m + 1) = gcd({v} - {l}, {small}) = {g}"
    return BinaryParams(l=l, m=m, s=s, n=n, d=d, inv_2s=inv_2s, valid=valid, gcd_reason=reason)


def binary_context(params: BinaryParams, poly=None) -> FieldContext:
    return build_field(2, params.n, poly)


def classify(ctx: FieldContext, x, m: int) -> str:
    """Cyclotomic class of x: 'INF' for zero, 'C0' for (2^m+1)-th powers,
    else 'C1'."""
    x = ctx._val(x)
    if x == 0:
        return "INF"
    return "C0" if ctx.discrete_log(x) % (2**m + 1) == 0 else "C1"


def _exponent_e(params: BinaryParams) -> int:
    """d * 2^(-s) reduced modulo 2^n - 1."""
    big = 2**params.n - 1
    return params.d * params.inv_2s % big


def n_counts(
    params: BinaryParams, ctx: FieldContext, z, via: str = "A"
) -> tuple[int, int, int]:
    """(n_inf, n_0, n_1): classes of z*x + x^(d 2^-s) as x runs over the
    representative set.

    ``via='A'`` uses A = {alpha^j | 0 <= j <= 2^m}; ``via='D0'`` uses the
    l = 2 reformulation over D_0 = {alpha^(j (2^n-1)/(2^m+1))}.  Both count
    the same thing; keeping the two routes checkable per z is the point.
    """
    z = ctx._val(z)
    big = ctx.q - 1
    e = _exponent_e(params)
    if via == "A":
        js = range(2**params.m + 1)
        xs = [int(ctx.exp_table[j % big]) for j in js]
    elif via == "D0":
        if params.l != 2:
            raise BinaryParamError("the D0 formulation applies to l = 2 only")
        step = big // (2**params.m + 1)
        xs = [int(ctx.exp_table[(j * step) % big]) for j in range(2**params.m + 1)]
    else:
        raise ValueError(f"unknown route {via!r}")
    counts = {"INF": 0, "C0": 0, "C1": 0}
    for x in xs:
        val = ctx.add(ctx.mul(z, x), ctx.pow(x, e))
        counts[classify(ctx, val, params.m)] += 1
    return counts["INF"], counts["C0"], counts["C1"]


def cc_from_counts(params: BinaryParams, counts: tuple[int, int, int]) -> int:
    """S_d(z) = 2^lm / (2^m + 1) * (2^lm n_inf - 2^m n_0 + n_1); the division
    is exact for consistent counts."""
    n_inf, n_0, n_1 = counts
    if n_inf + n_0 + n_1 != 2**params.m + 1:
        raise ValueError(
            f"counts {counts} do not sum to 2^m + 1 = {2**params.m + 1}"
        )
    lm = params.l * params.m
    num = 2**lm * (2**lm * n_inf - 2**params.m * n_0 + n_1)
    den = 2**params.m + 1
    if num % den:
        raise AssertionError(f"non-exact class-count division (internal error): {num}/{den}")
    return num // den


@dataclass
class Theorem9Report:
    params: BinaryParams
    zero_attained: bool
    zero_witness: int | None
    distinct_values: int
    max_value: int
    max_witness: int
    divisibility_ok: bool
    min_distinct_ok: bool
    large_value_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.zero_attained
            and self.min_distinct_ok
            and self.large_value_ok
            and self.divisibility_ok
        )

    def to_json(self) -> dict:
        return {
            "l": self.params.l,
            "m": self.params.m,
            "s": self.params.s,
            "n": self.params.n,
            "d": self.params.d,
            "zero_attained": self.zero_attained,
            "zero_witness": self.zero_witness,
            "distinct_values": self.distinct_values,
            "min_distinct_ok": self.min_distinct_ok,
            "max_value": self.max_value,
            "max_witness": self.max_witness,
            "large_value_ok": self.large_value_ok,
            "divisibility_ok": self.divisibility_ok,
        }


def theorem9_verify(params: BinaryParams, ctx: FieldContext | None = None) -> Theorem9Report:
    """Sweep every z and check: S = 0 is attained on z != 0 (the Helleseth
    conjecture instance), C takes at least four values over nonzero shifts,
    max S >= 2^(lm+1) (the Sarwate et al. bound, n = 2t with t = lm), and
    2^lm divides every S.  All witnesses are re-checkable via weil_sum.
    """
    if not params.valid:
        raise BinaryParamError(f"invalid parameters: {params.gcd_reason}")
    if ctx is None:
        ctx = binary_context(params)
    case = DecimationCase(ctx, params.d % (ctx.q - 1))
    vals = weil_values_rational(case)
    lm = params.l * params.m

    nonzero_vals = vals[1:]
    zero_idx = np.flatnonzero(nonzero_vals == 0)
    zero_attained = len(zero_idx) > 0
    zero_witness = int(zero_idx[0] + 1) if zero_attained else None
    distinct = len(np.unique(nonzero_vals))
    max_witness = int(np.argmax(vals))
    max_value = int(vals[max_witness])
    return Theorem9Report(
        params=params,
        zero_attained=zero_attained,
        zero_witness=zero_witness,
        distinct_values=distinct,
        max_value=max_value,
        max_witness=max_witness,
        divisibility_ok=bool(np.all(vals % (2**lm) == 0)),
        min_distinct_ok=distinct >= 4,
        large_value_ok=max_value >= 2 ** (lm + 1),
    )


@dataclass
class L2StructureReport:
    params: BinaryParams
    u: int
    branch: str  # "u=2^m+1" or "u<2^m+1"
    predicted_s_at_one: int
    predicted_s_on_d0: int
    checked: int
    mismatches: list[tuple[int, int, int]]  # (z, predicted, actual)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "u": self.u,
            "branch": self.branch,
            "predicted_s_at_one": self.predicted_s_at_one,
            "predicted_s_on_d0": self.predicted_s_on_d0,
            "checked": self.checked,
            "mismatches": self.mismatches,
        }


def l2_structure(params: BinaryParams, ctx: FieldContext | None = None) -> L2StructureReport:
    """The l = 2 case split on u = gcd(d 2^-s + 1, 2^m + 1).

    For u = 2^m + 1: S(1) = 0 and S(z) = 2^(3m) on D_0 minus {1}.
    For u < 2^m + 1: S(1) = 2^(3m) + 2^(3m)/(2^m+1) - 2^(2m) u rounded into
    the exact class formula, and S(z) = 2^(3m) - 2^(2m) u > 0 on D_0 minus
    {1}.  Every prediction is re-checked against the defining sum.
    """
    if params.l != 2:
        raise BinaryParamError(f"l = 2 analysis requested for l = {params.l}")
    if not params.valid:
        raise BinaryParamError(f"invalid parameters: {params.gcd_reason}")
    if ctx is None:
        ctx = binary_context(params)
    m = params.m
    small = 2**m + 1
    e = _exponent_e(params)
    u = math.gcd(e + 1, small)

    if u == small:
        branch = "u=2^m+1"
        pred_one = 0
        pred_d0 = 2 ** (3 * m)
    else:
        branch = "u<2^m+1"
        pred_one = cc_from_counts(params, (1, u - 1, 2**m - u + 1))
        pred_d0 = 2 ** (3 * m) - 2 ** (2 * m) * u
        assert pred_one >= 2 ** (2 * m + 1)
        assert pred_d0 > 0

    big = ctx.q - 1
    step = big // small
    case = DecimationCase(ctx, params.d % big)
    mismatches = []
    checked = 0
    for j in range(small):
        z = int(ctx.exp_table[(j * step) % big])
        sval = weil_sum(case, z).rational()
        predicted = pred_one if z == 1 else pred_d0
        checked += 1
        if sval != predicted:
            mismatches.append((z, predicted, sval))
    return L2StructureReport(
        params=params,
        u=u,
        branch=branch,
        predicted_s_at_one=pred_one,
        predicted_s_on_d0=pred_d0,
        checked=checked,
        mismatches=mismatches,
    )
