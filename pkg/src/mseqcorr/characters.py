"""Additive/multiplicative characters, Gauss sums and quadratic character sums.

Everything is computed exactly in Z[zeta_p].  The classical closed form for
the quadratic Gauss sum is checked in two layers: the square identity
G^2 = eta(-1) * q holds exactly in the ring, while the choice of complex
square root (the i^s branch) is confirmed in floating point only, since that
branch is not expressible inside Z[zeta_p].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclo import CycInt
from .field import FieldContext, FieldError, build_field

__all__ = [
    "GaussSumResult",
    "QuadraticSumResult",
    "additive_char",
    "gauss_sum",
    "quadratic_sum",
]

BRANCH_TOL = 1e-6


def additive_char(ctx: FieldContext, x) -> CycInt:
    """Canonical additive character chi(x) = zeta^Tr(x)."""
    return CycInt.root_power(ctx.p, ctx.trace_int(x))


@dataclass(frozen=True)
class GaussSumResult:
    p: int
    s: int
    q: int
    direct: CycInt
    closed_branch: str
    closed_value: complex
    match_exact: bool
    match_float: bool

    @property
    def match(self) -> bool:
        return self.match_exact and self.match_float

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "q": self.q,
            "direct": self.direct.to_json(),
            "closed_branch": self.closed_branch,
            "closed_value": [self.closed_value.real, self.closed_value.imag],
            "match_exact": self.match_exact,
            "match_float": self.match_float,
        }


def gauss_sum(p: int, s: int, ctx: FieldContext | None = None) -> GaussSumResult:
    """G(eta, chi) = sum over c != 0 of eta(c) chi(c), computed exactly.

    The verification flags compare against the closed form
    (-1)^(s-1) q^(1/2) for p = 1 mod 4 and (-1)^(s-1) i^s q^(1/2) for
    p = 3 mod 4.
    """
    if p == 2:
        raise FieldError("quadratic Gauss sums need odd characteristic")
    if ctx is None:
        ctx = build_field(p, s)
    elif (ctx.p, ctx.n) != (p, s):
        raise FieldError("context does not match (p, s)")
    q = p**s
    tr = ctx.trace_table[ctx.exp_table]
    parity = np.arange(q - 1) & 1  # eta(g^k) = (-1)^k
    counts = np.bincount(tr[parity == 0], minlength=p).astype(object) - np.bincount(
        tr[parity == 1], minlength=p
    ).astype(object)
    direct = CycInt.from_exponent_counts(p, counts.tolist())

    eta_m1 = 1 if q % 4 == 1 else -1
    match_exact = (direct * direct) == CycInt.from_int(p, eta_m1 * q) and (
        direct * direct.conj()
    ) == CycInt.from_int(p, q)

    sign = (-1) ** (s - 1)
    if p % 4 == 1:
        closed = complex(sign * q**0.5)
        branch = f"(-1)^{s - 1} * q^(1/2)  [p = 1 mod 4]"
    else:
        closed = sign * (1j**s) * (q**0.5)
        branch = f"(-1)^{s - 1} * i^{s} * q^(1/2)  [p = 3 mod 4]"
    match_float = abs(direct.to_complex() - closed) < BRANCH_TOL

    return GaussSumResult(p, s, q, direct, branch, closed, match_exact, match_float)


@dataclass(frozen=True)
class QuadraticSumResult:
    direct: CycInt
    closed: CycInt
    match: bool

    def to_json(self) -> dict:
        return {
            "direct": self.direct.to_json(),
            "closed": self.closed.to_json(),
            "match": self.match,
        }


def quadratic_sum(ctx: FieldContext, a2, a1, a0) -> QuadraticSumResult:
    """sum over c in GF(q) of chi(a2 c^2 + a1 c + a0), with the closed form
    chi(a0 - a1^2 (4 a2)^(-1)) * eta(a2) * G(eta, chi) checked exactly."""
    if ctx.p == 2:
        raise FieldError("quadratic character sums need odd characteristic")
    a2 = ctx._val(a2)
    a1 = ctx._val(a1)
    a0 = ctx._val(a0)
    if a2 == 0:
        raise FieldError("a2 = 0 degenerates to a linear sum; use orthogonality")

    cs = np.arange(ctx.q, dtype=np.int64)
    f = ctx.vadd(
        ctx.vmul_scalar(ctx.vmul(cs, cs), a2),
        ctx.vmul_scalar(cs, a1),
    )
    t = (ctx.trace_table[f].astype(np.int64) + ctx.trace_int(a0)) % ctx.p
    counts = np.bincount(t, minlength=ctx.p)
    direct = CycInt.from_exponent_counts(ctx.p, counts.tolist())

    shift = ctx.sub(a0, ctx.mul(ctx.mul(a1, a1), ctx.inv(ctx.mul(4 % ctx.p, a2))))
    g = gauss_sum(ctx.p, ctx.n, ctx)
    closed = additive_char(ctx, shift) * ctx.quadratic_character(a2) * g.direct
    return QuadraticSumResult(direct, closed, direct == closed)
