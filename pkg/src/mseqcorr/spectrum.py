"""Weil sums, full spectra, m-sequences, moment identities.

Two independent routes compute the spectrum {S_d(z) | z in GF(p^n)} where
S_d(z) = sum over x in GF(p^n) of chi(z x - x^d):

* ``naive`` evaluates the defining double sum through the log tables,
  O(p^(2n)) character lookups, sharded over contiguous z-chunks;
* ``fast`` tabulates g(x) = chi(-x^d), switches z to dual-basis coordinates
  so that Tr(zx) becomes a digit dot product, and runs an n-dimensional
  radix-p butterfly transform.  The butterfly works in the group ring
  Z[x]/(x^p - 1), where multiplying by a root of unity is a cyclic shift,
  so every intermediate value stays an exact integer vector.

The sum runs over the full field including x = 0: combined with
S_d(z) = C_d(z) + 1 this makes the distribution counts over all z (z = 0
included) match the closed-form tables, which partition all p^n shifts.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dfield
from functools import cached_property

import numpy as np

from .cyclo import CycInt
from .field import FieldContext, FieldError

__all__ = [
    "DecimationCase",
    "SpectrumDistribution",
    "MomentReport",
    "weil_sum",
    "weil_values",
    "weil_values_rational",
    "spectrum",
    "msequence",
    "cross_correlation_direct",
    "b3_count",
    "verify_moments",
]

NAIVE_MAX_ORDER = 3**9
_Z_CHUNK = 512


@dataclass
class DecimationCase:
    """A validated (field, d) pair; gcd and degeneracy recomputed, not trusted."""

    ctx: FieldContext
    d: int
    gcd_flag: int = dfield(init=False)
    degenerate: bool = dfield(init=False)

    def __post_init__(self) -> None:
        q = self.ctx.q
        if not 1 <= self.d < q - 1:
            raise FieldError(f"decimation d={self.d} outside [1, {q - 1})")
        self.gcd_flag = math.gcd(self.d, q - 1)
        self.degenerate = self.d in {self.ctx.p**i % (q - 1) for i in range(self.ctx.n)}

    @cached_property
    def xd_table(self) -> np.ndarray:
        """v -> v^d for every encoded value."""
        return self.ctx.power_map_table(self.d)

    @cached_property
    def _tr_xd_by_k(self) -> np.ndarray:
        """Tr(x^d) for x = g^k, indexed by k."""
        ctx = self.ctx
        m = ctx.q - 1
        return ctx.trace_table[
            ctx.exp_table[(self.d * np.arange(m, dtype=np.int64)) % m]
        ].astype(np.int64)

    def family_tag(self) -> str:
        ctx = self.ctx
        if ctx.p == 3 and ctx.n % 3 == 0:
            r = ctx.n // 3
            if self.d in (3**r + 2, 3 ** (2 * r) + 2):
                return "ternary-3r"
        if ctx.p == 2 and ctx.n % 2 == 0:
            for m in range(1, ctx.n // 2 + 1):
                if ctx.n % (2 * m):
                    continue
                l = ctx.n // (2 * m)
                if l % 2 or l < 2:
                    continue
                base = (2**ctx.n - 1) // (2**m + 1)
                if (self.d - base) % (2**ctx.n - 1) in {
                    2**s % (2**ctx.n - 1) for s in range(ctx.n)
                }:
                    return "binary-2lm"
        return "generic"


@dataclass
class SpectrumDistribution:
    """Multiset of attained Weil-sum values with multiplicities."""

    p: int
    entries: dict[CycInt, int]
    includes_zero: bool

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_entries(self) -> list[tuple[CycInt, int]]:
        return sorted(self.entries.items(), key=lambda kv: kv[0].sort_key())

    def distinct(self) -> int:
        return len(self.entries)

    def all_rational(self) -> bool:
        return all(v.rational() is not None for v in self.entries)

    def rational_counts(self) -> dict[int, int]:
        out = {}
        for v, c in self.entries.items():
            r = v.rational()
            if r is None:
                raise ValueError(f"non-rational spectrum value {v}")
            out[r] = out.get(r, 0) + c
        return out

    def shifted(self, delta: int) -> "SpectrumDistribution":
        """Distribution of (value + delta); used for S <-> C = S - 1 views."""
        return SpectrumDistribution(
            self.p,
            {v + delta: c for v, c in self.entries.items()},
            self.includes_zero,
        )

    def to_json(self) -> list[dict]:
        return [
            {"value": v.to_json(), "count": c} for v, c in self.sorted_entries()
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpectrumDistribution)
            and self.p == other.p
            and self.entries == other.entries
        )


# -- single Weil sums ------------------------------------------------------


def weil_sum(case: DecimationCase, z) -> CycInt:
    """S_d(z) = sum over x in GF(p^n) of chi(z x - x^d), exact."""
    ctx = case.ctx
    z = ctx._val(z)
    p, q, m = ctx.p, ctx.q, ctx.q - 1
    tr_xd = case._tr_xd_by_k
    if z == 0:
        t = (-tr_xd) % p
    else:
        lz = ctx.discrete_log(z)
        tr_zx = ctx.trace_table[ctx.exp_table[(lz + np.arange(m, dtype=np.int64)) % m]]
        t = (tr_zx.astype(np.int64) - tr_xd) % p
    counts = np.bincount(t, minlength=p)
    counts[0] += 1  # x = 0 contributes chi(0) = 1
    return CycInt.from_exponent_counts(p, counts.tolist())


# -- full spectra ----------------------------------------------------------


def _naive_chunk_counts(case: DecimationCase, z_lo: int, z_hi: int) -> np.ndarray:
    """Character-exponent counts for z in [z_lo, z_hi); returns (nz, p) array.

    Row j holds, for z = z_lo + j, how many x produce each trace value of
    z x - x^d.
    """
    ctx = case.ctx
    p, m = ctx.p, ctx.q - 1
    tr_xd = case._tr_xd_by_k
    nz = z_hi - z_lo
    counts = np.zeros((nz, p), dtype=np.int64)
    zs = np.arange(z_lo, z_hi, dtype=np.int64)
    nonzero = zs != 0
    if not np.all(nonzero):
        j0 = int(np.flatnonzero(~nonzero)[0])
        t0 = (-tr_xd) % p
        counts[j0] = np.bincount(t0, minlength=p)
    lz = ctx.log_table[zs[nonzero]]
    if len(lz):
        ks = np.arange(m, dtype=np.int64)
        t = (
            ctx.trace_table[ctx.exp_table[(lz[:, None] + ks[None, :]) % m]].astype(
                np.int64
            )
            - tr_xd[None, :]
        ) % p
        rows = np.flatnonzero(nonzero)
        flat = (t + p * rows[:, None]).ravel()
        counts += np.bincount(flat, minlength=p * nz).reshape(nz, p)
    counts[:, 0] += 1  # x = 0 term per z
    return counts


def _spectrum_naive(
    case: DecimationCase, include_zero: bool, workers: int
) -> Counter:
    ctx = case.ctx
    q, p = ctx.q, ctx.p
    if q > NAIVE_MAX_ORDER:
        raise FieldError(
            f"naive spectrum budget exceeded: p^n = {q} > {NAIVE_MAX_ORDER}"
        )
    z_start = 0 if include_zero else 1
    chunks = [
        (lo, min(lo + _Z_CHUNK, q))
        for lo in range(z_start, q, _Z_CHUNK)
    ]

    def run(bounds):
        return _naive_chunk_counts(case, *bounds)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, chunks))
    else:
        parts = [run(b) for b in chunks]

    multiset: Counter = Counter()
    for counts in parts:  # merged in deterministic chunk order
        canon = counts[:, : p - 1] - counts[:, p - 1 :]
        keys, reps = np.unique(canon, axis=0, return_counts=True)
        for key, rep in zip(keys, reps):
            multiset[CycInt(p, tuple(int(c) for c in key))] += int(rep)
    return multiset


def _group_ring_dft(state: np.ndarray, p: int, n: int) -> np.ndarray:
    """Exact DFT over (Z_p)^n of a Z[x]/(x^p - 1)-valued array.

    ``state`` has shape (p^n, p); index = sum of digit_i * p^i.  Output index
    zhat satisfies F[zhat] = sum_x state[x] * zeta^(zhat . x).
    """
    for axis in range(n):
        lo = p**axis
        hi = p ** (n - axis - 1)
        st = state.reshape(hi, p, lo, p)
        new = np.zeros_like(st)
        for j in range(p):
            for k in range(p):
                t = (j * k) % p
                if t == 0:
                    new[:, j] += st[:, k]
                else:
                    new[:, j] += np.roll(st[:, k], t, axis=-1)
        state = new.reshape(p**n, p)
    return state


def _fast_transform(case: DecimationCase) -> np.ndarray:
    """Canonical CycInt coords of S_d(z) indexed by the dual-coordinate index
    zhat; shape (q, p-1)."""
    ctx = case.ctx
    p, n, q = ctx.p, ctx.n, ctx.q
    t = (-ctx.trace_table[case.xd_table].astype(np.int64)) % p
    state = np.zeros((q, p), dtype=np.int64)
    state[np.arange(q), t] = 1
    out = _group_ring_dft(state, p, n)
    return out[:, : p - 1] - out[:, p - 1 :]


def _zhat_to_z(ctx: FieldContext) -> np.ndarray:
    """Map transform output index (digits = Tr(z b_j)) to the encoded z."""
    q = ctx.q
    out = np.empty(q, dtype=np.int64)
    D = ctx.dual_basis_digits  # row i = digits of d_i
    for lo in range(0, q, 1 << 16):
        hi = min(q, lo + (1 << 16))
        Zhat = ctx.vdigits(np.arange(lo, hi, dtype=np.int64))
        out[lo:hi] = ctx.vfromdigits(Zhat @ D % ctx.p)
    return out


def weil_values(case: DecimationCase) -> np.ndarray:
    """S_d(z) for every z, via the fast transform.

    Returns an (q, p-1) array of canonical CycInt coordinates indexed by the
    encoded value of z.
    """
    canon = _fast_transform(case)
    z_of = _zhat_to_z(case.ctx)
    out = np.empty_like(canon)
    out[z_of] = canon
    return out


def weil_values_rational(case: DecimationCase) -> np.ndarray:
    """Integer S_d(z) indexed by z; raises if any value is irrational."""
    vals = weil_values(case)
    if case.ctx.p > 2 and np.any(vals[:, 1:]):
        raise ValueError("spectrum contains non-rational values")
    if case.ctx.p == 2:
        return vals[:, 0]
    # rational CycInt in canonical basis: (r, ... ) with equal tail entries 0
    return vals[:, 0]


def _spectrum_fast(case: DecimationCase, include_zero: bool) -> Counter:
    p = case.ctx.p
    canon = _fast_transform(case)
    if not include_zero:
        canon = canon[1:]  # zhat = 0 corresponds to z = 0
    keys, reps = np.unique(canon, axis=0, return_counts=True)
    return Counter(
        {
            CycInt(p, tuple(int(c) for c in key)): int(rep)
            for key, rep in zip(keys, reps)
        }
    )


def spectrum(
    case: DecimationCase,
    method: str = "fast",
    include_zero: bool = True,
    workers: int = 1,
) -> SpectrumDistribution:
    """The multiset {S_d(z)} over z, by either route.

    Both methods produce identical multisets; ``naive`` is retained
    permanently as the oracle and is capped at p^n <= 3^9.
    """
    if method == "naive":
        multiset = _spectrum_naive(case, include_zero, workers)
    elif method == "fast":
        multiset = _spectrum_fast(case, include_zero)
    else:
        raise ValueError(f"unknown spectrum method {method!r}")
    return SpectrumDistribution(case.ctx.p, dict(multiset), include_zero)


# -- sequences -------------------------------------------------------------


def msequence(ctx: FieldContext, beta) -> np.ndarray:
    """The m-sequence a_t = Tr(beta * alpha^t), t in [0, p^n - 1)."""
    beta = ctx._val(beta)
    if beta == 0:
        raise FieldError("beta must be nonzero")
    m = ctx.q - 1
    lb = ctx.discrete_log(beta)
    return ctx.trace_table[
        ctx.exp_table[(lb + np.arange(m, dtype=np.int64)) % m]
    ].astype(np.int64)


def cross_correlation_direct(a, b, tau: int, p: int) -> CycInt:
    """C_{a,b}(tau) = sum over t of omega^(a_{t+tau} - b_t), exact."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    diff = (np.roll(a, -tau) - b) % p
    return CycInt.from_exponent_counts(p, np.bincount(diff, minlength=p).tolist())


# -- moment identities -----------------------------------------------------


def b3_count(case: DecimationCase) -> int:
    """Number of (x, y) with x + y + 1 = 0 and x^d + y^d + 1 = 0."""
    ctx = case.ctx
    xs = np.arange(ctx.q, dtype=np.int64)
    ys = ctx.vneg(ctx.vadd(xs, np.ones_like(xs)))
    lhs = ctx.vadd(case.xd_table[xs], case.xd_table[ys])
    total = ctx.vadd(lhs, np.ones_like(xs))
    return int(np.count_nonzero(total == 0))


@dataclass
class MomentReport:
    """Exact power sums of the spectrum against the classical identities."""

    p: int
    n: int
    d: int
    m1: CycInt
    m2_plain: CycInt
    m2_abs: CycInt
    m3: CycInt
    b3: int
    status: dict[str, str]  # identity -> "pass" | "fail" | "not_applicable"

    @property
    def all_ok(self) -> bool:
        return all(v != "fail" for v in self.status.values())

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "d": self.d,
            "m1": self.m1.to_json(),
            "m2_plain": self.m2_plain.to_json(),
            "m2_abs": self.m2_abs.to_json(),
            "m3": self.m3.to_json(),
            "b3": self.b3,
            "status": self.status,
        }


def verify_moments(
    case: DecimationCase, dist: SpectrumDistribution | None = None
) -> MomentReport:
    """Check sum S = p^n, sum S^2 = p^(2n), sum S^3 = p^(2n) b3 and the
    unconditional sum S conj(S) = p^(2n).

    The plain second and third moments are only asserted when
    d = 1 (mod p-1); outside that congruence class they are reported as
    not applicable, never as failures.  All three S-power identities also
    need gcd(d, p^n - 1) = 1.
    """
    ctx = case.ctx
    p, q = ctx.p, ctx.q
    if dist is None:
        dist = spectrum(case, method="fast", include_zero=True)
    if not dist.includes_zero:
        raise ValueError("moment identities need the full z-range (include zero)")

    m1 = CycInt.zero(p)
    m2_plain = CycInt.zero(p)
    m2_abs = CycInt.zero(p)
    m3 = CycInt.zero(p)
    for v, c in dist.entries.items():
        m1 = m1 + v * c
        v2 = v * v
        m2_plain = m2_plain + v2 * c
        m2_abs = m2_abs + v * v.conj() * c
        m3 = m3 + v2 * v * c
    b3 = b3_count(case)

    gcd_ok = case.gcd_flag == 1
    congr_ok = case.d % (p - 1) == 1 % (p - 1)
    n2 = q * q

    def verdict(applicable: bool, holds: bool) -> str:
        if not applicable:
            return "not_applicable"
        return "pass" if holds else "fail"

    status = {
        "m1": verdict(gcd_ok, m1 == CycInt.from_int(p, q)),
        "m2_abs": verdict(gcd_ok, m2_abs == CycInt.from_int(p, n2)),
        "m2_plain": verdict(gcd_ok and congr_ok, m2_plain == CycInt.from_int(p, n2)),
        "m3": verdict(gcd_ok and congr_ok, m3 == CycInt.from_int(p, n2 * b3)),
    }
    return MomentReport(p, ctx.n, case.d, m1, m2_plain, m2_abs, m3, b3, status)
