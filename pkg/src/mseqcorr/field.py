"""Finite fields GF(p^n) with eager log/antilog tables.

Elements are encoded as integers in [0, p^n): the base-p digits of the
integer are the coordinates in the power basis of the root of the defining
polynomial (constant term first).  For p = 2 this is the familiar bitmask
encoding and addition is XOR.

Multiplication runs through log/antilog tables, which are built eagerly at
construction time for every field under the size cap (2^26 elements); the
table build doubles as an exhaustive order check of the generator.  A
polynomial-reduction multiply is kept as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .primpoly import default_primitive_poly, is_irreducible

__all__ = [
    "MAX_FIELD_ORDER",
    "FieldError",
    "FieldContext",
    "FieldElement",
    "TowerCoords",
    "build_field",
]

MAX_FIELD_ORDER = 1 << 26

_CHUNK = 1 << 13


class FieldError(ValueError):
    """Invalid field construction or element operation."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldContext:
    """An immutable GF(p^n).  Construct via :func:`build_field`."""

    def __init__(self, p: int, n: int, poly: tuple[int, ...]):
        self.p = p
        self.n = n
        self.q = p**n
        self.poly = poly
        self._pvec = p ** np.arange(n, dtype=np.int64)
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _build_tables(self) -> None:
        p, n, q = self.p, self.n, self.q
        # digits of x^n mod poly: -(c_0 .. c_{n-1})
        red = np.array([(-c) % p for c in self.poly[:n]], dtype=np.int64)
        # multiplication-by-x as a linear map on digit row vectors
        M = np.zeros((n, n), dtype=np.int64)
        for i in range(n - 1):
            M[i, i + 1] = 1
        M[n - 1, :] = red

        total = q - 1
        B = min(total, _CHUNK)
        D = np.zeros((B, n), dtype=np.int64)
        D[0, 0] = 1
        for k in range(1, B):
            D[k] = D[k - 1] @ M % p
        vals = np.empty(total, dtype=np.int64)
        vals[:B] = D @ self._pvec
        if total > B:
            MB = np.eye(n, dtype=np.int64)
            e = B
            Msq = M
            while e:
                if e & 1:
                    MB = MB @ Msq % p
                Msq = Msq @ Msq % p
                e >>= 1
            pos = B
            cur = D
            while pos < total:
                cur = cur @ MB % p
                k = min(B, total - pos)
                vals[pos : pos + k] = cur[:k] @ self._pvec
                pos += k

        ones = np.flatnonzero(vals == 1)
        if len(ones) != 1 or ones[0] != 0:
            order = int(ones[1]) if len(ones) > 1 and ones[0] == 0 else 0
            raise FieldError(
                f"polynomial {list(self.poly)} over GF({p}) is not primitive: "
                f"root has multiplicative order {order or '< q-1'}, "
                f"expected {total}"
            )
        self.exp_table = vals
        log = np.full(q, -1, dtype=np.int64)
        log[vals] = np.arange(total, dtype=np.int64)
        self.log_table = log
        self.generator = int(vals[1]) if total >= 2 else 1
        self.order = q

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldContext)
            and (self.p, self.n, self.poly) == (other.p, other.n, other.poly)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.poly))

    def __repr__(self) -> str:
        return f"FieldContext(GF({self.p}^{self.n}), poly={list(self.poly)})"

    # -- scalar element arithmetic (integers in [0, q)) -------------------

    def _val(self, x) -> int:
        if isinstance(x, FieldElement):
            if x.ctx != self:
                raise FieldError("element belongs to a different field context")
            return x.val
        v = int(x)
        if not 0 <= v < self.q:
            raise FieldError(f"element value {v} out of range for GF({self.p}^{self.n})")
        return v

    def element(self, x) -> "FieldElement":
        """Wrap an encoded integer or coefficient list as a FieldElement."""
        if isinstance(x, (list, tuple)):
            if len(x) != self.n:
                raise FieldError(f"expected {self.n} coordinates, got {len(x)}")
            v = 0
            for i, c in enumerate(reversed(x)):
                if not 0 <= int(c) < self.p:
                    raise FieldError(f"coordinate {c} out of [0, {self.p})")
                v = v * self.p + int(c)
            return FieldElement(self, v)
        return FieldElement(self, self._val(x))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator_element(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    def coeffs(self, x) -> tuple[int, ...]:
        v = self._val(x)
        out = []
        for _ in range(self.n):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def add(self, a, b) -> int:
        a, b = self._val(a), self._val(b)
        if self.p == 2:
            return a ^ b
        s, m = 0, 1
        for _ in range(self.n):
            s += ((a + b) % self.p) * m
            a //= self.p
            b //= self.p
            m *= self.p
        return s

    def neg(self, a) -> int:
        a = self._val(a)
        if self.p == 2:
            return a
        s, m = 0, 1
        for _ in range(self.n):
            s += (-a % self.p) * m
            a //= self.p
            m *= self.p
        return s

    def sub(self, a, b) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> int:
        a, b = self._val(a), self._val(b)
        if a == 0 or b == 0:
            return 0
        m = self.q - 1
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % m])

    def mul_poly(self, a, b) -> int:
        """Table-free multiply (polynomial product mod poly); oracle path."""
        a, b = self._val(a), self._val(b)
        p, n = self.p, self.n
        da = self.coeffs(a)
        db = self.coeffs(b)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce degrees >= n
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(n):
                    prod[i - n + j] = (prod[i - n + j] - c * self.poly[j]) % p
        v = 0
        for c in reversed(prod[:n]):
            v = v * p + c
        return v

    def inv(self, a) -> int:
        a = self._val(a)
        if a == 0:
            raise FieldError("inversion of zero")
        m = self.q - 1
        return int(self.exp_table[(-self.log_table[a]) % m])

    def pow(self, a, e: int) -> int:
        a = self._val(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("negative power of zero")
            return 0
        m = self.q - 1
        return int(self.exp_table[(self.log_table[a] * e) % m]) if m else 1

    def discrete_log(self, x) -> int:
        x = self._val(x)
        if x == 0:
            raise FieldError("discrete log of zero")
        return int(self.log_table[x])

    def frobenius(self, x, k: int = 1) -> int:
        """x^(p^k)."""
        return self.pow(x, self.p**k)

    # -- traces and characters -------------------------------------------

    def trace(self, x, r: int = 1) -> int:
        """Tr from GF(p^n) onto GF(p^r): x + x^(p^r) + ... + x^(p^(n-r)).

        The result is the encoded value of an element lying in the subfield.
        """
        if r < 1 or self.n % r != 0:
            raise FieldError(f"subfield degree {r} does not divide {self.n}")
        x = self._val(x)
        acc = 0
        t = x
        for _ in range(self.n // r):
            acc = self.add(acc, t)
            t = self.pow(t, self.p**r)
        return acc

    def trace_int(self, x) -> int:
        """Absolute trace as an element of the prime field, i.e. an int in [0, p)."""
        t = self.trace(x, 1)
        # an element of GF(p) embedded in GF(p^n) is its constant digit
        return t % self.p

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Absolute trace of every element, int8 array of length q."""
        basis_tr = np.array(
            [self.trace_int(int(self._pvec[j])) for j in range(self.n)],
            dtype=np.int64,
        )
        out = np.empty(self.q, dtype=np.int8)
        for lo in range(0, self.q, 1 << 16):
            hi = min(self.q, lo + (1 << 16))
            D = (np.arange(lo, hi, dtype=np.int64)[:, None] // self._pvec) % self.p
            out[lo:hi] = (D @ basis_tr % self.p).astype(np.int8)
        return out

    def quadratic_character(self, x) -> int:
        """+1 for nonzero squares, -1 for nonsquares, 0 for zero.  p odd."""
        if self.p == 2:
            raise FieldError("quadratic character undefined in characteristic 2")
        x = self._val(x)
        if x == 0:
            return 0
        return -1 if self.log_table[x] & 1 else 1

    # -- subfields --------------------------------------------------------

    def subfield_generator(self, r: int) -> int:
        """A primitive element of the embedded GF(p^r)."""
        if r < 1 or self.n % r != 0:
            raise FieldError(f"subfield degree {r} does not divide {self.n}")
        m = self.q - 1
        sub = self.p**r - 1
        if sub == 0 or m == sub:
            return self.generator
        return int(self.exp_table[m // sub])

    def subfield_elements(self, r: int) -> np.ndarray:
        """All encoded values of the embedded GF(p^r), zero included."""
        if r < 1 or self.n % r != 0:
            raise FieldError(f"subfield degree {r} does not divide {self.n}")
        sub = self.p**r - 1
        if sub == 0:
            return np.array([0, 1], dtype=np.int64)[: self.p**r]
        step = (self.q - 1) // sub
        vals = self.exp_table[::step][:sub]
        return np.concatenate([[0], np.sort(vals)])

    # -- dual basis -------------------------------------------------------

    @cached_property
    def dual_basis(self) -> list[int]:
        """Basis {d_i} with Tr(d_i * x^j) = delta_ij against the power basis."""
        n, p = self.n, self.p
        G = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                G[i, j] = self.trace_int(self.mul(int(self._pvec[i]), int(self._pvec[j])))
        Ginv = _matinv_mod(G, p)
        out = []
        for i in range(n):
            v = 0
            for j in range(n):
                if Ginv[i, j]:
                    v = self.add(v, self.mul(int(Ginv[i, j]), int(self._pvec[j])))
            out.append(v)
        for i in range(n):
            for j in range(n):
                want = 1 if i == j else 0
                if self.trace_int(self.mul(out[i], int(self._pvec[j]))) != want:
                    raise FieldError("dual basis verification failed (internal bug)")
        return out

    @cached_property
    def dual_basis_digits(self) -> np.ndarray:
        """(n, n) digit matrix; row i holds the power-basis digits of d_i."""
        return self.vdigits(np.array(self.dual_basis, dtype=np.int64))

    # -- vectorized element arithmetic ------------------------------------

    def vdigits(self, vals: np.ndarray) -> np.ndarray:
        return ((np.asarray(vals, dtype=np.int64)[..., None] // self._pvec) % self.p)

    def vfromdigits(self, D: np.ndarray) -> np.ndarray:
        return (D.astype(np.int64) @ self._pvec)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.vfromdigits((self.vdigits(a) + self.vdigits(b)) % self.p)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        return self.vfromdigits((-self.vdigits(a)) % self.p)

    def vsub(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.asarray(a, dtype=np.int64) ^ np.asarray(b, dtype=np.int64)
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        m = self.q - 1
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        an, bn = np.broadcast_to(a, out.shape)[nz], np.broadcast_to(b, out.shape)[nz]
        out[nz] = self.exp_table[(self.log_table[an] + self.log_table[bn]) % m]
        return out

    def vmul_scalar(self, a, c: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        c = self._val(c)
        if c == 0:
            return np.zeros_like(a)
        m = self.q - 1
        out = np.zeros_like(a)
        nz = a != 0
        out[nz] = self.exp_table[(self.log_table[a[nz]] + self.log_table[c]) % m]
        return out

    def vpow(self, a, e: int) -> np.ndarray:
        """a^e elementwise; e >= 1 so zero maps to zero."""
        if e < 1:
            raise FieldError("vpow requires a positive exponent")
        a = np.asarray(a, dtype=np.int64)
        m = self.q - 1
        out = np.zeros_like(a)
        nz = a != 0
        out[nz] = self.exp_table[(self.log_table[a[nz]] * e) % m]
        return out

    def power_map_table(self, e: int) -> np.ndarray:
        """Table v -> v^e for all q values (e >= 1)."""
        if e < 1:
            raise FieldError("power map table requires e >= 1")
        out = np.zeros(self.q, dtype=np.int64)
        m = self.q - 1
        out[self.exp_table] = self.exp_table[(e * np.arange(m, dtype=np.int64)) % m]
        return out

    # -- GF(3^{3r}) tower -------------------------------------------------

    def tower(self) -> "Tower3r":
        return Tower3r(self)

    def tower_coords(self, x) -> "TowerCoords":
        return self.tower().coords(x)


def _matinv_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over GF(p) by Gauss-Jordan elimination."""
    n = M.shape[0]
    A = np.concatenate([M % p, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if A[r, col] % p:
                piv = r
                break
        if piv is None:
            raise FieldError("singular matrix over GF(p) (internal bug)")
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
        A[col] = A[col] * pow(int(A[col, col]), -1, p) % p
        for r in range(n):
            if r != col and A[r, col]:
                A[r] = (A[r] - A[r, col] * A[col]) % p
    return A[:, n:]


@dataclass(frozen=True)
class FieldElement:
    """One element of a FieldContext (integer-encoded coefficient vector)."""

    ctx: FieldContext
    val: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.val)

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.val, other))

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.val, other))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.val))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.val, other))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.val, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.val))

    def trace(self, r: int = 1) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.trace(self.val, r))

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"FE{list(self.coeffs)}"


@dataclass(frozen=True)
class TowerCoords:
    """Coordinates of x in GF(3^{3r}) = GF(3^r)(a): x = x0 + x1*a + x2*a^2."""

    x0: int
    x1: int
    x2: int


class Tower3r:
    """Decomposition of GF(3^{3r}) over its subfield GF(3^r) via the cubic
    generator a with a^3 + 2a + 1 = 0 (a primitive element of GF(27)).

    Requires p = 3, n = 3r, gcd(r, 3) = 1.
    """

    def __init__(self, ctx: FieldContext):
        if ctx.p != 3 or ctx.n % 3 != 0:
            raise FieldError("tower decomposition needs GF(3^{3r})")
        self.ctx = ctx
        self.r = ctx.n // 3
        if math.gcd(self.r, 3) != 1:
            raise FieldError("tower decomposition needs gcd(r, 3) = 1")
        self.a = self._locate_a()
        self.f = ctx.subfield_generator(self.r)
        self._build_matrix()

    def _locate_a(self) -> int:
        ctx = self.ctx
        g27 = ctx.subfield_generator(3)
        best = None
        cand = 1
        for _ in range(26):
            # t^3 + 2t + 1
            v = ctx.add(ctx.add(ctx.pow(cand, 3), ctx.mul(2, cand)), 1)
            if v == 0:
                lg = ctx.discrete_log(cand)
                if best is None or lg < best[0]:
                    best = (lg, cand)
            cand = ctx.mul(cand, g27)
        if best is None:
            raise FieldError("no root of t^3+2t+1 found (internal bug)")
        return best[1]

    def _build_matrix(self) -> None:
        ctx, r = self.ctx, self.r
        n = ctx.n
        # row (j*r + i) holds digits of f^i * a^j
        B = np.zeros((n, n), dtype=np.int64)
        for j in range(3):
            aj = ctx.pow(self.a, j) if j else 1
            for i in range(r):
                fi = ctx.pow(self.f, i) if i else 1
                B[j * r + i] = np.array(ctx.coeffs(ctx.mul(fi, aj)), dtype=np.int64)
        self._B = B
        self._Binv = _matinv_mod(B, 3)
        self._fpows = np.array([ctx.pow(self.f, i) if i else 1 for i in range(r)], dtype=np.int64)

    def coords(self, x) -> TowerCoords:
        c = self.vcoords(np.array([self.ctx._val(x)], dtype=np.int64))
        return TowerCoords(int(c[0][0]), int(c[1][0]), int(c[2][0]))

    def vcoords(self, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Vectorized decomposition; returns (x0, x1, x2) as encoded subfield
        elements of the ambient field."""
        ctx, r = self.ctx, self.r
        C = self.ctx.vdigits(xs) @ self._Binv % 3  # coefficients in the f^i a^j basis
        out = []
        for j in range(3):
            block = C[..., j * r : (j + 1) * r]
            acc = np.zeros(xs.shape, dtype=np.int64)
            for i in range(r):
                # a GF(3) coefficient embeds as its own encoded value
                acc = ctx.vadd(acc, ctx.vmul_scalar(block[..., i].astype(np.int64), int(self._fpows[i])))
            out.append(acc)
        return out[0], out[1], out[2]

    def recombine(self, tc: TowerCoords) -> int:
        ctx = self.ctx
        a2 = ctx.pow(self.a, 2)
        return ctx.add(
            tc.x0, ctx.add(ctx.mul(tc.x1, self.a), ctx.mul(tc.x2, a2))
        )

    def subfield_trace_int(self, u) -> np.ndarray:
        """Absolute trace GF(3^r) -> GF(3) of embedded subfield elements,
        returned as ints in [0, 3)."""
        ctx, r = self.ctx, self.r
        u = np.asarray(u, dtype=np.int64)
        acc = np.zeros_like(u)
        t = u
        for _ in range(r):
            acc = ctx.vadd(acc, t)
            t = ctx.vpow(t, 3)
        return acc % 3  # element of GF(3): constant digit


def build_field(
    p: int,
    n: int,
    poly=None,
    max_order: int = MAX_FIELD_ORDER,
) -> FieldContext:
    """Construct GF(p^n).

    When ``poly`` is omitted a default primitive polynomial is drawn from the
    shipped table (p in {2,3,5,7}).  A supplied polynomial must be monic of
    degree n over GF(p); it is re-validated for irreducibility and
    primitivity of its root.
    """
    if not _is_prime(p):
        raise FieldError(f"p must be prime, got {p}")
    if n < 1:
        raise FieldError(f"extension degree must be >= 1, got {n}")
    if p**n > max_order:
        raise FieldError(
            f"field order {p}^{n} exceeds the size cap {max_order}"
        )
    if poly is None:
        try:
            poly = default_primitive_poly(p, n)
        except KeyError as exc:
            raise FieldError(str(exc)) from None
    poly = tuple(int(c) % p for c in poly)
    if len(poly) != n + 1:
        raise FieldError(f"polynomial must have degree {n}, got degree {len(poly) - 1}")
    if poly[-1] != 1:
        raise FieldError("polynomial must be monic")
    if poly[0] == 0:
        raise FieldError(f"polynomial {list(poly)} is reducible over GF({p}): x divides it")
    if not is_irreducible(list(poly), p):
        raise FieldError(f"polynomial {list(poly)} is reducible over GF({p})")
    return FieldContext(p, n, poly)
