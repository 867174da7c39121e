"""Exact arithmetic in the ring Z[zeta_p] of cyclotomic integers.

Every character sum in this package is a Z-linear combination of p-th roots
of unity.  Values are kept in the basis {1, zeta, ..., zeta^(p-2)} so that
canonical forms are unique and the "is this a plain integer?" question is a
coordinate test.  zeta^(p-1) is eliminated via

    zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).

For p = 2 a value degenerates to a single integer (zeta = -1).  Coordinates
are Python ints, so third moments of order p^(3n) never overflow.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

__all__ = ["CycInt"]


@dataclass(frozen=True)
class CycInt:
    """A cyclotomic integer over the p-th roots of unity, in canonical form.

    ``coords`` has length p-1 and represents sum(coords[i] * zeta^i).
    """

    p: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"root-of-unity order must be >= 2, got {self.p}")
        if len(self.coords) != self.p - 1:
            raise ValueError(
                f"expected {self.p - 1} coordinates for p={self.p}, "
                f"got {len(self.coords)}"
            )

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> "CycInt":
        return cls.from_int(p, 1)

    @classmethod
    def from_int(cls, p: int, k: int) -> "CycInt":
        return cls(p, (k,) + (0,) * (p - 2))

    @classmethod
    def root_power(cls, p: int, k: int) -> "CycInt":
        """zeta^k, canonicalized."""
        counts = [0] * p
        counts[k % p] = 1
        return cls.from_exponent_counts(p, counts)

    @classmethod
    def from_exponent_counts(cls, p: int, counts) -> "CycInt":
        """sum(counts[k] * zeta^k for k in range(p)), canonicalized.

        ``counts`` may be any integer sequence of length p (or shorter; missing
        entries count as zero).
        """
        full = [0] * p
        for k, c in enumerate(counts):
            full[k % p] += int(c)
        top = full[p - 1]
        return cls(p, tuple(full[i] - top for i in range(p - 1)))

    # -- ring operations --------------------------------------------------

    def _check(self, other: "CycInt") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed root orders: {self.p} vs {other.p}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        self._check(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        self._check(other)
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coords))
        self._check(other)
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    full[(i + j) % p] += a * b
        return CycInt.from_exponent_counts(p, full)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not cyclotomic integers")
        out = CycInt.one(self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> "CycInt":
        """Complex conjugation, zeta -> zeta^(p-1)."""
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coords):
            full[(p - i) % p] += a
        return CycInt.from_exponent_counts(p, full)

    # -- views ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def rational(self) -> int | None:
        """The value as a plain integer, or None if it is irrational."""
        if any(a != 0 for a in self.coords[1:]):
            return None
        return self.coords[0]

    def to_complex(self) -> complex:
        """Floating approximation; a derived view, never used for equality."""
        p = self.p
        return sum(
            a * cmath.exp(2j * cmath.pi * i / p)
            for i, a in enumerate(self.coords)
        ) + 0j

    def to_json(self) -> dict:
        out: dict = {"p": self.p, "coords": list(self.coords)}
        r = self.rational()
        if r is not None:
            out["rational"] = r
        return out

    def __repr__(self) -> str:
        r = self.rational()
        if r is not None:
            return f"CycInt({self.p}, {r})"
        terms = []
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                z = "z" if i == 1 else f"z^{i}"
                terms.append(f"{a}*{z}")
        return f"CycInt({self.p}, {' + '.join(terms) or '0'})"

    def sort_key(self):
        """Deterministic ordering: rationals first (by value), then by coords."""
        r = self.rational()
        if r is not None:
            return (0, r, self.coords)
        return (1, 0, self.coords)
