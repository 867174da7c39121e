"""Primitive polynomials over GF(p): search, validation helpers, shipped table.

Polynomials are dense coefficient lists over GF(p), constant term first.
The shipped defaults in ``_primpoly_data`` are the lexicographically smallest
monic polynomials of each degree whose root x is primitive; the same
deterministic search (``find_primitive_poly``) regenerates them, so results
are reproducible run to run.
"""

from __future__ import annotations

__all__ = [
    "default_primitive_poly",
    "find_primitive_poly",
    "is_irreducible",
    "poly_powmod",
]


def _trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    df, lead = len(f) - 1, f[-1]
    inv_lead = pow(lead, -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv_lead % p
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _trim([c % p for c in a[:df]] or [0])


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, f, p)


def poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    out = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            out = _poly_mulmod(out, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return out


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b != [0]:
        a, b = b, _poly_divmod_rem(a, b, p)
    return a


def _poly_divmod_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    if db == 0:
        return [0]
    inv_lead = pow(lead, -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv_lead % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim([c % p for c in a[:db]] or [0])


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (fine for n < 2^52)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for t in prime_factors(n):
        h = poly_powmod(x, p ** (n // t), f, p)
        # h - x
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, _trim(diff), p)
        if len(g) > 1:
            return False
    h = poly_powmod(x, p**n, f, p)
    diff = list(h) + [0] * (2 - len(h))
    diff[1] = (diff[1] - 1) % p
    return _trim(diff) == [0]


def _x_is_primitive(f: list[int], p: int) -> bool:
    """Whether x generates GF(p^n)* modulo the irreducible polynomial f."""
    n = len(f) - 1
    order = p**n - 1
    if order == 1:
        return True
    x = [0, 1]
    for t in prime_factors(order):
        if poly_powmod(x, order // t, f, p) == [1]:
            return False
    return True


def find_primitive_poly(p: int, n: int, skip: int = 0) -> tuple[int, ...]:
    """Deterministic search for a monic degree-n polynomial over GF(p) whose
    root x is primitive.  ``skip`` returns the (skip+1)-th match in
    lexicographic order of the low-coefficient vector; skip=0 reproduces the
    shipped table.
    """
    found = 0
    for m in range(p**n):
        coeffs = []
        mm = m
        for _ in range(n):
            coeffs.append(mm % p)
            mm //= p
        if coeffs[0] == 0:  # x divides f
            continue
        f = coeffs + [1]
        if not is_irreducible(f, p):
            continue
        if not _x_is_primitive(f, p):
            continue
        if found == skip:
            return tuple(f)
        found += 1
    raise ValueError(f"no primitive polynomial found for GF({p}^{n})")


def default_primitive_poly(p: int, n: int) -> tuple[int, ...]:
    from ._primpoly_data import PRIMITIVE_POLYS

    try:
        return PRIMITIVE_POLYS[(p, n)]
    except KeyError:
        raise KeyError(
            f"no default primitive polynomial shipped for GF({p}^{n}); "
            f"supported: p in {{2,3,5,7}} with p^n <= 2^26"
        ) from None
