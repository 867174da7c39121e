"""Finite-field context tests: dual-path arithmetic, traces, dual bases,
the degree-3 tower, and input validation."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mseqcorr.field import FieldError, build_field
from mseqcorr.primpoly import find_primitive_poly, is_irreducible

FIELDS = [(2, 1), (2, 4), (2, 8), (3, 1), (3, 2), (3, 4), (5, 2), (7, 3)]


@pytest.fixture(scope="module")
def ctxs():
    return {pn: build_field(*pn) for pn in FIELDS}


@pytest.mark.parametrize("pn", FIELDS)
def test_table_vs_polynomial_mul(ctxs, pn):
    """The log/antilog route must agree with schoolbook polynomial reduction
    on every pair (exhaustive for small fields, a grid otherwise)."""
    ctx = ctxs[pn]
    step = max(1, ctx.q // 64)
    vals = list(range(0, ctx.q, step)) + [ctx.q - 1]
    for a in vals:
        for b in vals:
            assert ctx.mul(a, b) == ctx.mul_poly(a, b)


@pytest.mark.parametrize("pn", FIELDS)
def test_exp_log_roundtrip(ctxs, pn):
    ctx = ctxs[pn]
    for x in range(1, ctx.q):
        assert int(ctx.exp_table[ctx.discrete_log(x)]) == x
    assert sorted(int(v) for v in ctx.exp_table[: ctx.q - 1]) == list(range(1, ctx.q))


@given(st.sampled_from(FIELDS), st.data())
@settings(max_examples=60, deadline=None)
def test_field_axioms(ctxs, pn, data):
    ctx = ctxs[pn]
    a = data.draw(st.integers(0, ctx.q - 1))
    b = data.draw(st.integers(0, ctx.q - 1))
    c = data.draw(st.integers(0, ctx.q - 1))
    assert ctx.add(a, b) == ctx.add(b, a)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.add(a, ctx.neg(a)) == 0
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1
    assert ctx.pow(a, ctx.p) == ctx.frobenius(a)


@pytest.mark.parametrize("pn", FIELDS)
def test_trace_properties(ctxs, pn):
    ctx = ctxs[pn]
    p, q = ctx.p, ctx.q
    xs = np.arange(q, dtype=np.int64)
    tr = ctx.trace_table
    # additivity and Frobenius invariance
    for a in range(0, q, max(1, q // 32)):
        fa = ctx.frobenius(a)
        assert tr[fa] == tr[a]
        for b in range(0, q, max(1, q // 32)):
            assert tr[ctx.add(a, b)] == (tr[a] + tr[b]) % p
    # trace is onto GF(p) with uniform fibres
    counts = np.bincount(tr[xs], minlength=p)
    assert all(int(c) == q // p for c in counts)


@pytest.mark.parametrize("pn", [(2, 4), (3, 4), (5, 2), (7, 3)])
def test_dual_basis(ctxs, pn):
    ctx = ctxs[pn]
    dual = ctx.dual_basis
    for i in range(ctx.n):
        for j in range(ctx.n):
            e_i = int(ctx.p**i)  # power-basis vector x^i
            assert ctx.trace_int(ctx.mul(e_i, dual[j])) == (1 if i == j else 0)


@pytest.mark.parametrize("pn", FIELDS)
def test_vectorized_matches_scalar(ctxs, pn):
    ctx = ctxs[pn]
    rng = np.random.default_rng(7)
    a = rng.integers(0, ctx.q, 200)
    b = rng.integers(0, ctx.q, 200)
    assert all(int(v) == ctx.add(int(x), int(y)) for v, x, y in zip(ctx.vadd(a, b), a, b))
    assert all(int(v) == ctx.mul(int(x), int(y)) for v, x, y in zip(ctx.vmul(a, b), a, b))
    assert all(int(v) == ctx.pow(int(x), 5) for v, x in zip(ctx.vpow(a, 5), a))
    t = ctx.power_map_table(3)
    assert all(int(t[x]) == ctx.pow(int(x), 3) for x in a)


def test_subfield_elements():
    ctx = build_field(2, 6)
    sub = ctx.subfield_elements(3)
    assert len(sub) == 8
    for x in sub:
        assert ctx.pow(int(x), 8) == int(x)  # fixed by Frobenius^3


def test_tower_roundtrip_and_trace():
    ctx = build_field(3, 6)
    tower = ctx.tower()
    for x in range(0, ctx.q, 7):
        tc = tower.coords(x)
        assert tower.recombine(tc) == x
    xs = np.arange(ctx.q, dtype=np.int64)
    x0, x1, x2 = tower.vcoords(xs)
    for x in range(0, ctx.q, 97):
        tc = tower.coords(x)
        assert (tc.x0, tc.x1, tc.x2) == (int(x0[x]), int(x1[x]), int(x2[x]))
    # subfield trace Tr_{GF(9) -> GF(3)}(u) = u + u^3, landing in {0, 1, 2}
    for u in ctx.subfield_elements(2):
        u = int(u)
        direct = ctx.add(u, ctx.frobenius(u))
        assert direct in (0, 1, 2)
        got = int(tower.subfield_trace_int(np.array([u], dtype=np.int64))[0])
        assert got == direct


def test_tower_requires_char3_multiple():
    with pytest.raises(FieldError):
        build_field(2, 6).tower()
    with pytest.raises(FieldError):
        build_field(3, 4).tower()


def test_build_rejects_bad_input():
    with pytest.raises(FieldError):
        build_field(4, 2)  # not prime
    with pytest.raises(FieldError):
        build_field(3, 0)
    with pytest.raises(FieldError):
        build_field(2, 40)  # above the table cap
    # irreducible but imprimitive: x^2 + 1 over GF(3) has root of order 4
    with pytest.raises(FieldError, match="primitiv"):
        build_field(3, 2, (1, 0, 1))
    # reducible
    with pytest.raises(FieldError):
        build_field(2, 2, (1, 0, 1))


def test_primitive_poly_search_matches_table():
    for p, n in ((2, 8), (3, 5), (5, 3), (7, 2)):
        found = find_primitive_poly(p, n)
        assert is_irreducible(found, p)
        ctx = build_field(p, n)  # table default must build a primitive field
        assert ctx.q == p**n
