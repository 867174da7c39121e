"""Gauss-sum and quadratic character-sum tests."""

import random

import pytest

from mseqcorr.characters import additive_char, gauss_sum, quadratic_sum
from mseqcorr.cyclo import CycInt
from mseqcorr.field import FieldError, build_field


def test_gauss_sum_gf3_explicit():
    g = gauss_sum(3, 1)
    assert g.direct == CycInt(3, (1, 2))  # 1 + 2*zeta = zeta - zeta^2
    assert g.match_exact and g.match_float


def test_gauss_sum_gf9_is_rational():
    g = gauss_sum(3, 2)
    assert g.direct.rational() == 3
    assert g.match


@pytest.mark.parametrize("p,s", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)])
def test_gauss_sum_identities(p, s):
    g = gauss_sum(p, s)
    q = p**s
    eta_m1 = 1 if q % 4 == 1 else -1
    assert g.direct * g.direct == CycInt.from_int(p, eta_m1 * q)
    assert g.direct * g.direct.conj() == CycInt.from_int(p, q)
    assert g.match_float


def test_gauss_sum_rejects_char2():
    with pytest.raises(FieldError):
        gauss_sum(2, 3)


def test_additive_char_is_multiplicative_in_addition():
    ctx = build_field(5, 2)
    for a in range(0, 25, 3):
        for b in range(0, 25, 4):
            assert additive_char(ctx, ctx.add(a, b)) == additive_char(ctx, a) * additive_char(ctx, b)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)])
def test_quadratic_sum_closed_form(p, n):
    ctx = build_field(p, n)
    rng = random.Random(99)
    for _ in range(40):
        a2 = rng.randrange(1, ctx.q)
        a1 = rng.randrange(ctx.q)
        a0 = rng.randrange(ctx.q)
        res = quadratic_sum(ctx, a2, a1, a0)
        assert res.match, (p, n, a2, a1, a0)


def test_quadratic_sum_rejects_degenerate():
    ctx = build_field(3, 2)
    with pytest.raises(FieldError):
        quadratic_sum(ctx, 0, 1, 1)
    with pytest.raises(FieldError):
        quadratic_sum(build_field(2, 2), 1, 1, 1)
