"""Binary-family tests: parameter validation, class counts and the exact
count-to-correlation formula, the full-sweep theorem checks, and the l = 2
structure."""

import math

import pytest

from mseqcorr.binary import (
    BinaryParamError,
    binary_context,
    binary_params,
    cc_from_counts,
    classify,
    l2_structure,
    n_counts,
    theorem9_verify,
)
from mseqcorr.spectrum import DecimationCase, weil_sum

VALID = [(2, 1, 1), (2, 1, 3), (2, 2, 0), (2, 3, 1), (4, 1, 0)]


def test_params_values():
    p = binary_params(2, 1, 1)
    assert (p.n, p.d) == (4, 7)
    assert p.valid
    p = binary_params(2, 2, 0)
    assert (p.n, p.d) == (8, 52)
    assert p.valid


def test_params_rejections():
    with pytest.raises(BinaryParamError, match="Niho"):
        binary_params(3, 1, 0)
    with pytest.raises(BinaryParamError, match="Niho"):
        binary_params(1, 2, 0)
    with pytest.raises(BinaryParamError):
        binary_params(2, 0, 0)
    with pytest.raises(BinaryParamError):
        binary_params(2, 1, 4)  # s out of [0, n)


def test_invalid_gcd_detected():
    p = binary_params(2, 1, 2)
    assert not p.valid
    assert "gcd" in p.gcd_reason
    assert math.gcd(p.d, 2**p.n - 1) > 1
    with pytest.raises(BinaryParamError, match="invalid parameters"):
        theorem9_verify(p)
    with pytest.raises(BinaryParamError, match="invalid parameters"):
        l2_structure(p)


@pytest.mark.parametrize("l,m,s", VALID)
def test_validity_matches_gcd(l, m, s):
    p = binary_params(l, m, s)
    assert p.valid == (math.gcd(p.d, 2**p.n - 1) == 1)


def test_classify_partition():
    params = binary_params(2, 1, 1)
    ctx = binary_context(params)
    tags = [classify(ctx, x, params.m) for x in range(ctx.q)]
    assert tags.count("INF") == 1
    # |C0| = (q-1)/(2^m+1), the rest is C1
    assert tags.count("C0") == (ctx.q - 1) // 3
    assert tags.count("C1") == ctx.q - 1 - (ctx.q - 1) // 3


@pytest.mark.parametrize("l,m,s", [(2, 1, 1), (2, 2, 0), (2, 3, 1)])
def test_n_counts_two_routes_and_formula(l, m, s):
    params = binary_params(l, m, s)
    ctx = binary_context(params)
    case = DecimationCase(ctx, params.d % (ctx.q - 1))
    n_inf_one = 0
    for z in range(ctx.q):
        counts = n_counts(params, ctx, z, via="A")
        assert counts == n_counts(params, ctx, z, via="D0")
        assert sum(counts) == 2**m + 1
        assert cc_from_counts(params, counts) == weil_sum(case, z).rational()
        n_inf_one += counts[0] == 1
    # exactly 2^m + 1 shifts see a single vanishing representative
    assert n_inf_one == 2**m + 1


def test_cc_from_counts_guards():
    params = binary_params(2, 1, 1)
    with pytest.raises(ValueError):
        cc_from_counts(params, (0, 0, 0))


@pytest.mark.parametrize("l,m,s", VALID)
def test_theorem9_claims(l, m, s):
    rep = theorem9_verify(binary_params(l, m, s))
    assert rep.zero_attained and rep.zero_witness is not None
    assert rep.min_distinct_ok and rep.distinct_values >= 4
    assert rep.large_value_ok and rep.max_value >= 2 ** (l * m + 1)
    assert rep.divisibility_ok
    assert rep.all_ok


def test_theorem9_witnesses_recheckable():
    params = binary_params(2, 2, 0)
    rep = theorem9_verify(params)
    ctx = binary_context(params)
    case = DecimationCase(ctx, params.d % (ctx.q - 1))
    assert weil_sum(case, rep.zero_witness).rational() == 0
    assert weil_sum(case, rep.max_witness).rational() == rep.max_value


def test_l2_structure_branches():
    rep = l2_structure(binary_params(2, 1, 1))
    assert rep.branch == "u=2^m+1" and rep.u == 3
    assert rep.predicted_s_at_one == 0 and rep.predicted_s_on_d0 == 8
    assert rep.ok
    rep = l2_structure(binary_params(2, 2, 0))
    assert rep.branch == "u<2^m+1" and rep.u == 1
    assert rep.predicted_s_at_one == 64 and rep.predicted_s_on_d0 == 48
    assert rep.ok


def test_l2_structure_rejects_l4():
    with pytest.raises(BinaryParamError):
        l2_structure(binary_params(4, 1, 0))


@pytest.mark.big
def test_theorem9_n16():
    rep = theorem9_verify(binary_params(2, 4, 0))
    assert rep.all_ok
    assert l2_structure(binary_params(2, 4, 0)).ok
