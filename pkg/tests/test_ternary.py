"""Ternary-family tests: closed-form distribution, b3, trace forms."""

import pytest

from mseqcorr.spectrum import DecimationCase, spectrum
from mseqcorr.ternary import (
    lemma6_count,
    ternary_context,
    ternary_params,
    theorem4_distribution,
    trace_form_check,
    verify_theorem4,
)

R2_TABLE = {-1: 396, 80: 9, 26: 108, -28: 108, 53: 54, -55: 54}
R3_TABLE = {-1: 13338, 728: 27, 242: 3159, -244: 3159}


def test_params():
    p = ternary_params(2)
    assert (p.n, p.d, p.gcd_flag) == (6, 11, 1)
    assert p.theorem_applicable and not p.conjecture_mode
    p2 = ternary_params(2, "2r")
    assert p2.d == 83
    p3 = ternary_params(3)
    assert p3.conjecture_mode and not p3.theorem_applicable
    with pytest.raises(ValueError):
        ternary_params(0)
    with pytest.raises(ValueError):
        ternary_params(2, "3r")


def test_closed_form_r2():
    assert theorem4_distribution(ternary_params(2)) == R2_TABLE
    assert theorem4_distribution(ternary_params(2, "2r")) == R2_TABLE


def test_closed_form_refuses_r1():
    with pytest.raises(ValueError, match="collide"):
        theorem4_distribution(ternary_params(1))


def test_closed_form_counts_sum():
    for r in (2, 3, 4, 5, 7):
        dist = theorem4_distribution(ternary_params(r))
        assert sum(dist.values()) == 3 ** (3 * r)
        assert all(c > 0 for c in dist.values())
        # four values for odd r, six for even r
        assert len(dist) == (6 if r % 2 == 0 else 4)


def test_verify_r2_both_variants_and_engines():
    for variant in ("r", "2r"):
        for method in ("fast", "naive"):
            v = verify_theorem4(ternary_params(2, variant), method=method)
            assert v.match and v.all_rational
            assert v.empirical == R2_TABLE


def test_verify_r3_matches_published_table():
    for variant in ("r", "2r"):
        v = verify_theorem4(ternary_params(3, variant), method="fast")
        assert v.match
        assert v.empirical == R3_TABLE
        assert v.conjecture_mode  # r = 3 is the conjectured extension


def test_lemma6():
    for r in (1, 2, 3):
        for variant in ("r", "2r"):
            res = lemma6_count(ternary_params(r, variant))
            assert res.closed == 3**r
            assert res.brute == res.closed
            assert res.agree


def test_trace_forms_r2():
    rep = trace_form_check(ternary_params(2), z_samples=50, seed=1)
    assert rep.xd_identity_ok and rep.xz_identity_ok
    assert rep.xd_counterexample is None and rep.xz_counterexample is None


def test_trace_form_guards():
    with pytest.raises(ValueError):
        trace_form_check(ternary_params(2, "2r"))
    with pytest.raises(ValueError):
        trace_form_check(ternary_params(3))  # gcd(r, 3) != 1
    with pytest.raises(ValueError):
        trace_form_check(ternary_params(5))  # over the exhaustive budget


def test_spectrum_is_c_plus_one():
    params = ternary_params(2)
    ctx = ternary_context(params)
    dist = spectrum(DecimationCase(ctx, params.d), "fast")
    assert dist.rational_counts() == {c + 1: k for c, k in R2_TABLE.items()}


@pytest.mark.big
def test_verify_r4_and_r5():
    assert verify_theorem4(ternary_params(4), method="fast").match
    assert verify_theorem4(ternary_params(5), method="fast").match
