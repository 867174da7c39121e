"""Acceptance gate: one test per criterion of the verification battery.

Each test prints a single PASS/FAIL line directly to the terminal (outside
pytest's capture) and then asserts.  All comparisons are exact integer
multiset equality except the Gauss-sum closed-form branch (1e-6, checked
inside criterion 9) and the complex embedding (1e-9, exercised in the unit
tests).  The large-field extensions (3^15 ternary, 2^16 binary) run under
``-m big``.
"""

import pytest

from mseqcorr import suite as acc

SEED = acc.DEFAULT_SEED


def _gate(capsys, fn, big=False):
    res = fn(big, SEED)
    with capsys.disabled():
        print(res.line())
    assert res.passed, res.details
    return res


def test_criterion_01_ternary_r2_exhaustive(capsys):
    _gate(capsys, acc.criterion_1)


def test_criterion_02_ternary_r3_published_table(capsys):
    _gate(capsys, acc.criterion_2)


def test_criterion_03_ternary_r4(capsys):
    _gate(capsys, acc.criterion_3)


@pytest.mark.big
def test_criterion_03_ternary_r5_big(capsys):
    res = _gate(capsys, acc.criterion_3, big=True)
    assert res.details["r5"]["match"]


def test_criterion_04_trace_forms(capsys):
    _gate(capsys, acc.criterion_4)


def test_criterion_05_lemma6_b3(capsys):
    _gate(capsys, acc.criterion_5)


def test_criterion_06_moment_suite(capsys):
    _gate(capsys, acc.criterion_6)


def test_criterion_07_binary_theorem(capsys):
    _gate(capsys, acc.criterion_7)


@pytest.mark.big
def test_criterion_07_binary_n16_big(capsys):
    _gate(capsys, acc.criterion_7, big=True)


def test_criterion_08_l2_structure(capsys):
    _gate(capsys, acc.criterion_8)


def test_criterion_09_gauss_quadratic(capsys):
    _gate(capsys, acc.criterion_9)


def test_criterion_10_engine_equivalence(capsys):
    _gate(capsys, acc.criterion_10)


def test_criterion_11_known_family_sanity(capsys):
    _gate(capsys, acc.criterion_11)
