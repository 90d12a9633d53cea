"""Sparse verifiers against the dense evaluator in ``dense_oracle``.

Verdicts, failure counts and the full witness lists (cap lifted) must agree.
"""

import warnings

import pytest

import corpus
from dense_oracle import (
    dense_bb1, dense_bb2, dense_bb3, dense_colie, dense_lb, dense_lie, normalize, sparse_witnesses,
)
from hbeta import bb1_verify, bb2_verify, bb3_verify, bialgebra_verify, colie_verify, lie_verify

UNCAPPED = 10**9

LIE = corpus.lie_algebras()
BIALG = corpus.bialgebras()
PAIRS = corpus.pairs()
CPAIRS = corpus.cobracked_pairs()


def agree(report, oracle):
    for check_id, expected in oracle.items():
        got = sparse_witnesses(report, check_id)
        assert got == normalize(expected), check_id
        assert report[check_id].failures == len(expected)
        assert report[check_id].passed == (not expected)


@pytest.mark.parametrize("name", sorted(LIE))
def test_lie(name):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        agree(lie_verify(LIE[name], cap=UNCAPPED), dense_lie(LIE[name]))


@pytest.mark.parametrize("name", sorted(BIALG))
def test_colie_and_lb(name):
    L, delta = BIALG[name]
    agree(colie_verify(delta, L.beta, cap=UNCAPPED), dense_colie(delta, L.beta))
    agree(bialgebra_verify(L, delta, cap=UNCAPPED), dense_lb(L, delta))


@pytest.mark.parametrize("name", sorted(PAIRS))
def test_bb1_bb2(name):
    pair = PAIRS[name]
    agree(bb1_verify(pair, cap=UNCAPPED), dense_bb1(pair))
    agree(bb2_verify(pair, cap=UNCAPPED), dense_bb2(pair))


@pytest.mark.parametrize("name", sorted(CPAIRS))
def test_bb3(name):
    cp = CPAIRS[name]
    agree(bb3_verify(cp, cap=UNCAPPED), dense_bb3(cp))
    for d in (cp.deltaA, cp.deltaH):
        agree(colie_verify(d, cp.pair.beta, cap=UNCAPPED), dense_colie(d, cp.pair.beta))


def test_oracle_sees_failures():
    """The corpus is not vacuous: each oracle reports at least one failure somewhere."""
    assert dense_lie(LIE["sl2_he3"])["jacobi"]
    assert dense_lb(*BIALG["sl2_bad"])["LB"]
    assert dense_colie(BIALG["sl2_transposed_he3"][1], LIE["sl2"].beta)["co-jacobi"]
    assert dense_bb1(PAIRS["sl2_bb1_fail"])["BB1"]
    assert dense_bb2(PAIRS["sl2_bb2_fail"])["BB2"]
    assert dense_bb3(CPAIRS["bb3_failure"])["BB3"]
