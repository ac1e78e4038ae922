import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pin2fill.lattice import (
    ClassificationError,
    Invariants,
    LatticeForm,
    classify_even_indefinite,
    e8_gram,
    gram,
    invariants,
)


def test_classify_examples():
    assert classify_even_indefinite(1, 9) == LatticeForm(1, 1, -1)
    assert classify_even_indefinite(2, 18) == LatticeForm(2, 2, -1)
    assert classify_even_indefinite(1, 1) == LatticeForm(1, 0)
    assert classify_even_indefinite(9, 1) == LatticeForm(1, 1, 1)
    with pytest.raises(ClassificationError, match="signature -1"):
        classify_even_indefinite(1, 2)
    with pytest.raises(ClassificationError, match="inapplicable"):
        classify_even_indefinite(0, 8)


def test_names():
    assert str(LatticeForm(2, 1, -1)) == "2H⊕E8(-1)"
    assert LatticeForm(2, 1, -1).name == "2H⊕E8"
    assert str(LatticeForm(1, 0)) == "H"
    assert LatticeForm(3, 0, -1).eps == 1


def test_gram_examples():
    assert gram(LatticeForm(1, 0)) == [[0, 1], [1, 0]]
    e8 = np.array(e8_gram())
    assert e8.shape == (8, 8) and all(e8[i, i] == 2 for i in range(8))
    assert round(np.linalg.det(e8)) == 1
    g = gram(LatticeForm(2, 1, -1))
    assert len(g) == 12
    assert invariants(g) == Invariants(12, -8, True, 1)


def test_invariants_examples():
    assert invariants(gram(LatticeForm(1, 0))) == Invariants(2, 0, True, -1)
    assert invariants(gram(LatticeForm(0, 1, -1))) == Invariants(8, -8, True, 1)
    assert invariants([[1]]) == Invariants(1, 1, False, 1)
    with pytest.raises(ValueError):
        invariants([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        invariants([[0, 1]])


def test_round_trip_all_small_forms():
    for p, q, eps in itertools.product(range(4), range(4), (1, -1)):
        if p == q == 0:
            continue
        form = LatticeForm(p, q, eps)
        g = gram(form)
        inv = invariants(g)
        assert (inv.rank, inv.signature, inv.even) == (2 * p + 8 * q, 8 * form.eps * q, True)
        assert inv.det in (1, -1)
        assert round(np.linalg.det(np.array(g, dtype=float))) == inv.det  # float oracle
        if p >= 1:
            bp, bm = (inv.rank + inv.signature) // 2, (inv.rank - inv.signature) // 2
            assert classify_even_indefinite(bp, bm) == form


@given(st.integers(1, 30), st.integers(1, 30))
def test_classification_rank_identity(bp, bm):
    if (bp - bm) % 8:
        with pytest.raises(ClassificationError):
            classify_even_indefinite(bp, bm)
    else:
        f = classify_even_indefinite(bp, bm)
        assert f.rank == bp + bm and f.signature == bp - bm


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_signature_matches_eigenvalues(xs):
    a = np.array(xs).reshape(3, 3)
    g = (a + a.T).tolist()
    inv = invariants(g)
    ev = np.linalg.eigvalsh(np.array(g, dtype=float))
    assert inv.rank == int(np.sum(np.abs(ev) > 1e-9))
    assert inv.signature == int(np.sum(ev > 1e-9)) - int(np.sum(ev < -1e-9))
    assert inv.det == round(np.linalg.det(np.array(g, dtype=float)))
