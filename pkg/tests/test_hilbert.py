from fractions import Fraction

import pytest

from detloci.degrees import DegreeData
from detloci.hilbert import (EmptyLocusError, check_codim, hilbert_function,
                             hilbert_polynomial)

CUBIC = DegreeData((0, 0), (1, 1, 1), 1)
LINEAR_C4 = DegreeData((0, 0, 0), (1, 1, 1, 1, 1, 1), 1)
LINEAR_C5 = DegreeData((0, 0, 0), (1, 1, 1, 1, 1, 1, 1), 1)
SURFACE = DegreeData((0, 0), (1, 1, 1, 1, 1, 1), 2)
MIXED = DegreeData((0,), (1, 1, 5), 1)


def test_cubic_polynomial():
    s = hilbert_polynomial(CUBIC)
    assert s.coeffs == (Fraction(1), Fraction(3))
    assert (s.dimension, s.degree, s.genus) == (1, 3, 0)


def test_cubic_hilbert_function_values():
    assert [hilbert_function(CUBIC, v) for v in range(4)] == [1, 4, 7, 10]


def test_linear_c4_polynomial():
    s = hilbert_polynomial(LINEAR_C4)
    assert s.coeffs == (Fraction(-9), Fraction(15))
    assert (s.dimension, s.degree, s.genus) == (1, 15, 10)


def test_linear_c5_polynomial():
    s = hilbert_polynomial(LINEAR_C5)
    assert s.coeffs == (Fraction(-14), Fraction(21))
    assert (s.dimension, s.degree, s.genus) == (1, 21, 15)


def test_surface_polynomial():
    s = hilbert_polynomial(SURFACE)
    assert s.coeffs == (Fraction(1), Fraction(4), Fraction(3))
    assert (s.dimension, s.degree) == (2, 6)
    assert s.genus is None


def test_mixed_polynomial():
    s = hilbert_polynomial(MIXED)
    assert s.coeffs == (Fraction(-5), Fraction(5))
    assert (s.dimension, s.degree, s.genus) == (1, 5, 6)


def test_function_meets_polynomial_eventually():
    for d in (CUBIC, LINEAR_C4, SURFACE, MIXED):
        s = hilbert_polynomial(d)
        # sum of all column degrees bounds the regularity comfortably
        start = sum(d.a)
        for v in range(start, start + 3):
            assert hilbert_function(d, v) == s.evaluate(v)


def test_function_vanishes_in_negative_degrees():
    for d in (CUBIC, MIXED):
        assert hilbert_function(d, -1) == 0
        assert hilbert_function(d, -4) == 0


def test_empty_locus_raises():
    empty = DegreeData((0, 0), (0, 1, 1), 1)
    with pytest.raises(EmptyLocusError):
        hilbert_polynomial(empty)
    with pytest.raises(EmptyLocusError):
        check_codim(empty)


def test_json_shape():
    obj = hilbert_polynomial(LINEAR_C4).to_json()
    assert obj == {"poly": ["-9", "15"], "dim": 1, "degree": "15", "genus": 10}


def test_check_codim_holds_on_valid_data():
    for d in (CUBIC, LINEAR_C4, LINEAR_C5, SURFACE, MIXED):
        assert check_codim(d)
    # the declared n genuinely steers the computation: same (b; a) with a
    # different n still matches, it just describes a different ambient space
    assert check_codim(DegreeData((0, 0), (1, 1, 1), 3))
