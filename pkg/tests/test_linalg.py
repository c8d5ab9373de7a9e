"""Exact linear algebra audited against plain Fraction elimination."""

import random
from fractions import Fraction

import numpy
import pytest

from jordal.geometry import sample_rank_one, tangent_frame
from jordal.jordan import JordanSpec
from jordal.linalg import (
    LinearOperator,
    SingularMatrix,
    TagMismatch,
    common_denominator,
    exact_det,
    exact_inverse,
    exact_nullspace,
    exact_rank,
    exact_solve,
    identity_matrix,
    mat_mul,
    mat_vec,
    primitive_integer_vector,
    proportional,
    to_integer_matrix,
    transpose,
)
from oracles import gauss_det, gauss_rank, gauss_solve


def random_matrix(rng, nrows, ncols, rational=False, deficient=0):
    """Random integer or rational matrix, with planted row dependencies."""
    def cell():
        if rational and rng.random() < 0.3:
            return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return rng.randint(-9, 9)

    rows = [[cell() for _ in range(ncols)] for _ in range(nrows)]
    for _ in range(deficient):
        # overwrite a row with a combination of two others
        i, j, t = rng.randrange(nrows), rng.randrange(nrows), rng.randrange(nrows)
        if len({i, j, t}) < 3 and nrows >= 3:
            continue
        c1, c2 = rng.randint(-3, 3), rng.randint(-3, 3)
        rows[t] = [c1 * a + c2 * b for a, b in zip(rows[i], rows[j])]
    return rows


def test_rank_randomized_audit():
    rng = random.Random(100)
    for trial in range(60):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        m = random_matrix(rng, nrows, ncols,
                          rational=trial % 2 == 0,
                          deficient=rng.randint(0, 2))
        assert exact_rank(m) == gauss_rank(m)


def test_rank_tall_deficient():
    # the shape class that exposed a historical elimination bug: many rows,
    # heavy planted dependencies, entries of mixed magnitude
    rng = random.Random(101)
    for _ in range(20):
        m = random_matrix(rng, 12, 7, deficient=5)
        assert exact_rank(m) == gauss_rank(m)


def test_rank_tangent_frame_regression():
    # octonion tangent frames miscomputed as rank 14 once; true rank is 17
    spec = JordanSpec(2, 8)
    rng = random.Random(102)
    for _ in range(3):
        fr = tangent_frame(sample_rank_one(spec, rng), check=False)
        rows = fr.rows()
        r = exact_rank(rows)
        assert r == 17
        assert r == gauss_rank(rows)
        assert r == numpy.linalg.matrix_rank(
            numpy.array([[float(v) for v in row] for row in rows]))


def test_nullspace():
    rng = random.Random(103)
    for _ in range(30):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        m = random_matrix(rng, nrows, ncols, deficient=rng.randint(0, 2))
        basis = exact_nullspace(m)
        assert len(basis) == ncols - exact_rank(m)
        for vec in basis:
            assert any(v != 0 for v in vec)
            assert all(sum(a * b for a, b in zip(row, vec)) == 0 for row in m)
        # basis vectors are independent
        if basis:
            assert exact_rank(list(basis)) == len(basis)


def test_det_against_oracles():
    rng = random.Random(104)
    for n in range(1, 7):
        for _ in range(8):
            m = random_matrix(rng, n, n, rational=n % 2 == 0)
            d = exact_det(m)
            assert d == gauss_det(m)
            if all(isinstance(v, int) for row in m for v in row):
                nd = numpy.linalg.det(numpy.array(m, dtype=float))
                assert abs(float(d) - nd) < 1e-6 * (1 + abs(nd))


def test_det_singular():
    m = [[1, 2], [2, 4]]
    assert exact_det(m) == 0


def test_solve_and_inverse():
    rng = random.Random(105)
    for n in range(1, 7):
        for _ in range(6):
            m = random_matrix(rng, n, n, rational=True)
            if exact_det(m) == 0:
                continue
            rhs = [rng.randint(-9, 9) for _ in range(n)]
            x = exact_solve(m, rhs)
            assert list(x) == gauss_solve(m, rhs)
            assert [sum(a * b for a, b in zip(row, x)) for row in m] == list(rhs)
            inv = exact_inverse(m)
            assert mat_mul(m, inv) == identity_matrix(n)
            assert mat_mul(inv, m) == identity_matrix(n)


def test_solve_singular_raises():
    with pytest.raises(SingularMatrix):
        exact_solve([[1, 2], [2, 4]], [1, 1])
    with pytest.raises(SingularMatrix):
        exact_inverse([[0, 0], [0, 0]])


def test_integer_normalization_helpers():
    assert common_denominator([Fraction(1, 2), Fraction(1, 3), 4]) == 6
    assert common_denominator([1, 2, 3]) == 1
    m = to_integer_matrix([[Fraction(1, 2), 1], [2, Fraction(1, 3)]])
    assert all(isinstance(v, int) for row in m for v in row)
    # row scalings preserve rank
    assert exact_rank(m) == 2
    assert primitive_integer_vector([Fraction(2, 3), Fraction(4, 3)]) == (1, 2)
    # content is divided out, sign of the entries is kept
    assert primitive_integer_vector([-2, -4, -6]) == (-1, -2, -3)
    assert primitive_integer_vector([0, 0]) == (0, 0)


def test_proportional():
    assert proportional((2, 4, 6), (3, 6, 9))
    assert proportional((0, 0), (0, 0))
    assert not proportional((1, 0), (0, 1))
    assert not proportional((2, 4, 6), (3, 6, 10))
    assert proportional((Fraction(1, 2), 1), (2, 4))


def test_mat_helpers():
    m = [[1, 2], [3, 4], [5, 6]]
    assert transpose(m) == ((1, 3, 5), (2, 4, 6))
    assert mat_vec(m, (1, 1)) == (3, 7, 11)


def test_linear_operator_tags_and_compose():
    # tags track whether an operator lands in coordinates or covectors
    a = LinearOperator(((1, 1), (0, 1)), "V", "V*")
    b = LinearOperator(((2, 0), (0, 3)), "V*", "V")
    c = b.compose(a)  # first a, then b: V -> V
    assert c.domain == "V" and c.codomain == "V"
    assert c.apply((1, 0)) == (2, 0)
    with pytest.raises(TagMismatch):
        a.compose(a)
    t = a.transpose_op()
    assert t.domain == "V" and t.codomain == "V*"
    assert t.matrix == transpose(a.matrix)
    sym = LinearOperator(((2, 5), (5, 1)))
    assert sym.is_symmetric()
    assert not a.is_symmetric()
    assert sym.det() == 2 * 1 - 25
    assert sym.trace() == 3
