from fractions import Fraction as F

import pytest

from circal import linalg
from circal.errors import BadCardinality, RankDeficient, SingularMatrix


def test_det_and_rank():
    a = linalg.freeze([[1, 2], [3, 4]])
    assert linalg.det(a) == -2
    assert linalg.rank(a) == 2
    singular = linalg.freeze([[1, 2], [2, 4]])
    assert linalg.det(singular) == 0
    assert linalg.rank(singular) == 1


def test_solve_exact():
    a = linalg.freeze([[2, 1], [1, 3]])
    x = linalg.solve(a, [F(5), F(10)])
    assert x == [F(1), F(3)]
    with pytest.raises(SingularMatrix):
        linalg.solve(linalg.freeze([[1, 1], [1, 1]]), [F(1), F(2)])


def test_minor_column_selection():
    a = linalg.freeze([[1, 0, 2], [0, 1, 3]])
    assert linalg.minor(a, {1, 2}) == 1
    assert linalg.minor(a, {1, 3}) == 3
    with pytest.raises(BadCardinality):
        linalg.minor(a, {1})
    with pytest.raises(BadCardinality):
        linalg.minor(a, {1, 4})


def test_all_minors_requires_full_rank():
    with pytest.raises(RankDeficient):
        linalg.all_minors(linalg.freeze([[1, 2], [2, 4]]))
    out = linalg.all_minors(linalg.freeze([[1, 0, 1], [0, 1, 1]]))
    assert out[frozenset({1, 2})] == 1
    assert out[frozenset({2, 3})] == -1


def test_matmul_identity():
    a = linalg.freeze([[1, 2], [3, 4]])
    assert linalg.matmul(a, linalg.identity(2)) == a
    assert linalg.transpose(a) == ((F(1), F(3)), (F(2), F(4)))
