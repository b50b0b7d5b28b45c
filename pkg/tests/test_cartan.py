from fractions import Fraction

import pytest

from affine_kschur.cartan import (
    build_cartan_datum,
    fundamental_alcove_centroid,
    positive_roots,
    vector,
)
from affine_kschur.errors import ConfigurationError
from affine_kschur.weyl import apply_diamond, generator


def test_type_c_coweights(c3):
    assert c3.coweight(1) == vector([2, 0, 0])
    assert c3.coweight(2) == vector([2, 2, 0])
    assert c3.coweight(3) == vector([1, 1, 1])
    assert c3.form_scale == Fraction(1, 2)


def test_type_c_centroid_and_marks(c3):
    assert fundamental_alcove_centroid(c3) == (Fraction(3, 4), Fraction(1, 2), Fraction(1, 4))
    assert c3.marks == (1, 2, 2, 1)


def test_affine_cartan_matrix_c3(c3):
    assert c3.cartan_matrix == (
        (2, -1, 0, 0),
        (-2, 2, -1, 0),
        (0, -1, 2, -2),
        (0, 0, -1, 2),
    )


def test_s0_reflects_first_coordinate(c3):
    p = vector([Fraction(1, 3), 5, -2])
    assert apply_diamond(generator(c3, 0), p) == (Fraction(5, 3), 5, -2)


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 3), ("C", 2), ("C", 4), ("D", 4)])
def test_duality(family, rank):
    datum = build_cartan_datum(family, rank)
    for i in datum.finite_nodes:
        for j in datum.finite_nodes:
            want = 1 if i == j else 0
            assert datum.pair(datum.alpha(i), datum.coweight(j)) == want
            assert datum.pair(datum.weight(i), datum.alpha_check(j)) == want
            assert datum.pair(datum.alpha_check(i), datum.alpha(j)) == datum.cartan_matrix[i][j]


@pytest.mark.parametrize("family,rank,count", [("A", 2, 3), ("B", 3, 9), ("C", 3, 9), ("D", 4, 12)])
def test_positive_root_count(family, rank, count):
    assert len(positive_roots(build_cartan_datum(family, rank))) == count


def test_highest_root_is_sum_of_marks(b3):
    theta = tuple(
        sum((b3.mark(i) * b3.alpha(i)[c] for i in b3.finite_nodes), Fraction(0))
        for c in range(b3.dim)
    )
    assert theta == b3.highest_root == vector([1, 1, 0])


def test_datum_is_shared():
    assert build_cartan_datum("C", 3) is build_cartan_datum("c", 3)


@pytest.mark.parametrize("family,rank", [("C", 1), ("B", 2), ("D", 3), ("E", 6), ("A", 1)])
def test_unsupported_types(family, rank):
    with pytest.raises(ConfigurationError):
        build_cartan_datum(family, rank)
