import pytest

from affine_kschur.cartan import build_cartan_datum


@pytest.fixture(scope="session")
def c2():
    return build_cartan_datum("C", 2)


@pytest.fixture(scope="session")
def c3():
    return build_cartan_datum("C", 3)


@pytest.fixture(scope="session")
def c4():
    return build_cartan_datum("C", 4)


@pytest.fixture(scope="session")
def b3():
    return build_cartan_datum("B", 3)


@pytest.fixture(scope="session")
def d4():
    return build_cartan_datum("D", 4)


@pytest.fixture(scope="session")
def a2():
    return build_cartan_datum("A", 2)


def words_to_elements(datum, words):
    from affine_kschur.weyl import element_from_word, parse_word
    return {element_from_word(datum, parse_word(w, datum)) for w in words}
