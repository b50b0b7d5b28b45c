import pytest

from affine_kschur.cartan import add, fundamental_alcove_centroid, vector
from affine_kschur.errors import UnsupportedFormulaError
from affine_kschur.walk import ANCHOR, to_pixel, walk_figure
from affine_kschur.weyl import canonical_reduced_word, pseudo_translation, separating_hyperplanes


def test_example_walk_has_eleven_vertices(c2):
    figure = walk_figure(c2, (2, 1, 2, 1, 0, 1, 0, 2, 1, 0))
    assert len(figure.path) == 11
    for p, q in zip(figure.path, figure.path[1:]):
        assert separating_hyperplanes(c2, p, q) == 1
    svg = figure.render()
    assert svg.count("<circle") == 11
    assert svg.count('class="walk"') == 1
    assert 'class="wall-0"' in svg and 'class="wall-1"' in svg and 'class="wall-2"' in svg


def test_empty_walk(c2):
    figure = walk_figure(c2, ())
    assert figure.path == [fundamental_alcove_centroid(c2)]
    assert figure.render().count("<circle") == 1


def test_walk_to_pseudo_translation(c2):
    z = pseudo_translation(c2, c2.coweight(2))
    figure = walk_figure(c2, canonical_reduced_word(z).letters)
    assert figure.path[-1] == add(fundamental_alcove_centroid(c2), vector([1, 1]))


def test_centroid_lands_on_anchor(c2, a2):
    assert to_pixel(c2, fundamental_alcove_centroid(c2)) == ANCHOR
    assert to_pixel(a2, fundamental_alcove_centroid(a2)) == ANCHOR


def test_walk_output_is_stable(a2):
    word = (0, 1, 2, 0)
    assert walk_figure(a2, word).render() == walk_figure(a2, word).render()


def test_walk_needs_rank_two(c3):
    with pytest.raises(UnsupportedFormulaError):
        walk_figure(c3, (0,))
