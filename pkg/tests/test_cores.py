import pytest

from affine_kschur.cores import (
    EMPTY,
    SymmetricCore,
    apply_word_to_core,
    containment_interval,
    core_of,
    cores_in_interval,
    grassmannian_of,
    hook_length,
    interval_mismatch,
    marked_cells,
    peel_word,
    render_colored,
    render_colored_latex,
    render_full_latex,
    render_shifted,
    residue,
)
from affine_kschur.errors import DomainError, UnsupportedFormulaError
from affine_kschur.kschur import interval_ends
from affine_kschur.verify import elements_up_to
from affine_kschur.weyl import automorphism_of_coweight, element_from_word, generator, parse_word, pseudo_translation


def test_residues_k3():
    assert [residue(3, (1, c)) for c in range(1, 9)] == [0, 1, 2, 3, 2, 1, 0, 1]
    assert residue(3, (2, 1)) == 1
    assert residue(3, (4, 1)) == 3


def test_partition_validation():
    assert SymmetricCore((3, 1, 0)).parts == (3, 1)
    with pytest.raises(DomainError):
        SymmetricCore((1, 2))
    with pytest.raises(DomainError):
        SymmetricCore.checked((2,), 3)
    assert SymmetricCore.checked((2, 1), 3).parts == (2, 1)


def test_hook_length():
    core = SymmetricCore((6, 3, 2, 1, 1, 1))
    assert hook_length(core, (1, 1)) == 11
    assert hook_length(core, (2, 2)) == 3


def test_word_to_core_example(c3):
    w = element_from_word(c3, parse_word("1232010", c3))
    assert core_of(w) == SymmetricCore((6, 3, 2, 1, 1, 1))


def test_empty_word_core(c3):
    assert core_of(element_from_word(c3, ())) == EMPTY


def test_non_grassmannian_word(c3):
    with pytest.raises(DomainError, match="right descent at node 1"):
        core_of(generator(c3, 1))


def test_cores_need_type_c(b3):
    with pytest.raises(UnsupportedFormulaError):
        core_of(element_from_word(b3, (0,)))


@pytest.mark.parametrize("family", ["c2", "c3"])
def test_bijection_on_grassmannian_elements(request, family):
    datum = request.getfixturevalue(family)
    seen = {}
    for w in elements_up_to(datum, 10, grassmannian_only=True):
        core = core_of(w)
        assert core.violation(datum.rank) is None
        assert core not in seen
        seen[core] = w
        assert grassmannian_of(datum, core) == w
        assert apply_word_to_core(datum.rank, peel_word(datum.rank, core)) == core


@pytest.mark.parametrize("k", [2, 3, 4])
def test_pseudo_translation_cores(request, k):
    datum = request.getfixturevalue(f"c{k}")
    for j in datum.finite_nodes:
        core = core_of(pseudo_translation(datum, datum.coweight(j)))
        if j == k:
            assert core.parts == (k,) * k
        else:
            assert core.parts == (2 * k,) * j + (j,) * (2 * k - j)


def test_c2_pseudo_translation_cores(c2):
    assert core_of(pseudo_translation(c2, c2.coweight(1))).parts == (4, 1, 1, 1)
    assert core_of(pseudo_translation(c2, c2.coweight(2))).parts == (2, 2)


def test_interval_ends_c3(c3):
    assert interval_ends(c3, 2) == (SymmetricCore((2, 2)), SymmetricCore((6, 6, 2, 2, 2, 2)))
    assert interval_ends(c3, 3) == (EMPTY, SymmetricCore((3, 3, 3)))


def test_interval_j3_c3(c3):
    S, R = interval_ends(c3, 3)
    found = cores_in_interval(c3, S, R)
    assert [c.parts for c in found] == [
        (), (1,), (2, 1), (2, 2), (3, 1, 1), (3, 2, 1), (3, 3, 2), (3, 3, 3),
    ]
    assert not interval_mismatch(c3, S, R)
    assert set(found) == set(containment_interval(3, S, R))


def test_interval_j2_c3_has_twelve_cores(c3):
    S, R = interval_ends(c3, 2)
    assert len(cores_in_interval(c3, S, R)) == 12


def test_marked_cells():
    R = SymmetricCore((3, 3, 3))
    lam = SymmetricCore((3, 2, 1))
    assert marked_cells(lam, R) == [(2, 3), (3, 3)]
    with pytest.raises(DomainError):
        marked_cells(R, lam)


def test_colored_latex(c3):
    R = SymmetricCore((3, 3, 3))
    tau = automorphism_of_coweight(c3, 3)
    latex = render_colored_latex(SymmetricCore((3, 2, 1)), R, tau, 3)
    assert latex == "\\young{\\omit\\hskip\\squaresize&\\omit\\hskip\\squaresize&\\bf\\color{red}3\\cr\\omit\\hskip\\squaresize&0&\\bf\\color{red}2\\cr0&1&2\\cr}"


def test_full_latex():
    assert render_full_latex(SymmetricCore((6, 1, 1, 1, 1, 1)), 3) == (
        "\\young{1\\cr2\\cr3\\cr2\\cr1\\cr0&1&2&3&2&1\\cr}"
    )


def test_colored_text(c3):
    tau = automorphism_of_coweight(c3, 3)
    text = render_colored(SymmetricCore((3, 2, 1)), SymmetricCore((3, 3, 3)), tau, 3)
    assert text == "    [3]\n  0 [2]\n0 1  2"
    assert render_shifted(EMPTY, 3) == ""


@pytest.mark.parametrize("k", [2, 3, 4])
def test_bruhat_interval_agrees_with_containment(request, k):
    datum = request.getfixturevalue(f"c{k}")
    for j in datum.finite_nodes:
        S, R = interval_ends(datum, j)
        assert not interval_mismatch(datum, S, R)
