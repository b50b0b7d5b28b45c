import random
from fractions import Fraction

import pytest

from affine_kschur.cartan import build_cartan_datum, zero_vector
from affine_kschur.cores import SymmetricCore, peel_word
from affine_kschur.errors import DomainError, UnsupportedFormulaError
from affine_kschur.kschur import (
    ExpansionReport,
    ExpansionTerm,
    expand,
    kschur_algebraic,
    kschur_combinatorial,
    kschur_orbit,
    pseudotranslation_word_formula,
    rectangle_core,
    verify_commutation,
    w_element,
    w_word,
)
from affine_kschur.nilcoxeter import nc_equal
from affine_kschur.render import render_latex, render_text
from affine_kschur.verify import suite_action_identities, suite_closed_forms
from affine_kschur.weyl import (
    WeylWord,
    apply_diamond,
    element_from_word,
    generator,
    identity,
    inverse,
    length,
    multiply,
    parse_word,
    pseudo_translation,
)

from conftest import words_to_elements

C3_J1 = ["012321", "101232", "210123", "321012", "232101", "123210"]
C3_J2 = [
    "0102132132", "0210232123", "0321023212", "1021023123", "1032102312", "0232102321",
    "2103210231", "1023210232", "2102321023", "3210321021", "3210232102", "2321023210",
]
C3_J3 = ["321323", "032132", "103213", "010321", "210323", "021032", "102103", "010210"]
B3_J1 = ["12321", "01232", "20123", "32012", "23201", "02320"]
B3_J2 = [
    "02132132", "20213231", "12021323", "32021321", "23202321", "12320232",
    "31202132", "23120231", "12312023", "32312021", "13231202", "21323120",
]
B3_J3 = ["120323123", "312032312", "231203231", "023120323", "323120321", "302312032", "230231203", "323023120"]
D4_J4 = ["421324", "042132", "204231", "320423", "120421", "312042", "231204", "023120"]


def term_elements(report):
    return [t.element for t in report.terms]


@pytest.mark.parametrize("j,words", [(1, C3_J1), (2, C3_J2), (3, C3_J3)])
def test_combinatorial_c3_matches_printed_words(c3, j, words):
    report = kschur_combinatorial(c3, j)
    assert len(report.terms) == len(words)
    assert set(term_elements(report)) == words_to_elements(c3, words)
    assert report.is_multiplicity_free()
    assert report.problems() == []


@pytest.mark.parametrize("j,words", [(1, B3_J1), (2, B3_J2), (3, B3_J3)])
def test_algebraic_b3_matches_printed_words(b3, j, words):
    report = kschur_algebraic(b3, j)
    assert len(report.terms) == len(words)
    assert set(term_elements(report)) == words_to_elements(b3, words)


def test_algebraic_d4_j4(d4):
    report = kschur_algebraic(d4, 4)
    assert set(term_elements(report)) == words_to_elements(d4, D4_J4)


def test_algebraic_d4_j3_last_term(d4):
    report = kschur_algebraic(d4, 3)
    assert len(report.terms) == 8
    assert report.terms[-1].element == element_from_word(d4, (0, 2, 4, 1, 2, 0))
    assert report.terms[-1].element == pseudo_translation(d4, d4.coweight(3))


@pytest.mark.parametrize("family", ["c2", "c3", "c4", "b3", "d4"])
def test_orbit_equals_algebraic(request, family):
    datum = request.getfixturevalue(family)
    for j in datum.finite_nodes:
        orbit = kschur_orbit(datum, datum.coweight(j))
        assert nc_equal(orbit.value, kschur_algebraic(datum, j).value)
        assert orbit.problems() == []
        if datum.family == "C":
            assert nc_equal(orbit.value, kschur_combinatorial(datum, j).value)


def test_factored_words_c3_j2(c3):
    report = kschur_combinatorial(c3, 2)
    for term in report.terms:
        head, marked = term.factored
        assert head + marked == term.word
        assert head.letters == peel_word(3, term.core)
        assert len(term.word) == length(term.element)
    assert report.terms[0].core == SymmetricCore((2, 2))
    assert report.terms[-1].core == SymmetricCore((6, 6, 2, 2, 2, 2))
    assert len(report.terms[-1].factored[1]) == 0


C3_J2_SPLIT = [
    ("010", "2132132"), ("0210", "232123"), ("03210", "23212"), ("10210", "23123"),
    ("103210", "2312"), ("023210", "2321"), ("2103210", "231"), ("1023210", "232"),
    ("21023210", "23"), ("32103210", "21"), ("321023210", "2"), ("2321023210", ""),
]


def test_factored_pairs_c3_j2(c3):
    def as_elements(head, marked):
        return (
            element_from_word(c3, parse_word(head, c3)),
            element_from_word(c3, parse_word(marked, c3)),
        )

    report = kschur_combinatorial(c3, 2)
    computed = {as_elements(t.factored[0].format(3), t.factored[1].format(3)) for t in report.terms}
    assert computed == {as_elements(head, marked) for head, marked in C3_J2_SPLIT}


def test_combinatorial_text_golden_j1(c3):
    assert render_text(expand(c3, 1, "combinatorial")) == (
        "s^C_{z_Lambda1} = u(012321) + u(101232) + u(210123) + u(321012) + u(232101) + u(123210)\n"
    )


def test_combinatorial_text_golden_j2(c3):
    assert render_text(expand(c3, 2, "combinatorial")) == (
        "s^C_{z_Lambda2} = u(0102312312) + u(0210231231) + u(0321023121) + u(1021023123)"
        " + u(0232102321) + u(1032102312) + u(1023210232) + u(2103210231)"
        " + u(1210321023) + u(3210321021) + u(1321032102) + u(2132103210)\n"
    )


@pytest.mark.parametrize("j,expected", [
    (1, "u(12321) + u(10232) + u(21023) + u(32102) + u(23210) + u(02320)"),
    (2, "u(02312312) + u(02310231) + u(10231023) + u(30231021) + u(23023021) + u(31023102)"
        " + u(12302302) + u(23102310) + u(12310230) + u(32310210) + u(31231020) + u(23123120)"),
    (3, "u(123023123) + u(312302312) + u(231230231) + u(023123023) + u(323123021)"
        " + u(302312302) + u(230231230) + u(323023120)"),
])
def test_algebraic_text_golden_b3(b3, j, expected):
    assert render_text(expand(b3, j, "algebraic")) == f"s^B_{{z_Lambda{j}}} = {expected}\n"


def test_combinatorial_text_golden_j3(c3):
    assert render_text(expand(c3, 3, "combinatorial")) == (
        "s^C_{z_Lambda3} = u(321323) + u(032132) + u(103213) + u(010321)"
        " + u(210323) + u(021032) + u(102103) + u(010210)\n"
    )


def test_latex_has_one_diagram_per_term(c3):
    latex = render_latex(expand(c3, 3, "combinatorial"))
    assert latex.count("\\young{") == 8
    assert "\\mathfrak{s}^{C}_{z_{\\Lambda_3^\\vee}}" in latex
    assert "{\\bf u}({\\bf 321323})" in latex


def test_expand_all_and_errors(c3, b3):
    assert nc_equal(expand(c3, 2, "all").value, kschur_orbit(c3, c3.coweight(2)).value)
    assert nc_equal(expand(b3, 2, "all").value, kschur_algebraic(b3, 2).value)
    with pytest.raises(UnsupportedFormulaError):
        expand(b3, 1, "combinatorial")
    with pytest.raises(UnsupportedFormulaError):
        expand(c3, 1, "pieri")
    with pytest.raises(DomainError):
        expand(c3, 4, "orbit")
    with pytest.raises(DomainError):
        kschur_orbit(c3, (0, 2, 0))


def test_homogeneous_and_dict(c3):
    report = expand(c3, 1, "orbit")
    assert report.is_homogeneous()
    data = report.to_dict()
    assert data["family"] == "C" and data["rank"] == 3 and data["j"] == 1
    assert len(data["terms"]) == 6
    assert all(row["coeff"] == 1 for row in data["terms"])


def test_non_fundamental_dominant_coweight(c3):
    report = kschur_orbit(c3, (4, 2, 0))
    assert report.j is None
    assert len(report.terms) == 24
    assert report.is_multiplicity_free()


@pytest.mark.parametrize("family", ["c2", "c3", "c4", "b3", "d4"])
def test_commutation(request, family):
    datum = request.getfixturevalue(family)
    rng = random.Random(11)
    for j in datum.finite_nodes:
        for _ in range(100):
            word = [rng.randrange(datum.rank + 1) for _ in range(rng.randint(0, 8))]
            assert verify_commutation(datum, j, element_from_word(datum, word))


def test_w_words():
    assert w_word(1).letters == (0,)
    assert w_word(3).letters == (2, 1, 0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_closed_form_pseudotranslations(request, k):
    datum = request.getfixturevalue(f"c{k}")
    for j in datum.finite_nodes:
        assert pseudotranslation_word_formula(datum, j) == pseudo_translation(datum, datum.coweight(j))
        assert rectangle_core(k, j) == SymmetricCore((j,) * j)


def test_w_i_action(c3):
    a = (Fraction(1, 3), Fraction(-2), Fraction(5, 7))
    assert apply_diamond(w_element(c3, 1), a) == (Fraction(5, 3), -2, Fraction(5, 7))
    assert apply_diamond(w_element(c3, 3), a) == (-2, Fraction(5, 7), Fraction(5, 3))


def test_www_action(c3):
    a = (Fraction(1, 3), Fraction(-2), Fraction(5, 7))
    x = multiply(multiply(inverse(w_element(c3, 4)), w_element(c3, 3)), inverse(w_element(c3, 2)))
    assert apply_diamond(x, a) == (0, Fraction(1, 3), Fraction(5, 7))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_action_identity_suite(request, k):
    datum = request.getfixturevalue(f"c{k}")
    result = suite_action_identities(datum, random.Random(3), 8)
    assert result.passed, result.counterexample
    assert suite_closed_forms(datum, random.Random(3), 8).passed


def test_problem_messages_use_datum_rank():
    c10 = build_cartan_datum("C", 10)
    term = ExpansionTerm(element=generator(c10, 1), word=WeylWord((0, 1)), grassmannian_factor=identity(c10))
    report = ExpansionReport(c10, None, "orbit", zero_vector(10), identity(c10), None, [term])
    assert report.problems() == ["u(0 1) is not a reduced word", "u(0 1) does not spell its element"]
    assert WeylWord((0, 1)).format(3) == "01"
