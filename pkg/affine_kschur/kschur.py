"""
k-Schur elements of the affine nilCoxeter algebra for fundamental coweights

- orbit:         sum over eta in W_fin gamma of u(z_eta)            (the definition)
- algebraic:     sum over v in W_0^j of u(tau(v) z v^-1)
- combinatorial: sum over S <= lambda <= R of u(w_lambda tau^-1(w_{R/lambda}))   (type C only)
- Every report keeps per-term detail so the formulas can be compared term by term
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .cartan import CartanDatum, RationalVector
from .cores import (
    EMPTY,
    SymmetricCore,
    apply_word_to_core,
    core_of,
    cores_in_interval,
    grassmannian_of,
    peel_word,
)
from .errors import DomainError, UnsupportedFormulaError, VerificationFailure
from .nilcoxeter import NilCoxeterElement, nc_basis, nc_equal, nc_multiply
from .weyl import (
    AffineWeylElement,
    DynkinAutomorphism,
    WeylWord,
    coerce_coweight,
    check_coweight_index,
    apply_automorphism,
    apply_automorphism_element,
    automorphism_of_coweight,
    canonical_reduced_word,
    coset_orbit,
    element_from_word,
    inverse,
    is_dominant,
    is_grassmannian,
    length,
    longest_coset_rep,
    multiply,
    pseudo_translation,
)

logger = logging.getLogger(__name__)

FORMULAS = ("orbit", "algebraic", "combinatorial")


@dataclass(frozen=True)
class ExpansionTerm:
    element: AffineWeylElement
    word: WeylWord
    grassmannian_factor: AffineWeylElement
    factored: Optional[Tuple[WeylWord, WeylWord]] = None
    core: Optional[SymmetricCore] = None

    @property
    def sort_key(self):
        return (length(self.grassmannian_factor), self.word.letters)


@dataclass
class ExpansionReport:
    datum: CartanDatum
    j: Optional[int]
    formula: str
    gamma: RationalVector
    z: AffineWeylElement
    tau: Optional[DynkinAutomorphism]
    terms: List[ExpansionTerm]
    R: Optional[SymmetricCore] = None
    S: Optional[SymmetricCore] = None
    value: NilCoxeterElement = field(init=False)

    def __post_init__(self):
        self.terms = sorted(self.terms, key=lambda t: t.sort_key)
        total = NilCoxeterElement(self.datum)
        for term in self.terms:
            total = total + nc_basis(term.element)
        self.value = total

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for _, c in self.value.items()) and len(self.value) == len(self.terms)

    def is_homogeneous(self) -> bool:
        return len({length(t.element) for t in self.terms}) <= 1

    def problems(self) -> List[str]:
        """Checks that hold by theory; empty when the report is sound."""
        found = []
        if not self.is_multiplicity_free():
            found.append("coefficients are not all 1")
        for term in self.terms:
            if not is_grassmannian(term.grassmannian_factor):
                found.append(f"factor of u({term.word.format(self.datum.rank)}) is not Grassmannian")
            if len(term.word) != length(term.element):
                found.append(f"u({term.word.format(self.datum.rank)}) is not a reduced word")
            if element_from_word(self.datum, term.word) != term.element:
                found.append(f"u({term.word.format(self.datum.rank)}) does not spell its element")
        if not self.is_homogeneous():
            logger.warning("%s expansion for j=%s is not homogeneous in length", self.datum.name, self.j)
        return found

    def to_dict(self) -> Dict:
        terms = []
        for term in self.terms:
            row = {"word": list(term.word.letters), "coeff": self.value.coefficient(term.element)}
            if term.core is not None:
                row["core"] = list(term.core.parts)
            if term.factored is not None:
                row["factored"] = [list(term.factored[0].letters), list(term.factored[1].letters)]
            terms.append(row)
        return {
            "family": self.datum.family,
            "rank": self.datum.rank,
            "j": self.j,
            "formula": self.formula,
            "terms": terms,
        }


# -------------------------
# Helpers
# -------------------------

def _core_or_none(datum: CartanDatum, factor: AffineWeylElement) -> Optional[SymmetricCore]:
    if datum.family != "C":
        return None
    return core_of(factor)


def _fundamental_index(datum: CartanDatum, gamma: RationalVector) -> Optional[int]:
    for i in datum.finite_nodes:
        if datum.coweight(i) == gamma:
            return i
    return None


# -------------------------
# Formulas
# -------------------------

def kschur_orbit(datum: CartanDatum, gamma) -> ExpansionReport:
    """
    Sum of u(z_eta) over the W_fin-orbit of a dominant coweight.

    Args:
        datum (CartanDatum): any supported type
        gamma: dominant coweight in epsilon coordinates

    Returns:
        ExpansionReport: formula "orbit"
    """
    gamma = coerce_coweight(datum, gamma)
    if not is_dominant(datum, gamma):
        raise DomainError(f"{tuple(str(c) for c in gamma)} is not dominant")
    j = _fundamental_index(datum, gamma)
    z = pseudo_translation(datum, gamma)
    terms = []
    for eta, v in coset_orbit(datum, gamma):
        z_eta = pseudo_translation(datum, eta)
        factor = multiply(z_eta, v)
        terms.append(ExpansionTerm(
            element=z_eta,
            word=canonical_reduced_word(z_eta),
            grassmannian_factor=factor,
            core=_core_or_none(datum, factor),
        ))
    tau = automorphism_of_coweight(datum, j) if j is not None else None
    logger.info("orbit formula for %s gamma=%s: %d terms", datum.name, gamma, len(terms))
    return ExpansionReport(datum, j, "orbit", gamma, z, tau, terms)


def kschur_algebraic(datum: CartanDatum, j: int) -> ExpansionReport:
    check_coweight_index(datum, j)
    gamma = datum.coweight(j)
    z = pseudo_translation(datum, gamma)
    tau = automorphism_of_coweight(datum, j)
    terms = []
    for _, v in coset_orbit(datum, gamma):
        factor = multiply(apply_automorphism_element(tau, v), z)
        element = multiply(factor, inverse(v))
        terms.append(ExpansionTerm(
            element=element,
            word=canonical_reduced_word(element),
            grassmannian_factor=factor,
            core=_core_or_none(datum, factor),
        ))
    logger.info("algebraic formula for %s j=%d: %d terms", datum.name, j, len(terms))
    return ExpansionReport(datum, j, "algebraic", gamma, z, tau, terms)


def interval_ends(datum: CartanDatum, j: int) -> Tuple[SymmetricCore, SymmetricCore]:
    """(S, R) with S = tau(w_0^j) z.empty and R = z.empty."""
    if datum.family != "C":
        raise UnsupportedFormulaError(f"the core interval exists only in type C, not {datum.name}")
    check_coweight_index(datum, j)
    z = pseudo_translation(datum, datum.coweight(j))
    tau = automorphism_of_coweight(datum, j)
    top = apply_automorphism_element(tau, longest_coset_rep(datum, j))
    return core_of(multiply(top, z)), core_of(z)


def kschur_combinatorial(datum: CartanDatum, j: int) -> ExpansionReport:
    if datum.family != "C":
        raise UnsupportedFormulaError(f"combinatorial formula is only implemented for type C, not {datum.name}")
    check_coweight_index(datum, j)
    gamma = datum.coweight(j)
    z = pseudo_translation(datum, gamma)
    tau = automorphism_of_coweight(datum, j)
    tau_inv = tau.inverse()
    S, R = interval_ends(datum, j)
    k = datum.rank
    terms = []
    for lam in cores_in_interval(datum, S, R):
        w_lam = grassmannian_of(datum, lam)
        w_rest = multiply(z, inverse(w_lam))
        marked = apply_automorphism(tau_inv, canonical_reduced_word(w_rest))
        marked_element = element_from_word(datum, marked)
        head = WeylWord(peel_word(k, lam))
        terms.append(ExpansionTerm(
            element=multiply(w_lam, marked_element),
            word=head + marked,
            grassmannian_factor=w_lam,
            factored=(head, marked),
            core=lam,
        ))
    logger.info("combinatorial formula for %s j=%d: %d cores in [%s, %s]", datum.name, j, len(terms), S, R)
    return ExpansionReport(datum, j, "combinatorial", gamma, z, tau, terms, R=R, S=S)


def available_formulas(datum: CartanDatum) -> Tuple[str, ...]:
    if datum.family == "C":
        return FORMULAS
    return FORMULAS[:2]


def expand(datum: CartanDatum, j: int, formula: str = "orbit") -> ExpansionReport:
    """
    Dispatch on formula name; "all" cross-checks every available formula.
    """
    if formula == "orbit":
        check_coweight_index(datum, j)
        return kschur_orbit(datum, datum.coweight(j))
    if formula == "algebraic":
        return kschur_algebraic(datum, j)
    if formula == "combinatorial":
        return kschur_combinatorial(datum, j)
    if formula == "all":
        reports = [expand(datum, j, name) for name in available_formulas(datum)]
        base = reports[0]
        for other in reports[1:]:
            if not nc_equal(base.value, other.value):
                raise VerificationFailure("formula-equality", {
                    "type": datum.name, "j": j, base.formula: repr(base.value), other.formula: repr(other.value),
                })
        return base
    raise UnsupportedFormulaError(f"unknown formula {formula!r}")


@lru_cache(maxsize=None)
def kschur_element(datum: CartanDatum, j: int) -> NilCoxeterElement:
    return expand(datum, j, "orbit").value


def verify_commutation(datum: CartanDatum, j: int, w: AffineWeylElement) -> bool:
    """s_z u(w) == u(tau(w)) s_z."""
    s_z = kschur_element(datum, j)
    tau = automorphism_of_coweight(datum, j)
    lhs = nc_multiply(s_z, nc_basis(w))
    rhs = nc_multiply(nc_basis(apply_automorphism_element(tau, w)), s_z)
    return nc_equal(lhs, rhs)


# -------------------------
# Type C closed forms
# -------------------------

def _require_c(datum: CartanDatum):
    if datum.family != "C":
        raise UnsupportedFormulaError(f"closed forms are stated for type C, not {datum.name}")


def w_word(i: int) -> WeylWord:
    """w_i = s_{i-1} ... s_1 s_0."""
    return WeylWord(tuple(range(i - 1, -1, -1)))


def w_element(datum: CartanDatum, i: int) -> AffineWeylElement:
    if not 1 <= i <= datum.rank + 1:
        raise DomainError(f"w_i needs 1 <= i <= {datum.rank + 1}, got {i}")
    return element_from_word(datum, w_word(i))


def expected_pseudotranslation_core(k: int, j: int) -> SymmetricCore:
    if not 1 <= j <= k:
        raise DomainError(f"j must be in 1..{k}, got {j}")
    if j == k:
        return SymmetricCore((k,) * k)
    return SymmetricCore((2 * k,) * j + (j,) * (2 * k - j))


def pseudotranslation_word_formula(datum: CartanDatum, j: int) -> AffineWeylElement:
    _require_c(datum)
    k = datum.rank
    check_coweight_index(datum, j)
    if j == k:
        result = element_from_word(datum, ())
        for i in range(k, 0, -1):
            result = multiply(result, inverse(w_element(datum, i)))
        return result
    block = multiply(multiply(w_element(datum, j), inverse(w_element(datum, k))), w_element(datum, k + 1))
    result = element_from_word(datum, ())
    for _ in range(j):
        result = multiply(result, block)
    return result


def rectangle_core(k: int, i: int) -> SymmetricCore:
    """w_i^-1 ... w_1^-1 applied to the empty core; equals (i^i)."""
    word = []
    for m in range(i, 0, -1):
        word.extend(reversed(w_word(m).letters))
    return apply_word_to_core(k, word, EMPTY)
