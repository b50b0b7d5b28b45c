"""
Property suites behind `kschur verify`

- Each suite returns a SuiteResult; nothing here raises on a failed property
- Random inputs come from random.Random(seed) and are checked shortest first,
  so the reported counterexample is the smallest one sampled
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Tuple

from .cartan import CartanDatum, add, fundamental_alcove_centroid, positive_roots
from .cores import (
    apply_word_to_core,
    core_of,
    grassmannian_of,
    cores_in_interval,
)
from .kschur import (
    available_formulas,
    expand,
    expected_pseudotranslation_core,
    interval_ends,
    pseudotranslation_word_formula,
    rectangle_core,
    verify_commutation,
    w_element,
)
from .nilcoxeter import basis_product, nc_equal
from .weyl import (
    apply_automorphism_element,
    apply_diamond,
    apply_star,
    automorphism_of_coweight,
    bruhat_leq,
    canonical_reduced_word,
    coset_orbit,
    element_from_word,
    generator,
    identity,
    inverse,
    is_grassmannian,
    length,
    multiply,
    pseudo_translation,
    separation_length,
)

logger = logging.getLogger(__name__)

LENGTH_ORACLE_MAX_WORD = 12
LEVEL_ACTION_SAMPLES = 200
ACTION_IDENTITY_SAMPLES = 100
BRUHAT_BRUTE_FORCE_MAX = 5
GRASSMANNIAN_BFS_MAX = 10


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    counterexample: Dict = field(default_factory=dict)

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.checks} checks)"
        return f"FAIL {self.name}: {self.counterexample}"


# -------------------------
# Helpers
# -------------------------

def random_words(rng: random.Random, datum: CartanDatum, count: int, max_len: int) -> List[Tuple[int, ...]]:
    words = [
        tuple(rng.randrange(datum.rank + 1) for _ in range(rng.randint(0, max_len)))
        for _ in range(count)
    ]
    return sorted(words, key=lambda w: (len(w), w))


def random_vector(rng: random.Random, dim: int, sum_zero: bool = False):
    v = [Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(dim)]
    if sum_zero:
        v[-1] = -sum(v[:-1])
    return tuple(v)


def _fmt(v) -> List[str]:
    return [str(c) for c in v]


def elements_up_to(datum: CartanDatum, max_len: int, grassmannian_only: bool = False) -> List:
    """Breadth-first by length through left multiplication."""
    start = identity(datum)
    seen = {start}
    layer = [start]
    out = [start]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for i in datum.nodes:
                x = multiply(generator(datum, i), w)
                if x in seen or length(x) != length(w) + 1:
                    continue
                if grassmannian_only and not is_grassmannian(x):
                    continue
                seen.add(x)
                nxt.append(x)
        out.extend(nxt)
        layer = nxt
    return out


def subword_products(datum: CartanDatum, word: Tuple[int, ...]) -> set:
    found = set()
    for mask in product((0, 1), repeat=len(word)):
        found.add(element_from_word(datum, [i for i, keep in zip(word, mask) if keep]))
    return found


# -------------------------
# Suites
# -------------------------

def suite_cartan(datum: CartanDatum, rng, max_len) -> SuiteResult:
    checks = 0
    a = datum.cartan_matrix
    for i in datum.finite_nodes:
        for j in datum.finite_nodes:
            checks += 1
            if datum.pair(datum.alpha_check(i), datum.alpha(j)) != a[i][j]:
                return SuiteResult("cartan", False, checks, {"pairing": (i, j)})
            want = 1 if i == j else 0
            if datum.pair(datum.alpha(i), datum.coweight(j)) != want or datum.pair(datum.weight(i), datum.alpha_check(j)) != want:
                return SuiteResult("cartan", False, checks, {"duality": (i, j)})
    theta = tuple(sum((datum.mark(i) * datum.alpha(i)[c] for i in datum.finite_nodes), Fraction(0)) for c in range(datum.dim))
    g = fundamental_alcove_centroid(datum)
    checks += 1
    if theta != datum.highest_root or datum.highest_root not in positive_roots(datum):
        return SuiteResult("cartan", False, checks, {"theta": _fmt(datum.highest_root)})
    if any(datum.pair(g, datum.alpha(i)) <= 0 for i in datum.finite_nodes) or datum.pair(g, datum.highest_root) >= 1:
        return SuiteResult("cartan", False, checks, {"centroid": _fmt(g)})
    return SuiteResult("cartan", True, checks)


def suite_length_oracle(datum: CartanDatum, rng, max_len, count: int = 500) -> SuiteResult:
    words = random_words(rng, datum, count, LENGTH_ORACLE_MAX_WORD)
    for word in words:
        w = element_from_word(datum, word)
        if length(w) != separation_length(w):
            return SuiteResult("length-oracle", False, len(words), {"word": word, "walk": length(w), "hyperplanes": separation_length(w)})
        if element_from_word(datum, canonical_reduced_word(w)) != w:
            return SuiteResult("length-oracle", False, len(words), {"word": word, "canonical": "does not spell the element"})
        for i in datum.nodes:
            if abs(length(multiply(w, generator(datum, i))) - length(w)) != 1:
                return SuiteResult("length-oracle", False, len(words), {"word": word, "node": i})
    return SuiteResult("length-oracle", True, len(words))


def suite_level_action(datum: CartanDatum, rng, max_len) -> SuiteResult:
    words = random_words(rng, datum, LEVEL_ACTION_SAMPLES, max_len)
    sum_zero = datum.family == "A"
    for word in words:
        w = element_from_word(datum, word)
        mu = random_vector(rng, datum.dim, sum_zero)
        nu = random_vector(rng, datum.dim, sum_zero)
        if apply_diamond(w, add(mu, nu)) != add(apply_diamond(w, mu), apply_star(datum, w, nu)):
            return SuiteResult("level-action", False, len(words), {"word": word, "mu": _fmt(mu), "nu": _fmt(nu)})
    return SuiteResult("level-action", True, len(words))


def suite_bruhat(datum: CartanDatum, rng, max_len) -> SuiteResult:
    bound = min(max_len, BRUHAT_BRUTE_FORCE_MAX)
    elements = elements_up_to(datum, bound)
    if datum.rank > 2:
        elements = sorted(rng.sample(elements, min(len(elements), 60)), key=length)
    checks = 0
    for w in elements:
        below = subword_products(datum, canonical_reduced_word(w).letters)
        for v in elements:
            checks += 1
            if bruhat_leq(v, w) != (v in below):
                return SuiteResult("bruhat", False, checks, {
                    "v": canonical_reduced_word(v).format(datum.rank), "w": canonical_reduced_word(w).format(datum.rank),
                })
    return SuiteResult("bruhat", True, checks)


def suite_nilcoxeter(datum: CartanDatum, rng, max_len, count: int = 1000) -> SuiteResult:
    left = random_words(rng, datum, count, max_len)
    right = random_words(rng, datum, count, max_len)
    for a, b in zip(left, right):
        v = element_from_word(datum, a)
        w = element_from_word(datum, b)
        folded = basis_product(v, w)
        additive = length(multiply(v, w)) == length(v) + length(w)
        if (folded is not None) != additive or (folded is not None and folded != multiply(v, w)):
            return SuiteResult("nilcoxeter-fold", False, count, {"v": a, "w": b})
    return SuiteResult("nilcoxeter-fold", True, count)


def suite_formulas(datum: CartanDatum, rng, max_len) -> SuiteResult:
    checks = 0
    for j in datum.finite_nodes:
        reports = [expand(datum, j, name) for name in available_formulas(datum)]
        for report in reports:
            checks += 1
            problems = report.problems()
            if problems:
                return SuiteResult("formulas", False, checks, {"j": j, "formula": report.formula, "problems": problems})
            if not nc_equal(reports[0].value, report.value):
                return SuiteResult("formulas", False, checks, {"j": j, "formula": report.formula, "differs from": "orbit"})
        if not reports[0].is_homogeneous():
            logger.warning("%s j=%d: terms have different lengths", datum.name, j)
    return SuiteResult("formulas", True, checks)


def suite_commute(datum: CartanDatum, rng, max_len) -> SuiteResult:
    """z_{v*gamma} v = tau(v) z for every minimal coset representative."""
    checks = 0
    for j in datum.finite_nodes:
        gamma = datum.coweight(j)
        z = pseudo_translation(datum, gamma)
        tau = automorphism_of_coweight(datum, j)
        for eta, v in coset_orbit(datum, gamma):
            checks += 1
            if multiply(pseudo_translation(datum, eta), v) != multiply(apply_automorphism_element(tau, v), z):
                return SuiteResult("commute", False, checks, {"j": j, "v": canonical_reduced_word(v).format(datum.rank)})
    return SuiteResult("commute", True, checks)


def suite_commutation(datum: CartanDatum, rng, max_len, samples: int = 100) -> SuiteResult:
    checks = 0
    for j in datum.finite_nodes:
        for word in random_words(rng, datum, samples, max_len):
            checks += 1
            if not verify_commutation(datum, j, element_from_word(datum, word)):
                return SuiteResult("commutation", False, checks, {"j": j, "w": word})
    return SuiteResult("commutation", True, checks)


def suite_cores(datum: CartanDatum, rng, max_len) -> SuiteResult:
    k = datum.rank
    bound = GRASSMANNIAN_BFS_MAX if k <= 3 else max_len
    grass = elements_up_to(datum, bound, grassmannian_only=True)
    images = {}
    for w in grass:
        core = core_of(w)
        problem = core.violation(k)
        if problem or grassmannian_of(datum, core) != w:
            return SuiteResult("cores", False, len(grass), {"w": canonical_reduced_word(w).format(datum.rank), "core": str(core), "problem": problem})
        if core in images:
            return SuiteResult("cores", False, len(grass), {"collision": str(core)})
        images[core] = w
    for word in random_words(rng, datum, 200, max_len):
        w = element_from_word(datum, word)
        if is_grassmannian(w) and apply_word_to_core(k, word) != core_of(w):
            return SuiteResult("cores", False, len(grass), {"word": word, "action": "depends on the word"})
    return SuiteResult("cores", True, len(grass))


def suite_closed_forms(datum: CartanDatum, rng, max_len) -> SuiteResult:
    k = datum.rank
    checks = 0
    for j in datum.finite_nodes:
        checks += 1
        z = pseudo_translation(datum, datum.coweight(j))
        if core_of(z) != expected_pseudotranslation_core(k, j):
            return SuiteResult("closed-forms", False, checks, {"j": j, "core": str(core_of(z))})
        if pseudotranslation_word_formula(datum, j) != z:
            return SuiteResult("closed-forms", False, checks, {"j": j, "word formula": "differs from walk"})
        if rectangle_core(k, j).parts != (j,) * j:
            return SuiteResult("closed-forms", False, checks, {"rectangle": j})
        tau = automorphism_of_coweight(datum, j)
        want = tuple(k - i for i in datum.nodes) if j == k else tuple(datum.nodes)
        if tau.node_map != want:
            return SuiteResult("closed-forms", False, checks, {"j": j, "tau": tau.node_map})
        S, R = interval_ends(datum, j)
        size = len(coset_orbit(datum, datum.coweight(j)))
        if len(cores_in_interval(datum, S, R)) != size:
            return SuiteResult("closed-forms", False, checks, {"j": j, "interval": str((S, R)), "expected": size})
    return SuiteResult("closed-forms", True, checks)


def suite_action_identities(datum: CartanDatum, rng, max_len) -> SuiteResult:
    """w_i and w_{k+1}^-1 w_k w_j^-1 acting on random points."""
    k = datum.rank
    checks = 0
    for _ in range(ACTION_IDENTITY_SAMPLES):
        a = random_vector(rng, k)
        for i in range(1, k + 1):
            checks += 1
            want = a[1:i] + (2 - a[0],) + a[i:]
            if apply_diamond(w_element(datum, i), a) != want:
                return SuiteResult("action-identities", False, checks, {"w_i": i, "a": _fmt(a)})
        for j in range(1, k + 1):
            checks += 1
            x = multiply(multiply(inverse(w_element(datum, k + 1)), w_element(datum, k)), inverse(w_element(datum, j)))
            want = (a[j - 1] + 2,) + a[:j - 1] + a[j:]
            if apply_diamond(x, a) != want:
                return SuiteResult("action-identities", False, checks, {"j": j, "a": _fmt(a)})
    return SuiteResult("action-identities", True, checks)


GENERAL_SUITES: Tuple[Callable, ...] = (
    suite_cartan,
    suite_length_oracle,
    suite_level_action,
    suite_bruhat,
    suite_nilcoxeter,
    suite_formulas,
    suite_commute,
    suite_commutation,
)

TYPE_C_SUITES: Tuple[Callable, ...] = (
    suite_cores,
    suite_closed_forms,
    suite_action_identities,
)


def run_suites(datum: CartanDatum, seed: int, max_len: int, random_words_count: int = 500,
               commutation_samples: int = 100) -> List[SuiteResult]:
    suites = GENERAL_SUITES + (TYPE_C_SUITES if datum.family == "C" else ())
    results = []
    for suite in suites:
        rng = random.Random(seed)
        if suite is suite_length_oracle:
            result = suite(datum, rng, max_len, count=random_words_count)
        elif suite is suite_commutation:
            result = suite(datum, rng, max_len, samples=commutation_samples)
        else:
            result = suite(datum, rng, max_len)
        logger.info("%s %s", datum.name, result.line())
        results.append(result)
    return results
