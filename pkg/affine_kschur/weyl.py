"""
Affine Weyl group elements as exact affine maps

- An element is (linear, trans): x -> linear . x + trans (the diamond action)
- The star action uses the linear part only
- Alcove of w is w^-1 <> A_0; descents are read off its centroid
- Words are derived views; equality is equality of the affine map
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import floor
from typing import Iterable, List, Optional, Sequence, Tuple

from .cartan import (
    CartanDatum,
    RationalVector,
    add,
    fundamental_alcove_centroid,
    scale,
    sub,
    vector,
    zero_vector,
)
from .errors import DomainError, InternalConsistencyError

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]

MAX_WALK_STEPS = 10_000


# -------------------------
# Words
# -------------------------

@dataclass(frozen=True)
class WeylWord:
    letters: Tuple[int, ...]

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.letters + other.letters)

    def format(self, rank: int) -> str:
        """Digits run together for rank <= 9, space-separated otherwise."""
        if rank <= 9:
            return "".join(str(i) for i in self.letters)
        return " ".join(str(i) for i in self.letters)


def parse_word(text: str, datum: CartanDatum) -> WeylWord:
    """
    Accepts compact digit strings (rank <= 9), comma- or space-separated integers.
    """
    text = (text or "").strip()
    if not text:
        return WeylWord(())
    if "," in text or " " in text:
        pieces = [p for p in text.replace(",", " ").split() if p]
    elif datum.rank <= 9:
        pieces = list(text)
    else:
        pieces = [text]
    try:
        letters = tuple(int(p) for p in pieces)
    except ValueError:
        raise DomainError(f"cannot parse word {text!r}")
    for i in letters:
        datum.check_node(i)
    return WeylWord(letters)


# -------------------------
# Elements
# -------------------------

def _matvec(m: Matrix, v: RationalVector) -> RationalVector:
    return tuple(sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in m)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def _identity_matrix(dim: int) -> Matrix:
    return tuple(tuple(1 if r == c else 0 for c in range(dim)) for r in range(dim))


@dataclass(frozen=True)
class AffineWeylElement:
    """
    Element of W_af acting by x -> linear . x + trans.
    """
    datum: CartanDatum
    linear: Matrix
    trans: RationalVector

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        return multiply(self, other)

    @cached_property
    def centroid(self) -> RationalVector:
        # w^-1 <> G = L^T (G - t), L orthogonal
        g = fundamental_alcove_centroid(self.datum)
        return _matvec(_transpose(self.linear), sub(g, self.trans))

    def __repr__(self):
        return f"AffineWeylElement({self.datum.name}, {canonical_reduced_word(self).format(self.datum.rank) or 'e'})"


def identity(datum: CartanDatum) -> AffineWeylElement:
    return AffineWeylElement(datum, _identity_matrix(datum.dim), zero_vector(datum.dim))


def affine_root(datum: CartanDatum, i: int) -> RationalVector:
    """alpha_i, with alpha_0 = -theta."""
    if i == 0:
        return scale(-1, datum.highest_root)
    return datum.alpha(i)


def affine_coroot(datum: CartanDatum, i: int) -> RationalVector:
    """alpha_i check, with alpha_0 check = -theta check."""
    if i == 0:
        return scale(-1, datum.highest_coroot)
    return datum.alpha_check(i)


@lru_cache(maxsize=None)
def generator(datum: CartanDatum, i: int) -> AffineWeylElement:
    """The simple reflection s_i; s_0 is the affine reflection in H_{theta,1}."""
    datum.check_node(i)
    alpha = affine_root(datum, i)
    alpha_check = affine_coroot(datum, i)
    columns = []
    for c in range(datum.dim):
        e = vector([1 if r == c else 0 for r in range(datum.dim)])
        image = sub(e, scale(datum.pair(e, alpha), alpha_check))
        if any(x.denominator != 1 for x in image):
            raise InternalConsistencyError(f"non-integral reflection matrix for s_{i} in {datum.name}")
        columns.append(tuple(int(x) for x in image))
    linear = _transpose(tuple(columns))
    trans = scale(-1, alpha_check) if i == 0 else zero_vector(datum.dim)
    return AffineWeylElement(datum, linear, trans)


def multiply(a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
    """(a.b) <> v = a <> (b <> v)."""
    if a.datum is not b.datum:
        raise DomainError(f"datum mismatch: {a.datum.name} vs {b.datum.name}")
    linear = _matmul(a.linear, b.linear)
    trans = add(_matvec(a.linear, b.trans), a.trans)
    return AffineWeylElement(a.datum, linear, trans)


def inverse(w: AffineWeylElement) -> AffineWeylElement:
    lt = _transpose(w.linear)
    return AffineWeylElement(w.datum, lt, scale(-1, _matvec(lt, w.trans)))


def element_from_word(datum: CartanDatum, word: Iterable[int]) -> AffineWeylElement:
    result = identity(datum)
    for i in word:
        result = multiply(result, generator(datum, i))
    return result


# -------------------------
# Actions
# -------------------------

def apply_star(datum: CartanDatum, element_or_generator, v: RationalVector) -> RationalVector:
    """
    Level-zero action: translations act trivially.

    Args:
        element_or_generator: AffineWeylElement or node index i
        v (RationalVector): point of the ambient space

    Returns:
        RationalVector: linear image of v
    """
    datum.check_vector(v)
    if isinstance(element_or_generator, int):
        i = element_or_generator
        datum.check_node(i)
        return sub(v, scale(datum.pair(v, affine_root(datum, i)), affine_coroot(datum, i)))
    return _matvec(element_or_generator.linear, v)


def apply_diamond(element: AffineWeylElement, v: RationalVector) -> RationalVector:
    element.datum.check_vector(v)
    return add(_matvec(element.linear, v), element.trans)


def alcove_centroid(element: AffineWeylElement) -> RationalVector:
    return element.centroid


# -------------------------
# Walls, descents, length
# -------------------------

def _on_negative_side(datum: CartanDatum, p: RationalVector, j: int) -> bool:
    """True when the wall H_j of A_0 separates p from A_0."""
    if j == 0:
        return datum.pair(p, datum.highest_root) > 1
    return datum.pair(p, datum.alpha(j)) < 0


def _first_separating_wall(datum: CartanDatum, p: RationalVector) -> Optional[int]:
    for j in datum.nodes:
        if _on_negative_side(datum, p, j):
            return j
    return None


def _walk_home(datum: CartanDatum, point: RationalVector) -> List[int]:
    """
    Reflect an alcove-interior point back into A_0, smallest wall first.

    Returns the letters in crossing order; reversed they form a reduced
    word of the element whose alcove contains the point.
    """
    letters = []
    p = point
    while True:
        j = _first_separating_wall(datum, p)
        if j is None:
            return letters
        letters.append(j)
        p = apply_diamond(generator(datum, j), p)
        if len(letters) > MAX_WALK_STEPS:
            raise InternalConsistencyError(f"alcove walk from {point} did not terminate")


def is_right_descent(element: AffineWeylElement, j: int) -> bool:
    element.datum.check_node(j)
    return _on_negative_side(element.datum, element.centroid, j)


def right_descents(element: AffineWeylElement) -> Tuple[int, ...]:
    return tuple(j for j in element.datum.nodes if is_right_descent(element, j))


@lru_cache(maxsize=None)
def canonical_reduced_word(element: AffineWeylElement) -> WeylWord:
    letters = _walk_home(element.datum, element.centroid)
    return WeylWord(tuple(reversed(letters)))


def length(element: AffineWeylElement) -> int:
    return len(canonical_reduced_word(element))


def _hyperplanes_between(a: Fraction, b: Fraction) -> int:
    """Integers strictly between two non-integral values."""
    return abs(floor(b) - floor(a))


def separating_hyperplanes(datum: CartanDatum, p: RationalVector, q: RationalVector) -> int:
    return sum(
        _hyperplanes_between(datum.pair(p, alpha), datum.pair(q, alpha))
        for alpha in datum.positive_roots
    )


def separation_length(element: AffineWeylElement) -> int:
    """Hyperplanes between A_0 and A_w; independent of the walk."""
    datum = element.datum
    return separating_hyperplanes(datum, fundamental_alcove_centroid(datum), element.centroid)


def is_grassmannian(element: AffineWeylElement) -> bool:
    return not any(is_right_descent(element, j) for j in element.datum.finite_nodes)


def alcove_walk(datum: CartanDatum, word: Sequence[int]) -> List[Tuple[AffineWeylElement, RationalVector]]:
    """
    Suffix alcoves A_e, A_{s_ir}, ..., A_w of a word i_1 ... i_r.
    """
    current = identity(datum)
    steps = [(current, current.centroid)]
    for i in reversed(list(word)):
        current = multiply(generator(datum, i), current)
        steps.append((current, current.centroid))
    return steps


def is_reduced_word(datum: CartanDatum, word: Sequence[int]) -> bool:
    return len(word) == length(element_from_word(datum, word))


# -------------------------
# Bruhat order
# -------------------------

def bruhat_leq(v: AffineWeylElement, w: AffineWeylElement) -> bool:
    if v.datum is not w.datum:
        raise DomainError(f"datum mismatch: {v.datum.name} vs {w.datum.name}")
    return _bruhat_leq(v, w)


@lru_cache(maxsize=None)
def _bruhat_leq(v: AffineWeylElement, w: AffineWeylElement) -> bool:
    if v == w:
        return True
    if length(v) >= length(w):
        return False
    # w s_j < w: v <= w iff min(v, v s_j) <= w s_j
    j = canonical_reduced_word(w).letters[-1]
    s = generator(w.datum, j)
    ws = multiply(w, s)
    if is_right_descent(v, j):
        return _bruhat_leq(multiply(v, s), ws)
    return _bruhat_leq(v, ws)


# -------------------------
# Coweights and translations
# -------------------------

def is_coweight(datum: CartanDatum, v: RationalVector) -> bool:
    if len(v) != datum.dim:
        return False
    if datum.family == "A" and sum(v) != 0:
        return False
    return all(datum.pair(v, datum.alpha(i)).denominator == 1 for i in datum.finite_nodes)


def in_coroot_lattice(datum: CartanDatum, v: RationalVector) -> bool:
    if not is_coweight(datum, v):
        return False
    return all(datum.pair(v, datum.weight(i)).denominator == 1 for i in datum.finite_nodes)


def is_dominant(datum: CartanDatum, v: RationalVector) -> bool:
    return all(datum.pair(v, datum.alpha(i)) >= 0 for i in datum.finite_nodes)


def coerce_coweight(datum: CartanDatum, lam) -> RationalVector:
    lam = vector(lam)
    datum.check_vector(lam)
    if not is_coweight(datum, lam):
        raise DomainError(f"{tuple(str(c) for c in lam)} is not a coweight of {datum.name}")
    return lam


@lru_cache(maxsize=None)
def _pseudo_translation(datum: CartanDatum, lam: RationalVector) -> AffineWeylElement:
    target = add(fundamental_alcove_centroid(datum), lam)
    letters = _walk_home(datum, target)
    z = element_from_word(datum, reversed(letters))
    if z.centroid != target:
        raise InternalConsistencyError(f"pseudo-translation walk for {lam} landed at {z.centroid}")
    logger.debug("z_%s in %s has length %d", lam, datum.name, len(letters))
    return z


def pseudo_translation(datum: CartanDatum, lam) -> AffineWeylElement:
    """
    Unique w with alcove A_w = A_0 + lam.

    Args:
        lam: coweight in epsilon coordinates

    Returns:
        AffineWeylElement: the pseudo-translation z_lam
    """
    return _pseudo_translation(datum, coerce_coweight(datum, lam))


# -------------------------
# Finite cosets
# -------------------------

def coset_orbit(datum: CartanDatum, gamma) -> List[Tuple[RationalVector, AffineWeylElement]]:
    """
    Breadth-first W_fin-orbit of gamma, each point paired with the minimal v, v * gamma = eta.
    """
    gamma = coerce_coweight(datum, gamma)
    reps = {gamma: identity(datum)}
    order = [gamma]
    queue = deque([gamma])
    while queue:
        eta = queue.popleft()
        for i in datum.finite_nodes:
            nxt = apply_star(datum, i, eta)
            if nxt not in reps:
                reps[nxt] = multiply(generator(datum, i), reps[eta])
                order.append(nxt)
                queue.append(nxt)
    logger.debug("orbit of %s in %s has %d points", gamma, datum.name, len(order))
    return [(eta, reps[eta]) for eta in order]


def check_coweight_index(datum: CartanDatum, j: int):
    if not isinstance(j, int) or not 1 <= j <= datum.rank:
        raise DomainError(f"coweight index must be in 1..{datum.rank}, got {j!r}")


def minimal_coset_reps(datum: CartanDatum, j: int) -> List[AffineWeylElement]:
    check_coweight_index(datum, j)
    return [v for _, v in coset_orbit(datum, datum.coweight(j))]


def longest_coset_rep(datum: CartanDatum, j: int) -> AffineWeylElement:
    reps = minimal_coset_reps(datum, j)
    top = max(length(v) for v in reps)
    longest = [v for v in reps if length(v) == top]
    if len(longest) != 1:
        raise InternalConsistencyError(f"{len(longest)} longest coset representatives for j={j}")
    return longest[0]


# -------------------------
# Diagram automorphisms
# -------------------------

@dataclass(frozen=True)
class DynkinAutomorphism:
    node_map: Tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.node_map[i]

    @property
    def is_identity(self) -> bool:
        return all(i == t for i, t in enumerate(self.node_map))

    def inverse(self) -> "DynkinAutomorphism":
        inv = [0] * len(self.node_map)
        for i, t in enumerate(self.node_map):
            inv[t] = i
        return DynkinAutomorphism(tuple(inv))

    def preserves(self, datum: CartanDatum) -> bool:
        a = datum.cartan_matrix
        return all(
            a[self(i)][self(j)] == a[i][j] for i in datum.nodes for j in datum.nodes
        )

    def describe(self) -> str:
        moved = [f"{i}->{t}" for i, t in enumerate(self.node_map) if i != t]
        return ", ".join(moved) or "identity"


@lru_cache(maxsize=None)
def automorphism_of_coweight(datum: CartanDatum, j: int) -> DynkinAutomorphism:
    """
    tau for the extended translation by Lambda_j check.

    Reads tau(i) off z_{s_i * gamma} . s_i . z^-1, which is a simple reflection.
    """
    check_coweight_index(datum, j)
    gamma = datum.coweight(j)
    z_inv = inverse(pseudo_translation(datum, gamma))
    by_element = {generator(datum, t): t for t in datum.nodes}
    node_map = []
    for i in datum.nodes:
        eta = apply_star(datum, i, gamma)
        x = multiply(multiply(pseudo_translation(datum, eta), generator(datum, i)), z_inv)
        if x not in by_element:
            raise InternalConsistencyError(
                f"z_(s_{i} * gamma) s_{i} z^-1 is not a simple reflection in {datum.name}, j={j}"
            )
        node_map.append(by_element[x])
    tau = DynkinAutomorphism(tuple(node_map))
    if not tau.preserves(datum):
        raise InternalConsistencyError(f"derived map {tau.describe()} does not preserve the Cartan matrix")
    if tau.is_identity != in_coroot_lattice(datum, gamma):
        raise InternalConsistencyError(f"tau {tau.describe()} disagrees with coroot-lattice membership")
    logger.debug("tau for %s, j=%d: %s", datum.name, j, tau.describe())
    return tau


def apply_automorphism(tau: DynkinAutomorphism, word: Iterable[int]) -> WeylWord:
    return WeylWord(tuple(tau(i) for i in word))


def apply_automorphism_element(tau: DynkinAutomorphism, element: AffineWeylElement) -> AffineWeylElement:
    word = apply_automorphism(tau, canonical_reduced_word(element))
    return element_from_word(element.datum, word)
