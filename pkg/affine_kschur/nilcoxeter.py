"""
Affine nilCoxeter algebra

- Basis u(w) indexed by affine Weyl elements (affine-map keys, so braid-equivalent words collapse)
- u(x) u_i = u(x s_i) when the length goes up, 0 otherwise
- Integer coefficients, zero terms pruned on construction
"""

import logging
from typing import Dict, Iterable, List, Mapping, Tuple

from .cartan import CartanDatum
from .errors import DomainError
from .weyl import (
    AffineWeylElement,
    WeylWord,
    canonical_reduced_word,
    element_from_word,
    generator,
    identity,
    is_right_descent,
    multiply,
)

logger = logging.getLogger(__name__)


class NilCoxeterElement:
    """Finite integer combination of basis elements u(w)."""

    __slots__ = ("datum", "_terms")

    def __init__(self, datum: CartanDatum, terms: Mapping[AffineWeylElement, int] = None):
        self.datum = datum
        cleaned = {}
        for w, c in (terms or {}).items():
            if w.datum is not datum:
                raise DomainError(f"term from {w.datum.name} in a {datum.name} sum")
            if c:
                cleaned[w] = int(c)
        self._terms = cleaned

    @property
    def terms(self) -> Dict[AffineWeylElement, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __contains__(self, w):
        return w in self._terms

    def coefficient(self, w: AffineWeylElement) -> int:
        return self._terms.get(w, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        return nc_add(self, other)

    def __sub__(self, other):
        return nc_add(self, nc_scale(-1, other))

    def __neg__(self):
        return nc_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, NilCoxeterElement):
            return nc_multiply(self, other)
        return nc_scale(other, self)

    def __rmul__(self, n):
        return nc_scale(n, self)

    def __eq__(self, other):
        if not isinstance(other, NilCoxeterElement):
            return NotImplemented
        return nc_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return render_sum(self)


def _same_datum(a: NilCoxeterElement, b: NilCoxeterElement):
    if a.datum is not b.datum:
        raise DomainError(f"datum mismatch: {a.datum.name} vs {b.datum.name}")


def nc_zero(datum: CartanDatum) -> NilCoxeterElement:
    return NilCoxeterElement(datum)


def nc_basis(element: AffineWeylElement) -> NilCoxeterElement:
    return NilCoxeterElement(element.datum, {element: 1})


def nc_unit(datum: CartanDatum) -> NilCoxeterElement:
    return nc_basis(identity(datum))


def nc_from_words(datum: CartanDatum, words: Iterable[Iterable[int]]) -> NilCoxeterElement:
    """Sum of u(word); words are read as group elements, not checked for reducedness."""
    total = {}
    for word in words:
        w = element_from_word(datum, word)
        total[w] = total.get(w, 0) + 1
    return NilCoxeterElement(datum, total)


def nc_add(a: NilCoxeterElement, b: NilCoxeterElement) -> NilCoxeterElement:
    _same_datum(a, b)
    total = dict(a.items())
    for w, c in b.items():
        total[w] = total.get(w, 0) + c
    return NilCoxeterElement(a.datum, total)


def nc_scale(n: int, a: NilCoxeterElement) -> NilCoxeterElement:
    return NilCoxeterElement(a.datum, {w: n * c for w, c in a.items()})


def nc_equal(a: NilCoxeterElement, b: NilCoxeterElement) -> bool:
    _same_datum(a, b)
    return a._terms == b._terms


def times_generator(x: AffineWeylElement, i: int):
    """u(x) u_i as an element, or None for zero."""
    if is_right_descent(x, i):
        return None
    return multiply(x, generator(x.datum, i))


def basis_product(v: AffineWeylElement, w: AffineWeylElement):
    """u(v) u(w) by folding a reduced word of w; None for zero."""
    current = v
    for i in canonical_reduced_word(w):
        current = times_generator(current, i)
        if current is None:
            return None
    return current


def nc_multiply(a: NilCoxeterElement, b: NilCoxeterElement) -> NilCoxeterElement:
    _same_datum(a, b)
    total = {}
    for w, cw in b.items():
        for v, cv in a.items():
            x = basis_product(v, w)
            if x is not None:
                total[x] = total.get(x, 0) + cv * cw
    return NilCoxeterElement(a.datum, total)


# -------------------------
# Rendering
# -------------------------

def sorted_terms(a: NilCoxeterElement) -> List[Tuple[Tuple[int, ...], int]]:
    rows = [(canonical_reduced_word(w).letters, c) for w, c in a.items()]
    return sorted(rows)


def _format_coeff(c: int, body: str) -> str:
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def render_sum(a: NilCoxeterElement) -> str:
    if a.is_zero():
        return "0"
    rank = a.datum.rank
    parts = []
    for letters, c in sorted_terms(a):
        parts.append(_format_coeff(c, f"u({WeylWord(letters).format(rank)})"))
    return " + ".join(parts)


def to_json_terms(a: NilCoxeterElement) -> List[Dict]:
    return [{"word": list(letters), "coeff": c} for letters, c in sorted_terms(a)]
