"""
Root-system data for the untwisted affine types A_k, B_k, C_k, D_k

- Exact rationals in epsilon coordinates, no floats
- Pairings use the invariant form normalised so long roots have (x, x) = 2
- Node 0 has no stored root; weyl.py works with (-theta, -theta_check)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import sympy

from .errors import ConfigurationError, DomainError

logger = logging.getLogger(__name__)

RationalVector = Tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 2, "B": 3, "C": 2, "D": 4}


# -------------------------
# Vector helpers
# -------------------------

def vector(coords: Sequence) -> RationalVector:
    return tuple(Fraction(c) for c in coords)


def zero_vector(dim: int) -> RationalVector:
    return tuple(Fraction(0) for _ in range(dim))


def add(u: RationalVector, v: RationalVector) -> RationalVector:
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: RationalVector, v: RationalVector) -> RationalVector:
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: RationalVector) -> RationalVector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def dot(u: RationalVector, v: RationalVector) -> Fraction:
    _check_dims(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _check_dims(u, v):
    if len(u) != len(v):
        raise DomainError(f"dimension mismatch: {len(u)} != {len(v)}")


def _unit(dim: int, i: int) -> List[Fraction]:
    e = [Fraction(0)] * dim
    e[i] = Fraction(1)
    return e


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


# -------------------------
# Datum
# -------------------------

@dataclass(frozen=True, eq=False)
class CartanDatum:
    """
    Immutable root-system data for one affine type.

    Vectors for finite nodes are stored 0-based (index i-1 holds node i);
    use alpha()/alpha_check()/coweight()/weight() for node-indexed access.
    Instances are shared per (family, rank) by build_cartan_datum, so
    equality is identity.
    """
    family: str
    rank: int
    dim: int
    form_scale: Fraction
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    simple_roots: Tuple[RationalVector, ...]
    simple_coroots: Tuple[RationalVector, ...]
    fundamental_weights: Tuple[RationalVector, ...]
    fundamental_coweights: Tuple[RationalVector, ...]
    highest_root: RationalVector
    highest_coroot: RationalVector
    marks: Tuple[int, ...]
    positive_roots: Tuple[RationalVector, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    @property
    def finite_nodes(self) -> range:
        return range(1, self.rank + 1)

    def pair(self, x: RationalVector, y: RationalVector) -> Fraction:
        """Invariant form; used for every <coweight, root> pairing."""
        return self.form_scale * dot(x, y)

    def alpha(self, i: int) -> RationalVector:
        return self.simple_roots[i - 1]

    def alpha_check(self, i: int) -> RationalVector:
        return self.simple_coroots[i - 1]

    def coweight(self, i: int) -> RationalVector:
        return self.fundamental_coweights[i - 1]

    def weight(self, i: int) -> RationalVector:
        return self.fundamental_weights[i - 1]

    def mark(self, i: int) -> int:
        """a_i with theta = sum a_i alpha_i; a_0 = 1."""
        return self.marks[i]

    def check_node(self, i: int):
        if not isinstance(i, int) or not 0 <= i <= self.rank:
            raise DomainError(f"invalid node {i!r} for {self.name}")

    def check_vector(self, v: RationalVector):
        if len(v) != self.dim:
            raise DomainError(f"dimension mismatch: expected {self.dim}, got {len(v)}")


# -------------------------
# Realizations
# -------------------------

def _simple_roots(family: str, k: int) -> Tuple[int, List[RationalVector]]:
    dim = k + 1 if family == "A" else k
    roots = []
    for i in range(k - 1):
        e = [a - b for a, b in zip(_unit(dim, i), _unit(dim, i + 1))]
        roots.append(tuple(e))
    if family == "A":
        last = [a - b for a, b in zip(_unit(dim, k - 1), _unit(dim, k))]
    elif family == "B":
        last = _unit(dim, k - 1)
    elif family == "C":
        last = [2 * a for a in _unit(dim, k - 1)]
    else:
        last = [a + b for a, b in zip(_unit(dim, k - 2), _unit(dim, k - 1))]
    roots.append(tuple(last))
    return dim, roots


def _dual_basis(basis: Sequence[RationalVector], form_scale: Fraction, sum_zero: bool) -> List[RationalVector]:
    """Solve form_scale * <basis_i, x_j> = delta_ij (with sum(x_j) = 0 when sum_zero)."""
    n = len(basis)
    rows = [[sympy.Rational(c.numerator, c.denominator) for c in b] for b in basis]
    rhs = sympy.eye(n) * sympy.Rational(form_scale.denominator, form_scale.numerator)
    if sum_zero:
        rows.append([sympy.Integer(1)] * len(rows[0]))
        rhs = rhs.col_join(sympy.zeros(1, n))
    solution = sympy.Matrix(rows).inv() * rhs
    return [tuple(_to_fraction(solution[r, j]) for r in range(solution.rows)) for j in range(n)]


def _reflect(beta: RationalVector, alpha: RationalVector) -> RationalVector:
    c = 2 * dot(beta, alpha) / dot(alpha, alpha)
    return sub(beta, scale(c, alpha))


def _root_closure(simple: Sequence[RationalVector]) -> List[RationalVector]:
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in simple:
                gamma = _reflect(beta, alpha)
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return list(seen)


def build_cartan_datum(family: str, rank: int) -> CartanDatum:
    """
    Build the datum for affine type family_rank^(1).

    Args:
        family (str): one of A, B, C, D
        rank (int): k

    Returns:
        CartanDatum: shared immutable datum
    """
    family = str(family).upper()
    if family not in FAMILIES:
        raise ConfigurationError(f"unsupported family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not isinstance(rank, int) or rank < MIN_RANK[family]:
        raise ConfigurationError(f"type {family} requires rank >= {MIN_RANK[family]}, got {rank!r}")
    return _build(family, rank)


@lru_cache(maxsize=None)
def _build(family: str, k: int) -> CartanDatum:
    dim, roots = _simple_roots(family, k)
    form_scale = Fraction(2) / max(dot(a, a) for a in roots)

    def form(x, y):
        return form_scale * dot(x, y)

    coroots = [scale(Fraction(2) / form(a, a), a) for a in roots]
    coweights = _dual_basis(roots, form_scale, family == "A")
    weights = _dual_basis(coroots, form_scale, family == "A")

    every_root = _root_closure(roots)
    positives = []
    for beta in every_root:
        coeffs = [form(beta, lam) for lam in coweights]
        if all(c >= 0 for c in coeffs):
            positives.append((sum(coeffs), beta))
    positives.sort(key=lambda item: (item[0], item[1]))
    theta = positives[-1][1]
    theta_check = scale(Fraction(2) / form(theta, theta), theta)
    marks = (1,) + tuple(int(form(theta, lam)) for lam in coweights)

    size = k + 1
    matrix = [[0] * size for _ in range(size)]
    matrix[0][0] = 2
    for i in range(1, size):
        matrix[0][i] = int(-form(theta_check, roots[i - 1]))
        matrix[i][0] = int(-form(coroots[i - 1], theta))
        for j in range(1, size):
            matrix[i][j] = int(form(coroots[i - 1], roots[j - 1]))

    datum = CartanDatum(
        family=family,
        rank=k,
        dim=dim,
        form_scale=form_scale,
        cartan_matrix=tuple(tuple(row) for row in matrix),
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        fundamental_weights=tuple(weights),
        fundamental_coweights=tuple(coweights),
        highest_root=theta,
        highest_coroot=theta_check,
        marks=marks,
        positive_roots=tuple(beta for _, beta in positives),
    )
    logger.debug("built %s: %d positive roots, marks %s", datum.name, len(positives), marks)
    return datum


def positive_roots(datum: CartanDatum) -> Tuple[RationalVector, ...]:
    return datum.positive_roots


def fundamental_alcove_centroid(datum: CartanDatum) -> RationalVector:
    """Average of the vertices 0 and coweight_i / a_i of the fundamental alcove."""
    total = zero_vector(datum.dim)
    for i in datum.finite_nodes:
        total = add(total, scale(Fraction(1, datum.mark(i)), datum.coweight(i)))
    return scale(Fraction(1, datum.rank + 1), total)
