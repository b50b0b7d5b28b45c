"""
Symmetric 2k-cores: the type C affine Grassmannian combinatorics

- Cores are stored as full self-conjugate partitions
- Shifted diagram (cells with column >= row) is a derived view
- s_i adds every addable residue-i cell, or removes every removable one
- Cells are (row, column), 1-based
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .cartan import CartanDatum
from .errors import DomainError, InternalConsistencyError, UnsupportedFormulaError
from .weyl import (
    AffineWeylElement,
    DynkinAutomorphism,
    bruhat_leq,
    canonical_reduced_word,
    element_from_word,
    is_grassmannian,
    length,
    right_descents,
)

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class SymmetricCore:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if int(p) != 0)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"{self.parts!r} is not a partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def checked(cls, parts: Sequence[int], k: int) -> "SymmetricCore":
        core = cls(tuple(parts))
        problem = core.violation(k)
        if problem:
            raise DomainError(problem)
        return core

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1))

    def row_length(self, r: int) -> int:
        return self.parts[r - 1] if 1 <= r <= len(self.parts) else 0

    def cells(self) -> Set[Cell]:
        return {(r, c) for r, p in enumerate(self.parts, 1) for c in range(1, p + 1)}

    def shifted_cells(self) -> Set[Cell]:
        return {(r, c) for r, c in self.cells() if c >= r}

    def contains(self, other: "SymmetricCore") -> bool:
        return all(other.row_length(r) <= self.row_length(r) for r in range(1, len(other.parts) + 1))

    def violation(self, k: int) -> Optional[str]:
        if self.conjugate() != self.parts:
            return f"{self.parts} is not self-conjugate"
        for cell in self.cells():
            if hook_length(self, cell) % (2 * k) == 0:
                return f"{self.parts} has hook length divisible by {2 * k} at {cell}"
        return None

    def to_dict(self) -> Dict:
        return {"parts": list(self.parts)}

    def __str__(self):
        if not self.parts:
            return "()"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = SymmetricCore(())


# -------------------------
# Cells
# -------------------------

def hook_length(core: SymmetricCore, cell: Cell) -> int:
    r, c = cell
    if not 1 <= c <= core.row_length(r):
        raise DomainError(f"cell {cell} is outside {core}")
    conj = core.conjugate()
    arm = core.parts[r - 1] - c
    leg = conj[c - 1] - r
    return arm + leg + 1


def residue(k: int, cell: Cell) -> int:
    r, c = cell
    d = (c - r) % (2 * k)
    return d if d <= k else 2 * k - d


def addable_cells(core: SymmetricCore) -> List[Cell]:
    out = []
    for r in range(1, len(core.parts) + 2):
        c = core.row_length(r) + 1
        if r == 1 or core.row_length(r - 1) >= c:
            out.append((r, c))
    return out


def removable_cells(core: SymmetricCore) -> List[Cell]:
    out = []
    for r in range(1, len(core.parts) + 1):
        c = core.parts[r - 1]
        if core.row_length(r + 1) < c:
            out.append((r, c))
    return out


def apply_generator_to_core(k: int, i: int, core: SymmetricCore) -> SymmetricCore:
    """s_i acting on a symmetric 2k-core."""
    if not 0 <= i <= k:
        raise DomainError(f"invalid node {i} for k={k}")
    parts = list(core.parts) + [0]
    add = [cell for cell in addable_cells(core) if residue(k, cell) == i]
    if add:
        for r, c in add:
            parts[r - 1] = c
        return SymmetricCore(tuple(parts))
    remove = [cell for cell in removable_cells(core) if residue(k, cell) == i]
    for r, c in remove:
        parts[r - 1] = c - 1
    return SymmetricCore(tuple(parts))


def apply_word_to_core(k: int, word: Sequence[int], core: SymmetricCore = EMPTY) -> SymmetricCore:
    """w acting on core, w = s_{i1}...s_{im} applied right to left."""
    for i in reversed(list(word)):
        core = apply_generator_to_core(k, i, core)
    return core


# -------------------------
# Bijection with W^0
# -------------------------

def _require_type_c(datum: CartanDatum):
    if datum.family != "C":
        raise UnsupportedFormulaError(f"symmetric-core combinatorics is only available for type C, not {datum.name}")


@lru_cache(maxsize=None)
def core_of(w: AffineWeylElement) -> SymmetricCore:
    _require_type_c(w.datum)
    if not is_grassmannian(w):
        node = next(j for j in right_descents(w) if j != 0)
        raise DomainError(f"element is not Grassmannian: right descent at node {node}")
    return apply_word_to_core(w.datum.rank, canonical_reduced_word(w))


def peel_word(k: int, core: SymmetricCore) -> Tuple[int, ...]:
    """Strip the smallest residue whose generator shrinks the core, until empty."""
    letters = []
    current = core
    while current.parts:
        for i in range(k + 1):
            smaller = apply_generator_to_core(k, i, current)
            if smaller.size < current.size:
                break
        else:
            raise InternalConsistencyError(f"no removable residue in {current}")
        letters.append(i)
        current = smaller
    return tuple(letters)


def grassmannian_of(datum: CartanDatum, core: SymmetricCore) -> AffineWeylElement:
    _require_type_c(datum)
    problem = core.violation(datum.rank)
    if problem:
        raise DomainError(problem)
    return element_from_word(datum, peel_word(datum.rank, core))


# -------------------------
# Intervals
# -------------------------

def cores_below(k: int, R: SymmetricCore) -> List[SymmetricCore]:
    """All symmetric 2k-cores whose diagram lies inside R."""
    found = {EMPTY}
    frontier = [EMPTY]
    while frontier:
        nxt = []
        for core in frontier:
            for i in range(k + 1):
                bigger = apply_generator_to_core(k, i, core)
                if bigger.size > core.size and R.contains(bigger) and bigger not in found:
                    found.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return list(found)


def containment_interval(k: int, S: SymmetricCore, R: SymmetricCore) -> List[SymmetricCore]:
    return [core for core in cores_below(k, R) if core.contains(S)]


def _interval_key(datum: CartanDatum, core: SymmetricCore):
    return (length(grassmannian_of(datum, core)), peel_word(datum.rank, core))


def cores_in_interval(datum: CartanDatum, S: SymmetricCore, R: SymmetricCore) -> List[SymmetricCore]:
    """
    Cores lambda with w_S <= w_lambda <= w_R in Bruhat order.

    Args:
        datum (CartanDatum): type C datum
        S, R (SymmetricCore): interval ends

    Returns:
        list: sorted by (length of w_lambda, peel word)
    """
    _require_type_c(datum)
    w_s = grassmannian_of(datum, S)
    w_r = grassmannian_of(datum, R)
    if not bruhat_leq(w_s, w_r):
        raise DomainError(f"{S} and {R} do not form a Bruhat interval")
    chosen = [
        core for core in cores_below(datum.rank, R)
        if bruhat_leq(w_s, grassmannian_of(datum, core)) and bruhat_leq(grassmannian_of(datum, core), w_r)
    ]
    mismatch = interval_mismatch(datum, S, R, chosen)
    if mismatch:
        logger.warning(
            "Bruhat interval [%s, %s] differs from containment by %s",
            S, R, ", ".join(str(c) for c in sorted(mismatch, key=lambda c: c.parts)),
        )
    return sorted(chosen, key=lambda core: _interval_key(datum, core))


def interval_mismatch(datum: CartanDatum, S: SymmetricCore, R: SymmetricCore,
                      chosen: Optional[List[SymmetricCore]] = None) -> Set[SymmetricCore]:
    """Symmetric difference between the Bruhat interval and plain containment."""
    if chosen is None:
        chosen = cores_in_interval(datum, S, R)
    return set(chosen) ^ set(containment_interval(datum.rank, S, R))


# -------------------------
# Rendering
# -------------------------

def marked_cells(lam: SymmetricCore, R: SymmetricCore) -> List[Cell]:
    if not R.contains(lam):
        raise DomainError(f"{lam} is not contained in {R}")
    return sorted(R.shifted_cells() - lam.shifted_cells())


def _shifted_grid(lam: SymmetricCore, R: SymmetricCore, tau: Optional[DynkinAutomorphism], k: int):
    """Rows of (label, marked) over R's shifted diagram, top row first."""
    marked = set(marked_cells(lam, R))
    tau_inv = tau.inverse() if tau is not None else None
    rows = []
    for r in range(1, len(R.parts) + 1):
        if R.row_length(r) < r:
            break
        row = []
        for c in range(r, R.row_length(r) + 1):
            res = residue(k, (r, c))
            if (r, c) in marked:
                row.append((tau_inv(res) if tau_inv else res, True))
            else:
                row.append((res, False))
        rows.append(row)
    return list(reversed(rows))


def render_colored(lam: SymmetricCore, R: SymmetricCore, tau: Optional[DynkinAutomorphism], k: int) -> str:
    """
    Residues over R's shifted diagram; cells outside lam are bracketed
    and relabelled by tau^-1.
    """
    grid = _shifted_grid(lam, R, tau, k)
    if not grid:
        return ""
    height = len(grid)
    tokens = []
    for depth, row in enumerate(grid):
        indent = height - 1 - depth
        tokens.append([None] * indent + [f"[{x}]" if mark else str(x) for x, mark in row])
    width = max(len(row) for row in tokens)
    col_width = [
        max(len(row[c]) for row in tokens if c < len(row) and row[c] is not None)
        for c in range(width)
    ]
    lines = []
    for row in tokens:
        cells = [(tok or "").center(col_width[c]) for c, tok in enumerate(row)]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def render_shifted(core: SymmetricCore, k: int) -> str:
    return render_colored(core, core, None, k)


def render_colored_latex(lam: SymmetricCore, R: SymmetricCore, tau: Optional[DynkinAutomorphism], k: int) -> str:
    grid = _shifted_grid(lam, R, tau, k)
    height = len(grid)
    body = []
    for depth, row in enumerate(grid):
        indent = "\\omit\\hskip\\squaresize&" * (height - 1 - depth)
        cells = [f"\\bf\\color{{red}}{x}" if mark else str(x) for x, mark in row]
        body.append(indent + "&".join(cells) + "\\cr")
    return "\\young{" + "".join(body) + "}"


def _full_rows(core: SymmetricCore, k: int) -> List[List[int]]:
    rows = [[residue(k, (r, c)) for c in range(1, p + 1)] for r, p in enumerate(core.parts, 1)]
    return list(reversed(rows))


def render_full(core: SymmetricCore, k: int) -> str:
    """Residues over the full diagram, row 1 at the bottom."""
    return "\n".join(" ".join(str(x) for x in row) for row in _full_rows(core, k))


def render_full_latex(core: SymmetricCore, k: int) -> str:
    return "\\young{" + "".join("&".join(str(x) for x in row) + "\\cr" for row in _full_rows(core, k)) + "}"


def core_to_dict(lam: SymmetricCore, R: Optional[SymmetricCore] = None) -> Dict:
    out = lam.to_dict()
    if R is not None:
        out["marked"] = [list(cell) for cell in marked_cells(lam, R)]
    return out
