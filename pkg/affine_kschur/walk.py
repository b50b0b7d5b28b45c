"""
Rank-2 alcove-walk figures

- Draws every alcove wall near the walk, coloured by the node type of the wall
- The path joins the centroids of A_e, A_{s_ir}, ..., A_w
- G_0 always lands on the fixed pixel ANCHOR
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .cartan import CartanDatum, RationalVector, fundamental_alcove_centroid, scale, zero_vector
from .errors import UnsupportedFormulaError
from .svg import SVG
from .weyl import (
    AffineWeylElement,
    alcove_walk,
    apply_diamond,
    generator,
    identity,
    inverse,
    multiply,
)

logger = logging.getLogger(__name__)

PAGE = 600
ANCHOR = (300.0, 300.0)
PIXELS_PER_UNIT = 60.0
NODE_COLORS = ("#d62728", "#1f77b4", "#2ca02c")
PATH_COLOR = "#000000"


@dataclass
class WalkFigure:
    word: Tuple[int, ...]
    path: List[RationalVector]
    walls: Dict[Tuple, int]
    svg: SVG

    def render(self) -> str:
        return self.svg.render()


def _plane(datum: CartanDatum, v: RationalVector) -> Tuple[float, float]:
    if datum.family == "A":
        # orthonormal basis of the sum-zero plane
        x = (float(v[0]) - float(v[1])) / math.sqrt(2)
        y = (float(v[0]) + float(v[1]) - 2 * float(v[2])) / math.sqrt(6)
        return x, y
    return float(v[0]), float(v[1])


def to_pixel(datum: CartanDatum, v: RationalVector) -> Tuple[float, float]:
    x, y = _plane(datum, v)
    gx, gy = _plane(datum, fundamental_alcove_centroid(datum))
    return ANCHOR[0] + (x - gx) * PIXELS_PER_UNIT, ANCHOR[1] - (y - gy) * PIXELS_PER_UNIT


def fundamental_vertices(datum: CartanDatum) -> List[RationalVector]:
    """0 followed by Lambda_i check / a_i."""
    return [zero_vector(datum.dim)] + [
        scale(Fraction(1, datum.mark(i)), datum.coweight(i)) for i in datum.finite_nodes
    ]


def _walls_of(w: AffineWeylElement) -> List[Tuple[int, Tuple[RationalVector, ...]]]:
    """(type, vertex set) for each wall of A_w."""
    datum = w.datum
    w_inv = inverse(w)
    vertices = [apply_diamond(w_inv, p) for p in fundamental_vertices(datum)]
    walls = []
    for i in datum.nodes:
        # wall 0 misses vertex 0; wall i misses vertex i
        kept = tuple(sorted(v for m, v in enumerate(vertices) if m != i))
        walls.append((i, kept))
    return walls


def _nearby_alcoves(datum: CartanDatum, radius: float) -> List[AffineWeylElement]:
    origin = _plane(datum, fundamental_alcove_centroid(datum))

    def inside(w):
        x, y = _plane(datum, w.centroid)
        return abs(x - origin[0]) <= radius and abs(y - origin[1]) <= radius

    start = identity(datum)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in datum.nodes:
            nxt = multiply(generator(datum, i), w)
            if nxt not in seen and inside(nxt):
                seen.add(nxt)
                queue.append(nxt)
    return list(seen)


def walk_figure(datum: CartanDatum, word: Sequence[int], bound: int = 3) -> WalkFigure:
    """
    Build the SVG for the alcove walk of a word.

    Args:
        datum (CartanDatum): rank 2 datum (C2 or A2)
        word (Sequence[int]): letters i_1 ... i_r
        bound (int): half-width, in lattice units, of the drawn region

    Returns:
        WalkFigure: path centroids, wall types and the SVG document
    """
    if datum.rank != 2:
        raise UnsupportedFormulaError(f"walk figures need rank 2, got {datum.name}")
    word = tuple(word)
    steps = alcove_walk(datum, word)
    path = [centroid for _, centroid in steps]

    origin = _plane(datum, fundamental_alcove_centroid(datum))
    reach = max(max(abs(x - origin[0]), abs(y - origin[1])) for x, y in (_plane(datum, p) for p in path))
    radius = max(float(bound), reach + 1.0)

    walls = {}
    for w in sorted(_nearby_alcoves(datum, radius), key=lambda e: e.centroid):
        for node, vertices in _walls_of(w):
            walls.setdefault(vertices, node)
    logger.debug("walk %s: %d walls within radius %.1f", word, len(walls), radius)

    svg = SVG(PAGE, PAGE)
    svg.polygon([to_pixel(datum, v) for v in fundamental_vertices(datum)], fill="#dddddd")
    for vertices, node in sorted(walls.items(), key=lambda item: (item[1], item[0])):
        svg.line([to_pixel(datum, v) for v in vertices], NODE_COLORS[node], 1.0, css_class=f"wall-{node}")
    svg.line([to_pixel(datum, p) for p in path], PATH_COLOR, 2.0, css_class="walk")
    for p in path:
        x, y = to_pixel(datum, p)
        svg.circle(x, y, 6.0, stroke=PATH_COLOR, fill=PATH_COLOR)
    for node, color in enumerate(NODE_COLORS):
        svg.text(10.0, 20.0 + 16.0 * node, f"s{node}", color=color)
    return WalkFigure(word=word, path=path, walls=walls, svg=svg)
