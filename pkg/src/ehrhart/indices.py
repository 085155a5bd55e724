"""Face index sequences and the divisibility bound on coefficient periods.

The ``i``-index of a polytope is the least dilate whose every
``i``-dimensional face carries a lattice point in its affine span; the
indices form a divisibility chain from the top dimension down, and each
coefficient period of the dilate-count quasi-polynomial divides the
index of matching degree. ``mcmullen_check`` computes both sequences
independently (faces via Smith normal form, periods via fitting from raw
counts) and reports the comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .counting import CountFunction
from .linalg import min_dilate_with_lattice_point
from .polytope import FACE_ENUM_CAP, ConvexPolytope, PolytopalUnion, denominator, faces
from .quasipoly import fit, period_sequence


@dataclass(frozen=True)
class IndexSequence:
    """``values[i]`` is the i-index; lowest dimension first."""

    values: tuple[int, ...]


def index_sequence(poly: ConvexPolytope, cap: int = FACE_ENUM_CAP) -> IndexSequence:
    """The index sequence ``(g_0, ..., g_d)`` over the intrinsic dimension.

    Per face the minimal dilate comes in closed form from the Smith
    normal form of its span equations, since dilating a face scales the
    right-hand side of its span linearly. Convex inputs only; the
    ``i``-index of a union is not defined here.
    """
    if isinstance(poly, PolytopalUnion):
        raise ValueError("index sequences are defined for convex polytopes only")
    values = []
    for i in range(poly.intrinsic_dim + 1):
        g = 1
        for face in faces(poly, i, cap):
            g = math.lcm(g, min_dilate_with_lattice_point(face.span))
        values.append(g)
    return IndexSequence(tuple(values))


def chain_check(seq: IndexSequence) -> bool:
    """Divisibility chain: each index divides the next lower one."""
    values = seq.values
    return all(values[i + 1] != 0 and values[i] % values[i + 1] == 0 for i in range(len(values) - 1))


@dataclass(frozen=True)
class McMullenReport:
    period_sequence: tuple[int, ...]
    index_sequence: tuple[int, ...]
    period_divides_index: tuple[bool, ...]
    chain_ok: bool
    ok: bool


def mcmullen_check(
    poly: ConvexPolytope,
    counter: Callable[[int], int] | None = None,
    budget: int | None = None,
    cap: int = FACE_ENUM_CAP,
) -> McMullenReport:
    """Fit the period sequence and compare it against the index sequence.

    Both sequences are computed from scratch (counts on one side, face
    spans on the other); the report records whether every period divides
    the matching index and whether the chain invariant holds.
    """
    if counter is None:
        counter = CountFunction(poly, budget=budget)
    qp = fit(counter, poly.intrinsic_dim, denominator(poly))
    periods = period_sequence(qp)
    indices = index_sequence(poly, cap).values
    divides = tuple(g % p == 0 for p, g in zip(periods, indices))
    chain_ok = chain_check(IndexSequence(indices))
    return McMullenReport(periods, indices, divides, chain_ok, all(divides) and chain_ok)
