"""End-to-end reduction: superbase or Gram matrix in, short vector out.

The squared length of a shortest nonzero vector of a lattice given by an
obtuse superbase equals the weight of a global minimum cut of the graph
built from its Selling parameters, and the cut side names the superbase
subset to sum.  This module wires that equivalence together and also
carries the exhaustive subset oracle used to test it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    GramCoordsMismatch,
    ImproperAssignment,
    TooLarge,
    ZeroWeightCut,
)
from .lattice import (
    GramMatrix,
    Superbase,
    Vector,
    _bits_of,
    quadratic_form,
    selling_parameters,
)
from .mincut import (
    BRUTE_FORCE_LIMIT,
    brute_force_mincut,
    cut_weight,
    default_trial_count,
    graph_from_gram,
    karger_stein,
    stoer_wagner,
)

ALGORITHMS = ("stoer-wagner", "karger", "brute")


@dataclass(frozen=True)
class ShortVectorResult:
    """A shortest-vector certificate.

    `subset` lists the superbase indices whose sum is a shortest vector,
    `squared_length` is its exact squared Euclidean length (= the minimum
    cut weight), and `coordinates` carries the vector itself whenever the
    input included coordinates.
    """

    subset: tuple[int, ...]
    squared_length: Fraction
    coordinates: Vector | None = None


class Candidate(NamedTuple):
    """One subset sum from the exhaustive candidate enumeration."""

    subset: tuple[int, ...]
    coordinates: Vector
    squared_length: Fraction


def short_vector(
    g: GramMatrix,
    algorithm: str = "stoer-wagner",
    *,
    seed: int = 0,
    trials: int | None = None,
    superbase: Superbase | None = None,
) -> ShortVectorResult:
    """Compute a shortest nonzero lattice vector via a graph minimum cut.

    `algorithm` is one of "stoer-wagner" (deterministic, the default),
    "karger" (randomized; honors `seed` and `trials`, with a trial count
    of ceil(log2(n+1))^2 + 8 when `trials` is None), or "brute"
    (exhaustive cut enumeration, small inputs only).

    When `superbase` is given it must reproduce `g` exactly, and the
    result then includes the vector's coordinates.

    Raises GramCoordsMismatch, or ZeroWeightCut if the minimum cut has
    weight zero, which is possible only when an invalid matrix bypassed
    validation.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; pick from {ALGORITHMS}")
    if superbase is not None and selling_parameters(superbase).entries != g.entries:
        raise GramCoordsMismatch(
            "the supplied coordinates do not reproduce the supplied Gram matrix"
        )

    graph = graph_from_gram(g)
    if algorithm == "stoer-wagner":
        cut = stoer_wagner(graph)
    elif algorithm == "brute":
        cut = brute_force_mincut(graph)
    else:
        if trials is None:
            trials = default_trial_count(graph.vertex_count)
        cut = karger_stein(graph, seed, trials)

    if not cut.weight:
        raise ZeroWeightCut(
            "minimum cut weight is 0; the input cannot be the Selling "
            "matrix of a lattice"
        )
    coordinates = superbase.subset_sum(cut.side) if superbase is not None else None
    return ShortVectorResult(cut.side, cut.weight, coordinates)


def brute_force_short_vector(g: GramMatrix) -> ShortVectorResult:
    """Oracle: minimize the quadratic form over every proper nonempty subset.

    Scans all 2^(n+1) - 2 binary assignments directly on the Gram matrix,
    never touching the graph reduction.  Ties break toward the smallest
    squared length, then the smallest subset, then lexicographic order.
    Refuses n + 1 > 24.
    """
    size = g.size
    if size > BRUTE_FORCE_LIMIT:
        raise TooLarge(
            f"{2 ** size - 2} subsets at n + 1 = {size}; the exhaustive "
            f"limit is {BRUTE_FORCE_LIMIT}"
        )
    scale = math.lcm(*(x.denominator for row in g.entries for x in row))
    q = [[int(x * scale) for x in row] for row in g.entries]
    best_key: tuple[int, int, tuple[int, ...]] | None = None
    for mask in range(1, (1 << size) - 1):
        subset = tuple(i for i in range(size) if mask >> i & 1)
        total = 0
        for a, i in enumerate(subset):
            row = q[i]
            total += row[i]
            for j in subset[a + 1 :]:
                total += 2 * row[j]
        key = (total, len(subset), subset)
        if best_key is None or key < best_key:
            best_key = key
    assert best_key is not None
    return ShortVectorResult(best_key[2], Fraction(best_key[0], scale))


def candidate_vectors(sb: Superbase) -> list[Candidate]:
    """Every proper nonempty subset sum, sorted by squared length.

    This is the naive exponential search over all 2^(n+1) - 2 candidate
    vectors, computed purely in coordinate space.  The list is sorted
    ascending by squared length with the same tie-break as
    :func:`brute_force_short_vector`, so the first entry is a shortest
    vector.  Refuses n + 1 > 24.
    """
    size = sb.n + 1
    if size > BRUTE_FORCE_LIMIT:
        raise TooLarge(
            f"{2 ** size - 2} candidates at n + 1 = {size}; the exhaustive "
            f"limit is {BRUTE_FORCE_LIMIT}"
        )
    scale = math.lcm(*(x.denominator for vec in sb.vectors for x in vec))
    scaled = [[int(x * scale) for x in vec] for vec in sb.vectors]
    m = sb.m
    out = []
    for mask in range(1, (1 << size) - 1):
        subset = tuple(i for i in range(size) if mask >> i & 1)
        acc = [0] * m
        for i in subset:
            row = scaled[i]
            for k in range(m):
                acc[k] += row[k]
        sq = Fraction(sum(c * c for c in acc), scale * scale)
        coords = tuple(Fraction(c, scale) for c in acc)
        out.append(Candidate(subset, coords, sq))
    out.sort(key=lambda c: (c.squared_length, len(c.subset), c.subset))
    return out


def verify_reduction(g: GramMatrix, u) -> tuple[Fraction, Fraction]:
    """Evaluate one assignment both ways: quadratic form and cut weight.

    Returns (Q(u), W(C, complement)) where C is the support of `u`.  The
    two are equal for every proper assignment on a valid Gram matrix;
    callers assert the equality they care about.

    Raises ImproperAssignment when u is all zeros or all ones.
    """
    bits = _bits_of(u)
    if not 0 < sum(bits) < len(bits):
        raise ImproperAssignment(
            "assignment must contain at least one 1 and at least one 0"
        )
    q_value = quadratic_form(g, bits)
    side = tuple(i for i, b in enumerate(bits) if b)
    cut = cut_weight(graph_from_gram(g), side)
    return q_value, cut.weight
