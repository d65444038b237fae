"""Obtuse superbases, Selling parameters, and the binary quadratic form.

Everything here is exact: scalars are ``fractions.Fraction`` throughout,
and rank / positive-semidefiniteness checks run integer-exact Gaussian
elimination on sparse rows instead of calling a floating-point solver.

Indices are 0-based everywhere in this API.  Only the CLI renders them
1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    LengthMismatch,
    NotSymmetric,
    ObtuseViolation,
    RankDeficient,
    RowSumNotZero,
    ShapeMismatch,
    SumNotZero,
    WrongRank,
)

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)


def as_rational(value) -> Fraction:
    """Coerce an exact scalar to Fraction; floats are rejected on purpose."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(
            "refusing to convert float to an exact rational; "
            "pass an int, a string like '5/4' or '0.25', or a Fraction"
        )
    if isinstance(value, (int, str, Decimal)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Superbase:
    """n+1 exact-rational vectors in ambient dimension m that sum to zero.

    Construct through :func:`validate_superbase` (or a generator); direct
    construction skips invariant checking.
    """

    vectors: tuple[Vector, ...]

    @property
    def n(self) -> int:
        """Lattice dimension: one less than the vector count."""
        return len(self.vectors) - 1

    @property
    def m(self) -> int:
        """Ambient dimension."""
        return len(self.vectors[0])

    def subset_sum(self, subset: Iterable[int]) -> Vector:
        """Componentwise sum of the vectors selected by `subset`."""
        total = [ZERO] * self.m
        for i in subset:
            for k, value in enumerate(self.vectors[i]):
                total[k] += value
        return tuple(total)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix of pairwise superbase inner products.

    Valid instances are graph Laplacians with flipped sign conventions:
    nonpositive off the diagonal, rows summing to zero, rank one less
    than the side.  Construct through :func:`validate_gram` or
    :func:`selling_parameters`.
    """

    entries: Matrix

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        """Lattice dimension: one less than the matrix side."""
        return len(self.entries) - 1


@dataclass(frozen=True)
class BinaryAssignment:
    """A 0/1 value per superbase vector; selects the subset with 1s."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("assignment cannot be empty")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("assignment entries must be 0 or 1")

    @classmethod
    def from_subset(cls, subset: Iterable[int], length: int) -> "BinaryAssignment":
        bits = [0] * length
        for i in subset:
            bits[i] = 1
        return cls(tuple(bits))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    @property
    def is_proper(self) -> bool:
        """True when at least one bit is 1 and at least one is 0."""
        return 0 < sum(self.bits) < len(self.bits)

    def complement(self) -> "BinaryAssignment":
        return BinaryAssignment(tuple(1 - b for b in self.bits))


def _coerce_vectors(vectors) -> tuple[Vector, ...]:
    rows = [tuple(as_rational(x) for x in row) for row in vectors]
    if len(rows) < 2:
        raise ShapeMismatch("a superbase needs at least 2 vectors")
    m = len(rows[0])
    for idx, row in enumerate(rows):
        if len(row) != m:
            raise ShapeMismatch(
                f"vector {idx + 1} has length {len(row)}, expected {m}"
            )
    return tuple(rows)


def _scaled_nonzeros(vec: Vector) -> tuple[dict[int, int], int]:
    """Clear denominators: return ({position: integer numerator}, scale)."""
    scale = math.lcm(*(v.denominator for v in vec)) if vec else 1
    return {k: int(v * scale) for k, v in enumerate(vec) if v}, scale


def _pairwise_products(vectors: Sequence[Vector]) -> list[list[Fraction]]:
    """All inner products q_ij, computed sparsely over integer numerators."""
    scaled = [_scaled_nonzeros(v) for v in vectors]
    count = len(vectors)
    q = [[ZERO] * count for _ in range(count)]
    for i in range(count):
        nz_i, den_i = scaled[i]
        for j in range(i, count):
            nz_j, den_j = scaled[j]
            small, big = (nz_i, nz_j) if len(nz_i) <= len(nz_j) else (nz_j, nz_i)
            total = 0
            for pos, value in small.items():
                other = big.get(pos)
                if other is not None:
                    total += value * other
            if total:
                q[i][j] = q[j][i] = Fraction(total, den_i * den_j)
    return q


def _sparse_row_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank by fraction-free Gaussian elimination on sparse integer rows.

    Reductions use cross-multiplication, then divide each row by its
    content to keep the integers small; neither step changes the rank.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        work = dict(row)
        while work:
            lead = min(work)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = work
                rank += 1
                break
            a, b = work[lead], pivot[lead]
            g = math.gcd(a, b)
            a //= g
            b //= g
            reduced = {}
            for col in work.keys() | pivot.keys():
                value = b * work.get(col, 0) - a * pivot.get(col, 0)
                if value:
                    reduced[col] = value
            if reduced:
                content = math.gcd(*reduced.values())
                if content > 1:
                    reduced = {c: v // content for c, v in reduced.items()}
            work = reduced
    return rank


def _psd_rank(entries: Sequence[Sequence[Fraction]]) -> tuple[bool, int]:
    """(is positive semidefinite, rank), by symmetric exact elimination.

    Pivots on positive diagonal entries in ascending index order; a
    negative diagonal or a zero diagonal with leftover coupling disproves
    semidefiniteness.  Sparse row dicts keep Laplacians of sparse graphs
    cheap.
    """
    size = len(entries)
    rows = [
        {j: value for j, value in enumerate(row) if value} for row in entries
    ]
    remaining = list(range(size))
    rank = 0
    while remaining:
        pivot_index = None
        for k in remaining:
            diag = rows[k].get(k, ZERO)
            if diag < 0:
                return False, rank
            if diag > 0:
                pivot_index = k
                break
        if pivot_index is None:
            # Every remaining diagonal is zero; any surviving off-diagonal
            # coupling would give a negative 2x2 principal minor.
            alive = set(remaining)
            for k in remaining:
                if any(j in alive and j != k and v for j, v in rows[k].items()):
                    return False, rank
            return True, rank
        k = pivot_index
        diag = rows[k][k]
        alive = set(remaining)
        neighbors = [
            (j, v) for j, v in rows[k].items() if j != k and j in alive and v
        ]
        for i, vi in neighbors:
            factor = vi / diag
            row_i = rows[i]
            for j, vj in neighbors:
                if j < i:
                    continue
                updated = row_i.get(j, ZERO) - factor * vj
                if updated:
                    row_i[j] = updated
                    rows[j][i] = updated
                else:
                    row_i.pop(j, None)
                    rows[j].pop(i, None)
            row_i.pop(k, None)
        rows[k] = {}
        remaining.remove(k)
        rank += 1
    return True, rank


def validate_superbase(vectors) -> Superbase:
    """Check the superbase conditions and return a validated Superbase.

    Verifies, in order: consistent shape, componentwise zero sum, all
    pairwise inner products nonpositive, and linear independence of the
    first n vectors.  All checks are exact.

    Raises ShapeMismatch, SumNotZero, ObtuseViolation, or RankDeficient.
    """
    rows = _coerce_vectors(vectors)
    n = len(rows) - 1

    column_sums: dict[int, Fraction] = {}
    for row in rows:
        for k, value in enumerate(row):
            if value:
                column_sums[k] = column_sums.get(k, ZERO) + value
    bad = sorted(k for k, total in column_sums.items() if total)
    if bad:
        raise SumNotZero(bad[0], column_sums[bad[0]])

    q = _pairwise_products(rows)
    count = len(rows)
    for i in range(count):
        for j in range(i + 1, count):
            if q[i][j] > 0:
                raise ObtuseViolation((i, j), q[i][j])

    # Clearing denominators row by row does not change the rank.
    sparse_rows = [_scaled_nonzeros(row)[0] for row in rows[:n]]
    if _sparse_row_rank(sparse_rows) != n:
        raise RankDeficient(
            f"the first {n} vectors span less than {n} dimensions"
        )
    return Superbase(rows)


def selling_parameters(sb: Superbase) -> GramMatrix:
    """The (n+1) x (n+1) matrix of pairwise inner products of `sb`.

    A validated superbase always yields a valid GramMatrix, so no checks
    are repeated here.
    """
    q = _pairwise_products(sb.vectors)
    return GramMatrix(tuple(tuple(row) for row in q))


def validate_gram(entries) -> GramMatrix:
    """Check Selling-parameter invariants and return a validated GramMatrix.

    Verifies symmetry, nonpositive off-diagonal entries, zero row sums,
    and (by exact symmetric elimination) positive semidefiniteness with
    rank exactly side - 1.

    Raises ShapeMismatch, NotSymmetric, ObtuseViolation, RowSumNotZero,
    or WrongRank.
    """
    rows = [tuple(as_rational(x) for x in row) for row in entries]
    size = len(rows)
    if size < 2:
        raise ShapeMismatch("a Gram matrix needs side >= 2")
    for idx, row in enumerate(rows):
        if len(row) != size:
            raise ShapeMismatch(
                f"row {idx + 1} has length {len(row)}, expected {size}"
            )

    for i in range(size):
        for j in range(i + 1, size):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(
                    f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ: "
                    f"{rows[i][j]} vs {rows[j][i]}"
                )
            if rows[i][j] > 0:
                raise ObtuseViolation((i, j), rows[i][j])

    for i, row in enumerate(rows):
        total = sum(row, ZERO)
        if total:
            raise RowSumNotZero(i, total)

    for i in range(size):
        if rows[i][i] <= 0:
            # Zero row sum and obtuseness force q_ii >= 0; q_ii = 0 means
            # an all-zero row, i.e. a zero superbase vector.
            raise WrongRank(
                f"diagonal entry {i + 1} is {rows[i][i]}; the matrix cannot "
                f"have rank {size - 1}"
            )

    is_psd, rank = _psd_rank(rows)
    if not is_psd:
        raise WrongRank("matrix is not positive semidefinite")
    if rank != size - 1:
        raise WrongRank(f"rank is {rank}, expected {size - 1}")
    return GramMatrix(tuple(rows))


def _bits_of(u) -> tuple[int, ...]:
    if isinstance(u, BinaryAssignment):
        return u.bits
    bits = tuple(u)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("assignment entries must be 0 or 1")
    return bits


def quadratic_form(g: GramMatrix, u) -> Fraction:
    """Evaluate sum_ij q_ij u_i u_j for a 0/1 assignment u.

    Equals the squared Euclidean length of the superbase subset sum
    selected by u.  Accepts a BinaryAssignment or any 0/1 sequence.
    """
    bits = _bits_of(u)
    if len(bits) != g.size:
        raise LengthMismatch(
            f"assignment has length {len(bits)}, Gram side is {g.size}"
        )
    support = [i for i, b in enumerate(bits) if b]
    entries = g.entries
    total = ZERO
    for a, i in enumerate(support):
        row = entries[i]
        total += row[i]
        for j in support[a + 1 :]:
            total += 2 * row[j]
    return total
