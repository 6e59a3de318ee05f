"""Exact-rational and floating-point linear algebra kernels.

Vectors carry a scalar mode (exact rationals or binary64 floats) and a
norm tag (L1, L2, Linf).  Exact mode is the certification path: ranks,
determinants, nullspaces and L1/Linf norms are computed without rounding,
and every elimination emits a pivot log that an independent replayer can
verify.  Float mode exposes only diagnostics (least-squares residuals);
there is deliberately no float rank, because a tolerance-dependent rank
is not a certificate.

The elimination kernel is fraction-free: each row is scaled to integers
once, and the one-step Bareiss scheme keeps every intermediate entry an
integer minor of the scaled matrix.  That bounds coefficient growth and
makes the pivot sequence replayable by ordinary rational elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError, ModeError

__all__ = [
    "Rational",
    "Scalar",
    "Mode",
    "NormTag",
    "DUAL_TAG",
    "Vector",
    "Matrix",
    "exact_vector",
    "float_vector",
    "unit_vector",
    "zero_vector",
    "pairing",
    "norm",
    "norm_squared",
    "PivotLog",
    "RankResult",
    "rank_exact",
    "det_exact",
    "nullspace_exact",
    "vandermonde_det",
    "least_squares_residual",
    "projection_distance_sq",
    "scaled_int_coords",
]

Rational = Fraction
Scalar = Union[Fraction, float]


class Mode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


class NormTag(str, Enum):
    L1 = "L1"
    L2 = "L2"
    LINF = "Linf"


#: Dual norm of each tag, used when a vector acts as a functional.
DUAL_TAG = {NormTag.L1: NormTag.LINF, NormTag.L2: NormTag.L2, NormTag.LINF: NormTag.L1}


def _coerce_exact(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise ModeError("float coordinate in an exact vector; convert explicitly")
    raise ModeError(f"cannot use {type(x).__name__} as an exact coordinate")


def _coerce_float(x) -> float:
    if isinstance(x, float):
        return x
    if isinstance(x, int):
        return float(x)
    raise ModeError(f"{type(x).__name__} coordinate in a float vector; convert explicitly")


@dataclass(frozen=True)
class Vector:
    """A finite coordinate vector with a norm tag and a scalar mode.

    Exact vectors hold :class:`fractions.Fraction` coordinates, float
    vectors hold binary64.  The two modes never mix inside an operation;
    conversion goes through :meth:`to_float` / :meth:`to_exact` only.
    """

    coords: tuple
    norm_tag: NormTag = NormTag.L1
    mode: Mode = Mode.EXACT

    def __post_init__(self):
        coerce = _coerce_exact if self.mode is Mode.EXACT else _coerce_float
        coords = tuple(coerce(c) for c in self.coords)
        if not coords:
            raise DomainError("vector dimension must be positive")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "norm_tag", NormTag(self.norm_tag))
        object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def restrict(self, a: int, b: int) -> "Vector":
        """Zero every coordinate outside the index window [a, b)."""
        zero = Fraction(0) if self.mode is Mode.EXACT else 0.0
        return Vector(
            tuple(c if a <= i < b else zero for i, c in enumerate(self.coords)),
            self.norm_tag,
            self.mode,
        )

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coords) if c != 0)

    def to_float(self) -> "Vector":
        return Vector(tuple(float(c) for c in self.coords), self.norm_tag, Mode.FLOAT)

    def to_exact(self) -> "Vector":
        # Fraction(float) is the exact binary value of the float, so this
        # conversion is lossless; the reverse direction rounds.
        return Vector(tuple(Fraction(c) for c in self.coords), self.norm_tag, Mode.EXACT)

    def _compatible(self, other: "Vector"):
        if self.mode is not other.mode:
            raise ModeError("mixed exact/float operands; convert explicitly")
        if self.dim != other.dim:
            raise DomainError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        self._compatible(other)
        return Vector(
            tuple(a + b for a, b in zip(self.coords, other.coords)),
            self.norm_tag,
            self.mode,
        )

    def __sub__(self, other: "Vector") -> "Vector":
        self._compatible(other)
        return Vector(
            tuple(a - b for a, b in zip(self.coords, other.coords)),
            self.norm_tag,
            self.mode,
        )

    def __neg__(self) -> "Vector":
        return self.scale(-1)

    def scale(self, c) -> "Vector":
        c = _coerce_exact(c) if self.mode is Mode.EXACT else _coerce_float(c)
        return Vector(tuple(c * x for x in self.coords), self.norm_tag, self.mode)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def exact_vector(coords: Iterable, tag: NormTag = NormTag.L1) -> Vector:
    return Vector(tuple(coords), tag, Mode.EXACT)


def float_vector(coords: Iterable, tag: NormTag = NormTag.L2) -> Vector:
    return Vector(tuple(coords), tag, Mode.FLOAT)


def unit_vector(i: int, dim: int, tag: NormTag = NormTag.L1, mode: Mode = Mode.EXACT) -> Vector:
    if not 0 <= i < dim:
        raise DomainError(f"unit index {i} outside dimension {dim}")
    one, zero = (Fraction(1), Fraction(0)) if mode is Mode.EXACT else (1.0, 0.0)
    return Vector(tuple(one if j == i else zero for j in range(dim)), tag, mode)


def zero_vector(dim: int, tag: NormTag = NormTag.L1, mode: Mode = Mode.EXACT) -> Vector:
    zero = Fraction(0) if mode is Mode.EXACT else 0.0
    return Vector((zero,) * dim, tag, mode)


@dataclass(frozen=True)
class Matrix:
    """A rectangular stack of equal-dimension, equal-mode row vectors."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(self.rows)
        if not rows:
            raise DomainError("matrix needs at least one row")
        dim, mode, tag = rows[0].dim, rows[0].mode, rows[0].norm_tag
        for r in rows[1:]:
            if r.dim != dim:
                raise DomainError("ragged rows in matrix")
            if r.mode is not mode:
                raise ModeError("mixed scalar modes in matrix")
            if r.norm_tag is not tag:
                raise DomainError("mixed norm tags in matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Vector]) -> "Matrix":
        return cls(tuple(rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Vector]) -> "Matrix":
        if not cols:
            raise DomainError("matrix needs at least one column")
        dim = cols[0].dim
        rows = [
            Vector(tuple(c.coords[i] for c in cols), cols[0].norm_tag, cols[0].mode)
            for i in range(dim)
        ]
        return cls(tuple(rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.rows[0].dim

    @property
    def mode(self) -> Mode:
        return self.rows[0].mode

    @property
    def norm_tag(self) -> NormTag:
        return self.rows[0].norm_tag

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return Vector(tuple(r.coords[j] for r in self.rows), self.norm_tag, self.mode)

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(list(self.rows))


def pairing(f: Vector, v: Vector) -> Scalar:
    """Exact (or float) inner product <f, v> of a functional with a vector."""
    f._compatible(v)
    if f.mode is Mode.EXACT:
        return sum((a * b for a, b in zip(f.coords, v.coords)), Fraction(0))
    return math.fsum(a * b for a, b in zip(f.coords, v.coords))


def norm(v: Vector, tag: Optional[NormTag] = None) -> Scalar:
    """p-norm of ``v`` under ``tag`` (defaults to the vector's own tag).

    In exact mode the L2 norm is generally irrational, so requesting it
    raises; use :func:`norm_squared` for the flagged squared variant.
    """
    tag = NormTag(tag) if tag is not None else v.norm_tag
    if tag is NormTag.L1:
        if v.mode is Mode.EXACT:
            return sum((abs(c) for c in v.coords), Fraction(0))
        return math.fsum(abs(c) for c in v.coords)
    if tag is NormTag.LINF:
        return max(abs(c) for c in v.coords)
    if v.mode is Mode.EXACT:
        raise ModeError("exact L2 norm is irrational in general; use norm_squared")
    return math.sqrt(math.fsum(c * c for c in v.coords))


def norm_squared(v: Vector) -> Scalar:
    """Squared L2 norm; exact on exact vectors (the flagged L2 variant)."""
    if v.mode is Mode.EXACT:
        return sum((c * c for c in v.coords), Fraction(0))
    return math.fsum(c * c for c in v.coords)


def dual_norm(f: Vector, tag: NormTag) -> Scalar:
    """Norm of ``f`` acting as a functional on a ``tag``-normed space."""
    return norm(f, DUAL_TAG[NormTag(tag)])


# ---------------------------------------------------------------------------
# fraction-free elimination
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PivotLog:
    """Replayable elimination trace.

    ``row_scales[i]`` is the positive integer that clears row i's
    denominators; ``steps`` records, in order, (source row, column,
    pivot value) where the pivot value is the Bareiss pivot of the
    scaled integer matrix.  Pivot rows are always chosen as the lowest
    *original* row index with a nonzero entry in the scan column.
    """

    shape: tuple
    row_scales: tuple
    steps: tuple


@dataclass(frozen=True)
class RankResult:
    rank: int
    log: PivotLog


def scaled_int_coords(v: Vector) -> tuple:
    """Integer coordinates of an exact vector after clearing denominators.

    The scaling is per-vector, so ranks and zero-patterns are preserved.
    """
    if v.mode is not Mode.EXACT:
        raise ModeError("integer scaling requires an exact vector")
    den = 1
    for c in v.coords:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return tuple(int(c * den) for c in v.coords)


def _scaled_rows(M: Matrix):
    scales = []
    rows = []
    for r in M.rows:
        den = 1
        for c in r.coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        scales.append(den)
        rows.append([int(c * den) for c in r.coords])
    return rows, tuple(scales)


def _bareiss(a):
    """One-step Bareiss elimination on integer rows (mutates ``a``).

    Returns (rank, steps, swap sign, last pivot).  ``steps`` holds
    (original row index, column, pivot) triples.  Divisions are checked:
    Sylvester's identity guarantees exactness, and a nonzero remainder
    would mean the kernel itself is broken.
    """
    m, n = len(a), len(a[0])
    order = list(range(m))  # unprocessed tail stays in ascending order
    steps = []
    sign = 1
    prev = 1
    k = 0
    for col in range(n):
        if k == m:
            break
        pick = -1
        for j in range(k, m):
            if a[order[j]][col] != 0:
                pick = j
                break
        if pick < 0:
            continue
        src = order.pop(pick)
        order.insert(k, src)
        if (pick - k) % 2:
            sign = -sign
        piv_row = a[src]
        piv = piv_row[col]
        steps.append((src, col, piv))
        for j in range(k + 1, m):
            r = a[order[j]]
            f = r[col]
            for t in range(col + 1, n):
                q, rem = divmod(piv * r[t] - f * piv_row[t], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                r[t] = q
            r[col] = 0
        prev = piv
        k += 1
    return k, tuple(steps), sign, prev


def _int_rank(rows) -> int:
    """Lean rank of integer rows (mutates ``rows``); hot-path variant."""
    m, n = len(rows), len(rows[0])
    k = 0
    prev = 1
    for col in range(n):
        if k == m:
            return m
        piv_i = -1
        for i in range(k, m):
            if rows[i][col]:
                piv_i = i
                break
        if piv_i < 0:
            continue
        rows[k], rows[piv_i] = rows[piv_i], rows[k]
        piv_row = rows[k]
        piv = piv_row[col]
        for i in range(k + 1, m):
            r = rows[i]
            f = r[col]
            for t in range(col + 1, n):
                r[t] = (piv * r[t] - f * piv_row[t]) // prev
            r[col] = 0
        prev = piv
        k += 1
    return k


def rank_exact(M: Matrix) -> RankResult:
    """Rank of an exact matrix by fraction-free elimination, with pivot log."""
    if M.mode is not Mode.EXACT:
        raise ModeError("rank_exact requires exact entries; there is no float rank")
    rows, scales = _scaled_rows(M)
    rank, steps, _, _ = _bareiss(rows)
    return RankResult(rank, PivotLog((M.nrows, M.ncols), scales, steps))


def det_exact(M: Matrix) -> Fraction:
    """Exact determinant of a square exact matrix via the Bareiss kernel."""
    if M.mode is not Mode.EXACT:
        raise ModeError("det_exact requires exact entries")
    n = M.nrows
    if M.ncols != n:
        raise DomainError("determinant of a non-square matrix")
    rows, scales = _scaled_rows(M)
    rank, _, sign, last = _bareiss(rows)
    if rank < n:
        return Fraction(0)
    return Fraction(sign * last, math.prod(scales))


def nullspace_exact(M: Matrix) -> list:
    """Basis of {f : <row, f> = 0 for every row of M}, exactly.

    Empty iff the rank equals the column count.  Returned vectors carry
    the dual norm tag, since they act as functionals on the row space.
    """
    if M.mode is not Mode.EXACT:
        raise ModeError("nullspace_exact requires exact entries")
    m, n = M.nrows, M.ncols
    rows = [list(r.coords) for r in M.rows]
    piv_cols = []
    r = 0
    for col in range(n):
        if r == m:
            break
        piv_i = -1
        for i in range(r, m):
            if rows[i][col] != 0:
                piv_i = i
                break
        if piv_i < 0:
            continue
        rows[r], rows[piv_i] = rows[piv_i], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    tag = DUAL_TAG[M.norm_tag]
    basis = []
    piv_set = set(piv_cols)
    for free in range(n):
        if free in piv_set:
            continue
        coords = [Fraction(0)] * n
        coords[free] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            coords[pc] = -rows[i][free]
        basis.append(Vector(tuple(coords), tag, Mode.EXACT))
    return basis


def vandermonde_det(lambdas: Sequence[Fraction]) -> Fraction:
    """Product formula det = prod_{i<j} (l_j - l_i) for the matrix whose
    i-th row is (1, l_i, l_i^2, ..., l_i^{k-1}).

    A singleton gives 1 (empty product); a repeated node gives 0.
    """
    lams = [Fraction(x) for x in lambdas]
    if not lams:
        raise DomainError("vandermonde_det needs at least one node")
    out = Fraction(1)
    for j in range(len(lams)):
        for i in range(j):
            out *= lams[j] - lams[i]
    return out


def least_squares_residual(A: Matrix, b: Vector) -> float:
    """min over c of ||A c - b||_2 via Householder QR with column pivoting.

    Float-mode only.  Column pivoting picks the largest remaining column
    norm (ties to the lowest index), making the reduction deterministic;
    columns below the rank tolerance are dropped rather than fitted.
    """
    if A.mode is Mode.EXACT or b.mode is Mode.EXACT:
        raise ModeError("least_squares_residual is the float-mode diagnostic; convert explicitly")
    if A.nrows != b.dim:
        raise DomainError(f"incompatible shapes: {A.nrows} rows vs dim-{b.dim} target")
    R = np.array([list(row.coords) for row in A.rows], dtype=float)
    y = np.array(list(b.coords), dtype=float)
    m, n = R.shape
    eps = np.finfo(float).eps
    base = math.sqrt(float((R * R).sum(axis=0).max())) if R.size else 0.0
    tol = max(m, n) * eps * (base if base > 0 else 1.0)
    rank = 0
    for k in range(min(m, n)):
        rem = (R[k:, k:] * R[k:, k:]).sum(axis=0)
        j = int(np.argmax(rem))
        if math.sqrt(float(rem[j])) <= tol:
            break
        if j:
            R[:, [k, k + j]] = R[:, [k + j, k]]
        x = R[k:, k].copy()
        alpha = math.sqrt(float((x * x).sum()))
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        beta = float((v * v).sum())
        if beta > 0:
            w = (2.0 / beta) * (v @ R[k:, k:])
            R[k:, k:] -= np.outer(v, w)
            y[k:] -= (2.0 * float(v @ y[k:]) / beta) * v
        rank += 1
    tail = y[rank:]
    return float(math.sqrt(float((tail * tail).sum()))) if tail.size else 0.0


def projection_distance_sq(x: Vector, basis: Sequence[Vector]) -> Fraction:
    """Exact squared Euclidean distance from ``x`` to span(basis).

    Solves the normal equations over the rationals; a linearly dependent
    basis is fine because every solution yields the same projection.
    """
    if x.mode is not Mode.EXACT or any(v.mode is not Mode.EXACT for v in basis):
        raise ModeError("projection_distance_sq requires exact inputs")
    k = len(basis)
    xx = sum((c * c for c in x.coords), Fraction(0))
    if k == 0:
        return xx
    G = [[pairing(basis[i], basis[j]) for j in range(k)] + [pairing(basis[i], x)] for i in range(k)]
    piv_cols = []
    r = 0
    for col in range(k):
        piv_i = -1
        for i in range(r, k):
            if G[i][col] != 0:
                piv_i = i
                break
        if piv_i < 0:
            continue
        G[r], G[piv_i] = G[piv_i], G[r]
        inv = 1 / G[r][col]
        G[r] = [v * inv for v in G[r]]
        for i in range(k):
            if i != r and G[i][col] != 0:
                f = G[i][col]
                G[i] = [v - f * w for v, w in zip(G[i], G[r])]
        piv_cols.append(col)
        r += 1
    coeffs = [Fraction(0)] * k
    for i, pc in enumerate(piv_cols):
        coeffs[pc] = G[i][k]
    proj = sum((coeffs[j] * pairing(basis[j], x) for j in range(k)), Fraction(0))
    return xx - proj
