"""Hankel determinants and the binomial / aerating sequence transforms."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientPrefix
from .seqcore import RatLike, Seq, as_seq, binom, rat


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(rat(x) for x in row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(tuple(zip(*self.rows)) if self.rows else ())

    def section(self, m: int) -> "SquareMatrix":
        return SquareMatrix(tuple(row[:m] for row in self.rows[:m]))

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = other.transpose().rows
        return SquareMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.rows
        ))

    def is_lower_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(i + 1, self.n))


@dataclass(frozen=True)
class OffsetList:
    """Row offsets ``(a_0, ..., a_(k-1))`` of a Hankel-like determinant."""

    offsets: tuple

    def __post_init__(self):
        offsets = tuple(int(a) for a in self.offsets)
        if any(a < 0 for a in offsets):
            raise ValueError("offsets must be non-negative")
        object.__setattr__(self, "offsets", offsets)

    def __len__(self):
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)


def _rows(m) -> list[list[Fraction]]:
    if isinstance(m, SquareMatrix):
        return [list(r) for r in m.rows]
    return [[rat(x) for x in r] for r in m]


def det_exact(m: SquareMatrix | Sequence[Sequence[RatLike]]) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination.

    Each row is first scaled to integers by the lcm of its denominators; the
    product of those factors divides the integer determinant at the end.
    """
    rows = _rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    cleared = 1
    work = []
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
        d = math.lcm(*(x.denominator for x in row))
        cleared *= d
        work.append([x.numerator * (d // x.denominator) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if work[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        pk = work[k][k]
        rowk = work[k]
        for i in range(k + 1, n):
            rowi = work[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                rowi[j] = (rowi[j] * pk - lead * rowk[j]) // prev
        prev = pk
    return Fraction(sign * work[n - 1][n - 1], cleared)


def hankel_matrix(s: Seq | Iterable[RatLike], n: int) -> SquareMatrix:
    """The (n+1)x(n+1) matrix ``[s_(i+j)]``."""
    s = as_seq(s)
    s.need(2 * n + 1, f"hankel_matrix(n={n})")
    return SquareMatrix(tuple(tuple(s[i + j] for j in range(n + 1)) for i in range(n + 1)))


def hankel_transform(s: Seq | Iterable[RatLike]) -> Seq:
    s = as_seq(s)
    m = (len(s) - 1) // 2
    return Seq(tuple(det_exact(hankel_matrix(s, n)) for n in range(m + 1)), f"H({s.label})")


def binomial_transform(s: Seq | Iterable[RatLike], alpha: RatLike) -> Seq:
    """Falling alpha-binomial transform ``b_n = sum_k C(n,k) alpha^(n-k) a_k``."""
    s = as_seq(s)
    alpha = rat(alpha)
    out = tuple(
        sum((binom(n, k) * alpha ** (n - k) * s[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(s))
    )
    return Seq(out, f"B({s.label};{alpha})")


def binomial_matrix_section(alpha: RatLike, m: int) -> SquareMatrix:
    alpha = rat(alpha)
    return SquareMatrix(tuple(
        tuple(binom(n, k) * alpha ** (n - k) if k <= n else 0 for k in range(m))
        for n in range(m)
    ))


def aerate(s: Seq | Iterable[RatLike]) -> Seq:
    """``(s_0, 0, s_1, 0, ..., s_(L-1))``, length ``2L - 1``."""
    s = as_seq(s)
    out = []
    for k, v in enumerate(s):
        if k:
            out.append(Fraction(0))
        out.append(v)
    return Seq(tuple(out), f"A({s.label})")


def aerate_alpha(s: Seq | Iterable[RatLike], alpha: RatLike) -> Seq:
    """``(alpha s_0, s_1, alpha s_1, s_2, ..., alpha s_(L-1))``, length ``2L - 1``."""
    s = as_seq(s)
    alpha = rat(alpha)
    out = []
    for k, v in enumerate(s):
        if k:
            out.append(v)
        out.append(alpha * v)
    return Seq(tuple(out), f"A({s.label};{alpha})")


def scale_pointwise(s: Seq | Iterable[RatLike], r: RatLike) -> Seq:
    s = as_seq(s)
    r = rat(r)
    return Seq(tuple(r ** n * v for n, v in enumerate(s)), f"{r}^n*{s.label}")


def hankel_like_det(s: Seq | Iterable[RatLike], rows: OffsetList | Sequence[int], k: int) -> Fraction:
    """``det[s_(rows_i + j)]`` for ``0 <= i, j < k``."""
    s = as_seq(s)
    rows = OffsetList(tuple(rows))
    if len(rows) != k:
        raise ValueError(f"expected {k} offsets, got {len(rows)}")
    if k == 0:
        return Fraction(1)
    s.need(max(rows) + k, "hankel_like_det")
    return det_exact([[s[a + j] for j in range(k)] for a in rows])


def bordered_matrix(p: Seq | Iterable[RatLike], a: Seq | Iterable[RatLike], n: int) -> SquareMatrix:
    """Leading (n+1)x(n+1) section of ``[[0, p^T], [p, H_a]]``."""
    p, a = as_seq(p), as_seq(a)
    p.need(n, "bordered matrix border")
    a.need(max(2 * n - 1, 0), "bordered matrix interior")

    def entry(i, j):
        if i == 0 and j == 0:
            return 0
        if i == 0:
            return p[j - 1]
        if j == 0:
            return p[i - 1]
        return a[i + j - 2]

    return SquareMatrix(tuple(tuple(entry(i, j) for j in range(n + 1)) for i in range(n + 1)))


def bordered_hankel_det(p: Seq | Iterable[RatLike], a: Seq | Iterable[RatLike], n: int) -> Fraction:
    return det_exact(bordered_matrix(p, a, n))


def conjugate_identity_check(a: Seq | Iterable[RatLike], alpha: RatLike, m: int) -> bool:
    """Does ``H_b = B H_a B^T`` hold on the m x m sections, ``b = B(a; alpha)``?

    Truncating the infinite product to m x m sections is only valid because
    ``B`` is lower triangular, which is checked rather than assumed.
    """
    a = as_seq(a)
    if m == 0:
        return True
    a.need(2 * m - 1, "conjugate_identity_check")
    b = binomial_transform(a, alpha)
    bmat = binomial_matrix_section(alpha, m)
    if not bmat.is_lower_triangular():
        raise AssertionError("binomial matrix section is not lower triangular")
    lhs = hankel_matrix(b, m - 1)
    rhs = bmat @ hankel_matrix(a, m - 1) @ bmat.transpose()
    return lhs == rhs
