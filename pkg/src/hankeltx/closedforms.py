"""Closed-form Hankel and Hankel-like determinant evaluations.

All expressions of the shape

    ((a + s)^m - (a - s)^m) / (2^m s),    s^2 = a^2 - 4b,

are the Lucas sequence ``U_m(a, b)`` and are computed from its recurrence, so
no square root is ever taken and the double root ``a^2 = 4b`` needs no special
case.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from .errors import IndexOutOfRange
from .seqcore import Params, RatLike, Seq, as_seq, binom, catalan, rat
from .transforms import OffsetList, aerate_alpha, det_exact, hankel_matrix


def lucas_u(p: Params, m: int) -> Fraction:
    """``U_0 = 0, U_1 = 1, U_m = alpha U_(m-1) - beta U_(m-2)``."""
    if m < 0:
        raise ValueError("index must be non-negative")
    prev, cur = Fraction(0), Fraction(1)
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, p.alpha * cur - p.beta * prev
    return cur


def _tri(n: int) -> int:
    return n * (n - 1) // 2


def hstar_closed(p: Params, n: int) -> Fraction:
    """Hankel transform of ``u_(n+1)``: ``beta^C(n+1,2)``."""
    return p.beta ** _tri(n + 1)


def hstarstar_closed(p: Params, n: int) -> Fraction:
    """Hankel transform of ``u_(n+2)``: ``beta^C(n+1,2) U_(n+2)``."""
    return p.beta ** _tri(n + 1) * lucas_u(p, n + 2)


def hstarstar_literal(p: Params, n: int) -> Fraction:
    """The radical form normalised by ``2^(n+1)`` instead of ``2^(n+2)``.

    It equals twice the true determinant (``2 alpha`` against ``u_2 = alpha``
    at n = 0).  Only the negative check in ``verify --literal-eq5`` uses it.
    """
    return 2 * hstarstar_closed(p, n)


def h_closed(p: Params, n: int) -> Fraction:
    """Hankel transform of ``u_n`` itself: ``-beta^C(n,2) U_n``."""
    return -(p.beta ** _tri(n)) * lucas_u(p, n)


def hhat_closed(p: Params, n: int) -> Fraction:
    """``det[alpha^2 C_(i+j) - beta C_(i+j+1)]_(0..n) = U_(2n+3)``."""
    return lucas_u(p, 2 * n + 3)


def _two_term(p: Params, n: int, first: Fraction, second: Fraction, coeff: Fraction) -> Fraction:
    if n == 0:
        return first
    a, b = first, second
    for _ in range(n - 1):
        a, b = b, coeff * b - p.beta ** 2 * a
    return b


def hcheck_closed(p: Params, n: int) -> Fraction:
    """``det[alpha^2 C_(i+j+1) - beta C_(i+j+2)]_(0..n)``.

    Equal to ``U_(2n+4) / alpha`` but evaluated by the recurrence
    ``x_n = (alpha^2 - 2 beta) x_(n-1) - beta^2 x_(n-2)`` from
    ``x_0 = alpha^2 - 2 beta``, ``x_1 = alpha^4 - 4 alpha^2 beta + 3 beta^2``,
    which stays defined at alpha = 0.
    """
    a2, b = p.alpha ** 2, p.beta
    return _two_term(p, n, a2 - 2 * b, a2 * a2 - 4 * a2 * b + 3 * b * b, a2 - 2 * b)


def hhat_printed_recurrence(p: Params, n: int) -> Fraction:
    """Recurrence with middle coefficient ``alpha^2 - beta`` (a misprint).

    Diverges from the determinant from n = 2 on; e.g. at (1, -1) it gives
    2, 5, 8 instead of 2, 5, 13.  Kept for the documented negative check.
    """
    a2, b = p.alpha ** 2, p.beta
    return _two_term(p, n, a2 - b, a2 * a2 - 3 * a2 * b + b * b, a2 - b)


def hcheck_printed_recurrence(p: Params, n: int) -> Fraction:
    """Misprinted recurrence and start value ``alpha^4 - 3 alpha^2 beta + 3 beta^2``."""
    a2, b = p.alpha ** 2, p.beta
    return _two_term(p, n, a2 - 2 * b, a2 * a2 - 3 * a2 * b + 3 * b * b, a2 - b)


def krattenthaler_det(rows: OffsetList | Sequence[int]) -> Fraction:
    """Product formula for ``det[C_(a_i + j)]_(0 <= i, j < k)``."""
    diff, fact = _offset_products(tuple(OffsetList(tuple(rows))))
    return diff * fact


def _check_l(k: int, l: int) -> None:
    if not 0 <= l <= k - 1:
        raise IndexOutOfRange(f"need 0 <= l <= k-1, got k={k}, l={l}")


def _chi_offsets(k: int, l: int, extra: int) -> tuple:
    return tuple(i + (1 if i >= l else 0) + extra for i in range(k))


def _superfactorial(n: int) -> int:
    """``0! 1! ... n!``"""
    return math.prod(math.factorial(j) for j in range(n + 1))


def _vandermonde_part(k: int, l: int) -> int:
    return binom(k, l) * _superfactorial(k - 1)


def _factorial_part_72(k: int, l: int) -> Fraction:
    f = math.factorial
    return Fraction(f(k) * f(l + 1) * (2 * k + 2) * f(l + k + 1),
                    _superfactorial(k + 1) * f(2 * l + 2))


def _factorial_part_73(k: int, l: int) -> Fraction:
    # l!, not (l+1)!: the latter is off by a factor l+1 whenever l >= 1
    f = math.factorial
    return Fraction(f(l) * f(l + k), _superfactorial(k) * f(2 * l))


def _offset_products(offsets: Sequence[int]) -> tuple[Fraction, Fraction]:
    """The difference product and the factorial product of the Catalan
    Hankel-like determinant, evaluated term by term."""
    k = len(offsets)
    diff = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            diff *= offsets[j] - offsets[i]
    f = math.factorial
    fact = Fraction(1)
    for i, a in enumerate(offsets):
        fact *= Fraction(f(i + k) * f(2 * a), f(2 * i) * f(a) * f(a + k))
    return diff, fact


def lemma72_closed(beta: RatLike, k: int, l: int) -> Fraction:
    """``det[c_(i+j+chi(j>=l)+1)] = beta^(k^2+k-l) C(l+k+1, 2l+1)``, ``c_n = beta^n C_n``."""
    _check_l(k, l)
    return rat(beta) ** (k * k + k - l) * binom(l + k + 1, 2 * l + 1)


def lemma73_closed(beta: RatLike, k: int, l: int) -> Fraction:
    """``det[c_(i+j+chi(j>=l))] = beta^(k^2-l) C(l+k, 2l)``."""
    _check_l(k, l)
    return rat(beta) ** (k * k - l) * binom(l + k, 2 * l)


def chi_shifted_matrix(s: Seq | Sequence[RatLike], k: int, l: int, extra: int) -> list:
    """Rows ``[s_(i + j + chi(j >= l) + extra)]``.

    Shifting columns rather than rows transposes the matrix; the determinant
    is the same either way.
    """
    if extra not in (0, 1):
        raise ValueError("extra must be 0 or 1")
    _check_l(k, l)
    s = as_seq(s)
    s.need(2 * k + extra, "chi_shifted_det")
    cols = _chi_offsets(k, l, extra)
    return [[s[i + c] for c in cols] for i in range(k)]


def chi_shifted_det(s: Seq | Sequence[RatLike], k: int, l: int, extra: int) -> Fraction:
    return det_exact(chi_shifted_matrix(s, k, l, extra))


def _square(c: Seq, k: int, f) -> list:
    return [[f(i + j) for j in range(k)] for i in range(k)]


def thm61_split(s: Seq | Sequence[RatLike], alpha: RatLike, n: int,
                literal: bool = False) -> tuple[Fraction, Fraction]:
    """Hankel determinant of the alpha-aerated sequence, directly and factored.

    Returns ``(left, right)`` where ``left = det[a_(i+j)]_(0..n)`` with
    ``a = aerate_alpha(s, alpha)`` and, writing ``c = s``,

    * n = 2k-1: ``right = det[alpha^2 c_(i+j) - c_(i+j+1)]_k * det[c_(i+j+1)]_k``
    * n = 2k:   ``right = alpha * det[alpha^2 c_(i+j+1) - c_(i+j+2)]_k * det[c_(i+j)]_(k+1)``

    The even-row block of the even case is ``[alpha c_(i+j)]``; the variant
    with ``det[c_(i+j+1)]_(k+1)`` there (``literal=True``) only agrees when the
    two Hankel transforms coincide, as they do for the Catalan numbers.
    """
    c = as_seq(s)
    alpha = rat(alpha)
    c.need(n + 2 if literal and n % 2 == 0 else n + 1, "thm61_split")
    left = det_exact(hankel_matrix(aerate_alpha(c[: n + 1], alpha), n))
    a2 = alpha * alpha
    if n % 2 == 1:
        k = (n + 1) // 2
        first = det_exact(_square(c, k, lambda m: a2 * c[m] - c[m + 1]))
        second = det_exact(_square(c, k, lambda m: c[m + 1]))
        return left, first * second
    k = n // 2
    first = det_exact(_square(c, k, lambda m: a2 * c[m + 1] - c[m + 2]))
    shift = 1 if literal else 0
    second = det_exact(_square(c, k + 1, lambda m: c[m + shift]))
    return left, alpha * first * second


def h_sum_odd(p: Params, k: int) -> Fraction:
    """``h_(2k-1)`` as a double sum over Catalan numbers and binomials."""
    if k < 1:
        raise ValueError("k must be at least 1")
    a, b = p.alpha, p.beta
    total = Fraction(0)
    for h in range(k):
        inner = sum((-1) ** (k + l) * catalan(l - h) * binom(l + k, 2 * l + 1) for l in range(h, k))
        total += a ** (2 * h) * b ** (k - 1 - h) * inner
    return b ** ((k - 1) * (2 * k - 1)) * total


def h_sum_even(p: Params, k: int) -> Fraction:
    """``h_(2k)`` as a double sum; ``h_0 = 0``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    a, b = p.alpha, p.beta
    total = Fraction(0)
    for h in range(k):
        inner = sum((-1) ** (k + l - 1) * catalan(l - 1 - h) * binom(l + k, 2 * l)
                    for l in range(h + 1, k + 1))
        total += a ** (2 * h + 1) * b ** (k - 1 - h) * inner
    return b ** (k * (2 * k - 1)) * total


def z_eval(p: Params, n: int) -> Fraction:
    """``z_n = beta^(-C(n,2)) h_n`` from its sum form (no division by beta)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a, b = p.alpha, p.beta
    k = (n + 1) // 2
    total = Fraction(0)
    if n % 2 == 1:
        for h in range(k):
            inner = sum((-1) ** (k + l) * catalan(l - h) * binom(l + k, 2 * l + 1) for l in range(h, k))
            total += a ** (2 * h) * b ** (k - 1 - h) * inner
    else:
        k = n // 2
        for h in range(k):
            inner = sum((-1) ** (k + l) * catalan(l - h) * binom(l + k + 1, 2 * l + 2) for l in range(h, k))
            total += a ** (2 * h + 1) * b ** (k - 1 - h) * inner
    return total
