"""Three-term recurrence coefficients and the transformations acting on them.

Only coefficient data is handled: ``alpha_n``, ``beta_n`` of the monic
recurrence ``pi_(n+1) = (x - alpha_n) pi_n - beta_n pi_(n-1)`` and the zeroth
moment ``mu0``.  The polynomials and weights themselves never appear.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .errors import DivisionByZeroR, InsufficientCoeffs, InvalidParams, InvalidScale, Unset
from .seqcore import Params, RatLike, rat


@dataclass(frozen=True)
class ThreeTerm:
    """``alpha_seq = (alpha_0, alpha_1, ...)``, ``beta_seq = (beta_1, beta_2, ...)``."""

    alpha_seq: tuple
    beta_seq: tuple
    mu0: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha_seq", tuple(rat(a) for a in self.alpha_seq))
        object.__setattr__(self, "beta_seq", tuple(rat(b) for b in self.beta_seq))
        if self.mu0 is not None:
            object.__setattr__(self, "mu0", rat(self.mu0))

    def alpha(self, n: int) -> Fraction:
        if n >= len(self.alpha_seq):
            raise InsufficientCoeffs(f"alpha_{n} requested, {len(self.alpha_seq)} known")
        return self.alpha_seq[n]

    def beta(self, n: int) -> Fraction:
        """``beta_n`` for ``n >= 1``."""
        if not 1 <= n <= len(self.beta_seq):
            raise InsufficientCoeffs(f"beta_{n} requested, beta_1..beta_{len(self.beta_seq)} known")
        return self.beta_seq[n - 1]

    def with_mu0(self, mu0: RatLike) -> "ThreeTerm":
        return replace(self, mu0=rat(mu0))


@dataclass(frozen=True)
class RSeq:
    values: tuple
    c: Fraction


def heilermann(t: ThreeTerm, n: int) -> Fraction:
    """``h_n = mu0^(n+1) beta_1^n beta_2^(n-1) ... beta_n``."""
    if t.mu0 is None:
        raise Unset("zeroth moment is not set")
    value = t.mu0 ** (n + 1)
    for i in range(1, n + 1):
        value *= t.beta(i) ** (n + 1 - i)
    return value


def scale_weight(t: ThreeTerm, C: RatLike, mu0: RatLike | None = None) -> ThreeTerm:
    """Weight multiplied by the constant ``C``: only the moment changes.

    ``mu0`` overrides the resulting moment; used when the true moment is not
    rational (the ``pi`` factors of the Chebyshev seeds) but the product is.
    """
    C = rat(C)
    if C == 0:
        raise InvalidScale("scale factor must be nonzero")
    if mu0 is not None:
        return t.with_mu0(mu0)
    return replace(t, mu0=None if t.mu0 is None else C * t.mu0)


def affine_weight(t: ThreeTerm, a: RatLike, b: RatLike) -> ThreeTerm:
    """Weight ``w(a x + b)`` for ``a > 0``."""
    a, b = rat(a), rat(b)
    if a <= 0:
        raise InvalidScale("only a > 0 is supported")
    return ThreeTerm(
        tuple((al - b) / a for al in t.alpha_seq),
        tuple(be / (a * a) for be in t.beta_seq),
        None if t.mu0 is None else t.mu0 / a,
    )


def r_sequence(t: ThreeTerm, c: RatLike, length: int) -> RSeq:
    """``r_0 = c - alpha_0``, ``r_n = c - alpha_n - beta_n / r_(n-1)``."""
    c = rat(c)
    values = []
    for n in range(length):
        if n == 0:
            r = c - t.alpha(0)
        else:
            if values[-1] == 0:
                raise DivisionByZeroR(f"r_{n - 1} = 0 at c = {c}")
            r = c - t.alpha(n) - t.beta(n) / values[-1]
        values.append(r)
    return RSeq(tuple(values), c)


def linear_multiplier(t: ThreeTerm, c: RatLike, new_mu0: RatLike) -> ThreeTerm:
    """Coefficients for the weight ``(x - c) w(x)``.

    The result has one fewer usable index than ``t``.  ``new_mu0`` is the
    zeroth moment of the new weight, supplied by the caller.
    """
    usable = min(len(t.alpha_seq) - 1, len(t.beta_seq))
    if usable < 0:
        raise InsufficientCoeffs("need at least alpha_0")
    r = r_sequence(t, c, usable + 1).values
    alphas = tuple(t.alpha(n + 1) + r[n + 1] - r[n] for n in range(usable))
    betas = tuple(t.beta(n) * r[n] / r[n - 1] for n in range(1, usable + 1))
    return ThreeTerm(alphas, betas, rat(new_mu0))


def chebyshev_seed(kind: str, length: int = 32) -> ThreeTerm:
    """Monic Chebyshev coefficients on [-1, 1], ``length`` alphas and betas.

    ``fourth``: weight sqrt((1-x)/(1+x)); ``second``: weight sqrt(1-x^2).
    The moments are multiples of pi and stay unset.
    """
    quarter = Fraction(1, 4)
    if kind == "fourth":
        alphas = (Fraction(-1, 2),) + (Fraction(0),) * (length - 1)
    elif kind == "second":
        alphas = (Fraction(0),) * length
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return ThreeTerm(alphas[:length], (quarter,) * length)


def thm53_chain(p: Params, variant: str, n: int) -> ThreeTerm:
    """Recurrence data for ``alpha^2 C_m - beta C_(m+1)`` (plain) or
    ``alpha^2 C_(m+1) - beta C_(m+2)`` (shifted), good up to index n."""
    if p.beta == 0:
        raise InvalidParams("beta must be nonzero")
    if variant == "plain":
        seed, first_moment = chebyshev_seed("fourth", n + 2), p.alpha ** 2 - p.beta
    elif variant == "shifted":
        seed, first_moment = chebyshev_seed("second", n + 2), p.alpha ** 2 - 2 * p.beta
    else:
        raise ValueError(f"unknown variant {variant!r}")
    # x -> x/2 - 1 maps [0, 4] onto [-1, 1]
    moved = affine_weight(seed, Fraction(1, 2), -1)
    # the 1/pi part of the constant only cancels the seed's pi; moment becomes -beta
    scaled = scale_weight(moved, -p.beta, mu0=-p.beta)
    return linear_multiplier(scaled, p.alpha ** 2 / p.beta, first_moment)


def thm53_pipeline(p: Params, variant: str, n: int) -> Fraction:
    return heilermann(thm53_chain(p, variant, n), n)
