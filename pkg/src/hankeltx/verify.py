"""Identity verification over parameter grids, and closed-vs-brute tables.

Every identity is checked by comparing an independent brute-force determinant
(or a second evaluation route) with the closed form at each grid point and
index.  Polynomial identities in (alpha, beta) are exercised on a grid whose
size exceeds their degree in each variable for the index ranges used (the
bound is noted next to each check).
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import closedforms as cf
from .errors import ConfigError, DivisionByZeroR, HankelError
from .orthopoly import thm53_pipeline
from .seqcore import Params, Seq, catalan_seq, shift, u_sequence
from .transforms import (
    aerate,
    aerate_alpha,
    binomial_transform,
    bordered_hankel_det,
    conjugate_identity_check,
    det_exact,
    hankel_like_det,
    hankel_matrix,
    hankel_transform,
    scale_pointwise,
)

N_MAX_GUARD = 8
CORPUS_SIZE = 25

DEFAULT_GRID = tuple(Params(a, b) for a, b in [
    (0, 1),
    (2, 1),                            # alpha^2 = 4 beta
    (1, -1),
    (3, 2),
    (Fraction(1, 2), Fraction(1, 3)),
    (2, 2),
    (-1, Fraction(1, 4)),              # alpha^2 = 4 beta, alpha < 0
    (-2, -3),
])


@dataclass
class RunConfig:
    command: str
    params: Optional[Params] = None
    n_max: int = 6
    input_path: Optional[str] = None
    output_format: str = "csv"
    seed: int = 0
    grid: tuple = ()
    only: tuple = ()
    force: bool = False
    literal_eq5: bool = False
    target: Optional[str] = None


@dataclass
class Failure:
    params: str
    index: str
    expected: str
    actual: str


@dataclass
class VerifyReport:
    identity_id: str
    points_tested: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "status": "PASS" if self.passed else "FAIL",
            "points_tested": self.points_tested,
            "failures": [vars(f) for f in self.failures],
        }


class _Tally:
    def __init__(self, report: VerifyReport):
        self.report = report

    def check(self, where, index, expected, actual) -> None:
        self.report.points_tested += 1
        if expected != actual:
            self.report.failures.append(Failure(str(where), str(index), str(expected), str(actual)))

    def error(self, where, index, exc: Exception) -> None:
        self.report.points_tested += 1
        self.report.failures.append(Failure(str(where), str(index), "-", f"{type(exc).__name__}: {exc}"))


def random_corpus(seed: int, count: int = CORPUS_SIZE, length: int = 24) -> list[Seq]:
    """Integer sequences with entries uniform in [-9, 9] from ``random.Random(seed)``."""
    rng = random.Random(seed)
    return [Seq(tuple(rng.randint(-9, 9) for _ in range(length)), f"random#{i}") for i in range(count)]


def _hdet(s, n) -> Fraction:
    return det_exact(hankel_matrix(s, n))


def _alphas(grid) -> list:
    return list(dict.fromkeys(p.alpha for p in grid))


def _betas(grid) -> list:
    return list(dict.fromkeys(p.beta for p in grid))


# -- identities ----------------------------------------------------------------
# Each takes (cfg, tally).  Exceptions from the library are caught per point
# and recorded as failures so one bad point never aborts the suite.


def _per_point(cfg, tally, body: Callable[[Params], None]) -> None:
    for p in cfg.grid:
        try:
            body(p)
        except HankelError as exc:
            tally.error(p, "*", exc)


def _thm21(cfg, t):
    # degree of beta^C(n+1,2) in beta is n(n+1)/2 <= 36; u_(n+1) has degree n
    def body(p):
        ustar = shift(u_sequence(p, 2 * cfg.n_max + 2), 1)
        for n in range(cfg.n_max + 1):
            t.check(p, n, _hdet(ustar, n), cf.hstar_closed(p, n))
    _per_point(cfg, t, body)


def _thm22(cfg, t):
    closed = cf.hstarstar_literal if cfg.literal_eq5 else cf.hstarstar_closed

    def body(p):
        u2 = shift(u_sequence(p, 2 * cfg.n_max + 3), 2)
        for n in range(cfg.n_max + 1):
            t.check(p, n, _hdet(u2, n), closed(p, n))
    _per_point(cfg, t, body)


def _thm23(cfg, t):
    def body(p):
        u = u_sequence(p, 2 * cfg.n_max + 1)
        for n in range(cfg.n_max + 1):
            t.check(p, n, _hdet(u, n), cf.h_closed(p, n))
    _per_point(cfg, t, body)


def _corpus_and_catalans(cfg, length) -> list[Seq]:
    seqs = [catalan_seq(length, b) for b in _betas(cfg.grid)]
    return seqs + [s[:length] for s in random_corpus(cfg.seed, length=max(length, 24))]


def _thm41(cfg, t):
    n_max = cfg.n_max
    for s in _corpus_and_catalans(cfg, n_max + 2):
        h = hankel_transform(s)
        hs = hankel_transform(shift(s, 1))
        p = aerate(s)
        for n in range(n_max + 1):
            star = hs[(n - 1) // 2] if n >= 1 else 1
            t.check(s.label, n, _hdet(p, n), h[n // 2] * star)


def _prop42(cfg, t):
    rs = list(dict.fromkeys(_alphas(cfg.grid) + _betas(cfg.grid)))
    for s in _corpus_and_catalans(cfg, 2 * cfg.n_max + 1):
        h = hankel_transform(s)
        for r in rs:
            hr = hankel_transform(scale_pointwise(s, r))
            for n in range(cfg.n_max + 1):
                t.check(f"{s.label};r={r}", n, r ** (n * (n + 1)) * h[n], hr[n])


def _lem31(cfg, t):
    for s in _corpus_and_catalans(cfg, 2 * cfg.n_max + 1):
        h = hankel_transform(s)
        for alpha in _alphas(cfg.grid):
            hb = hankel_transform(binomial_transform(s, alpha))
            for n in range(cfg.n_max + 1):
                t.check(f"{s.label};alpha={alpha}", n, h[n], hb[n])


def _lem32(cfg, t):
    m = cfg.n_max + 1
    for s in _corpus_and_catalans(cfg, 2 * m - 1):
        for alpha in _alphas(cfg.grid):
            t.check(f"{s.label};alpha={alpha}", f"m={m}", True, conjugate_identity_check(s, alpha, m))


def _thm53(variant: str):
    closed = cf.hhat_closed if variant == "plain" else cf.hcheck_closed
    offset = 0 if variant == "plain" else 1

    def run(cfg, t):
        # U_(2n+4)/alpha has degree 2n+3 <= 19 in alpha; verified on every grid point
        def body(p):
            cat = catalan_seq(2 * cfg.n_max + 3)
            seq = [p.alpha ** 2 * cat[m + offset] - p.beta * cat[m + offset + 1]
                   for m in range(2 * cfg.n_max + 1)]
            dets = [_hdet(seq, n) for n in range(cfg.n_max + 1)]
            for n, d in enumerate(dets):
                t.check(p, n, d, closed(p, n))
            if p.beta == 0:
                return
            for n, d in enumerate(dets):
                try:
                    t.check(f"{p};pipeline", n, d, thm53_pipeline(p, variant, n))
                except DivisionByZeroR as exc:
                    # undefined exactly when a leading shifted minor vanishes
                    if all(dets[: n + 1]):
                        t.error(f"{p};pipeline", n, exc)
                    else:
                        t.check(f"{p};pipeline-degenerate", n, 0, 0)
        _per_point(cfg, t, body)
    return run


def _thm61(cfg, t):
    length = cfg.n_max + 1
    seqs = _corpus_and_catalans(cfg, length)
    for s in seqs:
        for alpha in _alphas(cfg.grid):
            for n in range(cfg.n_max + 1):
                left, right = cf.thm61_split(s, alpha, n)
                t.check(f"{s.label};alpha={alpha}", n, left, right)


def _thm71(cfg, t):
    cat = catalan_seq(16)
    lists = [rows for k in range(5) for rows in itertools.combinations(range(8), k)]
    lists.append((1, 1))
    for rows in lists:
        t.check("rows=" + ",".join(map(str, rows)), len(rows),
                hankel_like_det(cat, rows, len(rows)), cf.krattenthaler_det(rows))


def _lemma7(extra: int):
    closed = cf.lemma72_closed if extra else cf.lemma73_closed

    def run(cfg, t):
        for beta in _betas(cfg.grid):
            c = catalan_seq(2 * cfg.n_max + 2, beta)
            for k in range(1, cfg.n_max + 1):
                for l in range(k):
                    t.check(f"beta={beta}", f"k={k},l={l}", cf.chi_shifted_det(c, k, l, extra), closed(beta, k, l))
    return run


def _eq24(cfg, t):
    def body(p):
        u = u_sequence(p, 2 * cfg.n_max + 1)
        for k in range(1, (cfg.n_max + 1) // 2 + 1):
            t.check(p, 2 * k - 1, _hdet(u, 2 * k - 1), cf.h_sum_odd(p, k))
    _per_point(cfg, t, body)


def _eq28(cfg, t):
    def body(p):
        u = u_sequence(p, 2 * cfg.n_max + 1)
        for k in range(cfg.n_max // 2 + 1):
            t.check(p, 2 * k, _hdet(u, 2 * k), cf.h_sum_even(p, k))
    _per_point(cfg, t, body)


def _eq30(cfg, t):
    def body(p):
        z = {n: cf.z_eval(p, n) for n in range(1, cfg.n_max + 1)}
        for n, zn in z.items():
            t.check(p, n, -cf.lucas_u(p, n), zn)
        for n in range(1, cfg.n_max - 1):
            t.check(f"{p};recurrence", n, 0, z[n + 2] - p.alpha * z[n + 1] + p.beta * z[n])
        if p.beta != 0:
            u = u_sequence(p, 2 * cfg.n_max + 1)
            for n, zn in z.items():
                t.check(f"{p};det", n, _hdet(u, n) / p.beta ** (n * (n - 1) // 2), zn)
    _per_point(cfg, t, body)


def _eq20(cfg, t):
    def body(p):
        u = u_sequence(p, 2 * cfg.n_max + 1)
        c = catalan_seq(cfg.n_max + 1, p.beta)
        border, inner = aerate(c), aerate_alpha(c, p.alpha)
        for n in range(cfg.n_max + 1):
            t.check(p, n, _hdet(u, n), bordered_hankel_det(border, inner, n))
    _per_point(cfg, t, body)


IDENTITIES: dict[str, tuple[str, Callable]] = {
    "eq20": ("bordered determinant equals Hankel determinant of u", _eq20),
    "eq24": ("odd-index double sum for the Hankel transform of u", _eq24),
    "eq28": ("even-index double sum for the Hankel transform of u", _eq28),
    "eq30": ("z_n = -U_n and z_(n+2) - alpha z_(n+1) + beta z_n = 0", _eq30),
    "lem31": ("Hankel transform invariant under the falling binomial transform", _lem31),
    "lem32": ("H_b = B H_a B^T on finite sections", _lem32),
    "lem72": ("det[c_(i+j+chi(j>=l)+1)] closed form", _lemma7(1)),
    "lem73": ("det[c_(i+j+chi(j>=l))] closed form", _lemma7(0)),
    "prop42": ("H(r^n c_n) = r^(n(n+1)) H(c)", _prop42),
    "thm21": ("Hankel transform of u_(n+1)", _thm21),
    "thm22": ("Hankel transform of u_(n+2)", _thm22),
    "thm23": ("Hankel transform of u_n", _thm23),
    "thm41": ("Hankel transform of an aerated sequence factors", _thm41),
    "thm53a": ("det[alpha^2 C_(i+j) - beta C_(i+j+1)] = U_(2n+3) = recurrence pipeline", _thm53("plain")),
    "thm53b": ("det[alpha^2 C_(i+j+1) - beta C_(i+j+2)] = U_(2n+4)/alpha = recurrence pipeline", _thm53("shifted")),
    "thm61": ("Hankel determinant of the alpha-aerated sequence factors", _thm61),
    "thm71": ("Catalan Hankel-like determinant product formula", _thm71),
}


def _validate(cfg: RunConfig) -> None:
    if cfg.n_max < 0:
        raise ConfigError("n_max must be non-negative")
    if cfg.n_max > N_MAX_GUARD and not cfg.force:
        raise ConfigError(f"n_max > {N_MAX_GUARD} needs --force")
    if not cfg.grid:
        raise ConfigError("parameter grid is empty")
    unknown = [i for i in cfg.only if i not in IDENTITIES]
    if unknown:
        raise ConfigError(f"unknown identity ids: {', '.join(unknown)}")


def run_verify(cfg: RunConfig) -> list[VerifyReport]:
    _validate(cfg)
    reports = []
    for identity_id in sorted(cfg.only or IDENTITIES):
        report = VerifyReport(identity_id)
        try:
            IDENTITIES[identity_id][1](cfg, _Tally(report))
        except HankelError as exc:
            _Tally(report).error("-", "-", exc)
        reports.append(report)
    return reports


def render_reports(reports: list[VerifyReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=1) + "\n"
    if fmt != "csv":
        raise ConfigError(f"reports are written as csv or json, not {fmt}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity_id", "status", "points_tested", "failures"])
    for r in reports:
        w.writerow([r.identity_id, "PASS" if r.passed else "FAIL", r.points_tested, len(r.failures)])
    for r in reports:
        for f in r.failures:
            w.writerow([f"# {r.identity_id}", f.params, f.index, f"expected={f.expected} actual={f.actual}"])
    return buf.getvalue()


# -- tables ---------------------------------------------------------------------


def _target_rows(p: Params, target: str, n_max: int) -> Iterator[tuple[int, Fraction, Fraction]]:
    length = 2 * n_max + 3
    if target in ("h", "hstar", "hstarstar"):
        u = u_sequence(p, length)
        seq, closed = {
            "h": (u, cf.h_closed),
            "hstar": (shift(u, 1), cf.hstar_closed),
            "hstarstar": (shift(u, 2), cf.hstarstar_closed),
        }[target]
    elif target in ("hhat", "hcheck"):
        off = 0 if target == "hhat" else 1
        cat = catalan_seq(length + 2)
        seq = [p.alpha ** 2 * cat[m + off] - p.beta * cat[m + off + 1] for m in range(length)]
        closed = cf.hhat_closed if target == "hhat" else cf.hcheck_closed
    else:
        raise ConfigError(f"unknown table target {target!r}")
    for n in range(n_max + 1):
        yield n, _hdet(seq, n), closed(p, n)


TABLE_TARGETS = ("h", "hstar", "hstarstar", "hhat", "hcheck")


def run_table(cfg: RunConfig) -> str:
    if cfg.params is None:
        raise ConfigError("table needs --alpha and --beta")
    rows = [(n, b, c, b == c) for n, b, c in _target_rows(cfg.params, cfg.target or "h", cfg.n_max)]
    if cfg.output_format == "json":
        return json.dumps([{"n": n, "brute": str(b), "closed": str(c), "match": m} for n, b, c, m in rows],
                          separators=(",", ":")) + "\n"
    if cfg.output_format != "csv":
        raise ConfigError(f"tables are written as csv or json, not {cfg.output_format}")
    return "n,brute,closed,match\n" + "".join(f"{n},{b},{c},{str(m).lower()}\n" for n, b, c, m in rows)
