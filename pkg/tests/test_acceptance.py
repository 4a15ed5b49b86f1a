"""Acceptance gate: one test per criterion, each with its time budget.

Every test records a ``criterion N: PASS|FAIL`` line; the lines are printed
in the terminal summary (see conftest.py) as well as inline under ``-s``.
"""

import functools
import io
import random
import time
from contextlib import redirect_stdout
from fractions import Fraction as F
from itertools import combinations

import pytest

from hankeltx import (
    DivisionByZeroR,
    InvalidParams,
    Params,
    aerate,
    binomial_transform,
    bordered_hankel_det,
    catalan_seq,
    conjugate_identity_check,
    det_exact,
    hankel_like_det,
    hankel_matrix,
    hankel_transform,
    scale_pointwise,
    shift,
    u_sequence,
)
from hankeltx import closedforms as cf
from hankeltx.bfile import emit, parse_bfile
from hankeltx.cli import main
from hankeltx.orthopoly import thm53_pipeline
from hankeltx.transforms import aerate_alpha
from hankeltx.verify import random_corpus

from conftest import GRID

RESULTS = []
CORPUS = random_corpus(0)


def criterion(number, limit, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                assert elapsed < limit, f"took {elapsed:.2f}s, budget {limit}s"
            except BaseException:
                elapsed = time.perf_counter() - start
                _record(number, "FAIL", elapsed, limit, title)
                raise
            _record(number, "PASS", elapsed, limit, title)
        return run
    return wrap


def _record(number, status, elapsed, limit, title):
    line = f"criterion {number:>2}: {status}  {elapsed:6.2f}s / {limit}s  {title}"
    RESULTS.append(line)
    print(line)


def hdet(s, n):
    return det_exact(hankel_matrix(s, n))


def test_grid_covers_required_points():
    required = {Params(0, 1), Params(2, 1), Params(1, -1), Params(3, 2), Params(F(1, 2), F(1, 3))}
    assert required <= set(GRID)
    assert any(p.alpha ** 2 == 4 * p.beta for p in GRID)
    assert len(GRID) >= 6


@criterion(1, 1, "Catalan baseline")
def test_criterion_01_catalan():
    c = catalan_seq(10)
    assert hankel_transform(c[:9]).values == (1,) * 5
    assert hankel_transform(shift(c, 1)[:9]).values == (1,) * 5


@criterion(2, 5, "Hankel of u* equals beta^C(n+1,2)")
def test_criterion_02_ustar():
    for p in GRID:
        us = shift(u_sequence(p, 15), 1)
        for n in range(7):
            assert hdet(us, n) == p.beta ** (n * (n + 1) // 2) == cf.hstar_closed(p, n)


@criterion(3, 5, "Hankel of u** equals beta^C(n+1,2) U_(n+2); literal constant fails at n = 0")
def test_criterion_03_ustarstar():
    for p in GRID:
        uss = shift(u_sequence(p, 16), 2)
        for n in range(7):
            assert hdet(uss, n) == p.beta ** (n * (n + 1) // 2) * cf.lucas_u(p, n + 2)
            assert hdet(uss, n) == cf.hstarstar_closed(p, n)
        # the 1x1 determinant is alpha; a 2^(n+1) normalisation would give 2 alpha
        assert hdet(uss, 0) == p.alpha
        if p.alpha:
            assert cf.hstarstar_literal(p, 0) == 2 * p.alpha != hdet(uss, 0)


@criterion(4, 10, "Hankel of u: brute = closed = double sums = bordered")
def test_criterion_04_u():
    for p in GRID:
        u = u_sequence(p, 17)
        c = catalan_seq(10, p.beta)
        border, interior = aerate(c), aerate_alpha(c, p.alpha)
        for n in range(9):
            brute = hdet(u, n)
            closed = -p.beta ** (n * (n - 1) // 2) * cf.lucas_u(p, n)
            summed = cf.h_sum_odd(p, (n + 1) // 2) if n % 2 else cf.h_sum_even(p, n // 2)
            assert brute == closed == cf.h_closed(p, n) == summed == bordered_hankel_det(border, interior, n)


@criterion(5, 5, "Catalan combinations: determinant = Lucas form = coefficient pipeline")
def test_criterion_05_catalan_combinations():
    cat = catalan_seq(20)
    for p in GRID:
        a2, b = p.alpha ** 2, p.beta
        plain = [a2 * cat[m] - b * cat[m + 1] for m in range(13)]
        shifted = [a2 * cat[m + 1] - b * cat[m + 2] for m in range(13)]
        for n in range(7):
            d_plain, d_shifted = hdet(plain, n), hdet(shifted, n)
            assert d_plain == cf.lucas_u(p, 2 * n + 3) == cf.hhat_closed(p, n)
            assert d_shifted == cf.hcheck_closed(p, n)
            for variant, det in (("plain", d_plain), ("shifted", d_shifted)):
                try:
                    assert thm53_pipeline(p, variant, n) == det
                except InvalidParams:
                    assert b == 0
                except DivisionByZeroR:
                    # undefined exactly when a leading minor vanishes
                    base = plain if variant == "plain" else shifted
                    assert any(hdet(base, m) == 0 for m in range(n + 1))
    fib = Params(1, -1)
    assert [cf.hhat_closed(fib, n) for n in range(5)] == [2, 5, 13, 34, 89]
    assert [thm53_pipeline(fib, "plain", n) for n in range(5)] == [2, 5, 13, 34, 89]


@pytest.mark.xfail(strict=True, reason="printed two-term coefficient alpha^2 - beta; determinants need alpha^2 - 2 beta")
def test_criterion_05_printed_recurrence_known_defect():
    p = Params(2, 1)
    shifted = [4 * catalan_seq(6)[m + 1] - catalan_seq(6)[m + 2] for m in range(3)]
    RESULTS.append("criterion  5: known defect  printed shifted recurrence (expected to disagree, see README)")
    assert [cf.hcheck_printed_recurrence(p, n) for n in range(2)] == [hdet(shifted, n) for n in range(2)]


ALPHAS_6 = [-2, -1, 0, 1, 3, F(1, 2)]


@criterion(6, 10, "binomial invariance and conjugation identity on the seeded corpus")
def test_criterion_06_binomial():
    assert len(CORPUS) == 25
    for s in CORPUS:
        s = s[:11]
        h = hankel_transform(s)
        for alpha in ALPHAS_6:
            assert hankel_transform(binomial_transform(s, alpha)) == h
            for m in range(1, 7):
                assert conjugate_identity_check(s, alpha, m)


@criterion(7, 10, "aerated product identity and scaling law on the seeded corpus")
def test_criterion_07_aerate_scale():
    for s in CORPUS:
        s9 = s[:9]
        g = hankel_transform(aerate(s9))
        h, hstar = hankel_transform(s9), hankel_transform(shift(s9, 1))
        assert len(g) == 9
        for n in range(9):
            assert g[n] == h[n // 2] * (1 if n == 0 else hstar[(n - 1) // 2])
        s17 = s[:17]
        h = hankel_transform(s17)
        for r in (2, -1, F(1, 2), F(-3, 2)):
            hs = hankel_transform(scale_pointwise(s17, r))
            assert all(hs[n] == F(r) ** (n * (n + 1)) * h[n] for n in range(9))


@criterion(8, 10, "alpha-aerated determinant factors, both parities")
def test_criterion_08_split():
    seqs = [catalan_seq(11), catalan_seq(11, 2), catalan_seq(11, -1)] + [s[:11] for s in CORPUS]
    alphas = list(dict.fromkeys(p.alpha for p in GRID))
    for s in seqs:
        for alpha in alphas:
            for n in range(10):
                left, right = cf.thm61_split(s, alpha, n)
                assert left == right


@criterion(9, 10, "Catalan Hankel-like product formula and chi-shifted closed forms")
def test_criterion_09_hankel_like():
    cat = catalan_seq(16)
    for k in range(1, 5):
        for rows in combinations(range(8), k):
            assert cf.krattenthaler_det(rows) == hankel_like_det(cat, rows, k)
    assert cf.krattenthaler_det((1, 1)) == hankel_like_det(cat, (1, 1), 2) == 0
    for beta in (1, 2, -1, F(1, 2)):
        c = catalan_seq(16, beta)
        for k in range(1, 7):
            for l in range(k):
                assert cf.chi_shifted_det(c, k, l, 1) == cf.lemma72_closed(beta, k, l)
                assert cf.chi_shifted_det(c, k, l, 0) == cf.lemma73_closed(beta, k, l)


@criterion(10, 2, "z-sequence recurrence and Lucas identification")
def test_criterion_10_z():
    for p in GRID:
        z = {n: cf.z_eval(p, n) for n in range(1, 11)}
        for n in range(1, 9):
            assert z[n + 2] - p.alpha * z[n + 1] + p.beta * z[n] == 0
        assert all(z[n] == -cf.lucas_u(p, n) for n in z)


def _cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


@criterion(11, 60, "CLI: default-grid verify, b-file round trip, byte-identical reruns")
def test_criterion_11_cli(monkeypatch):
    monkeypatch.delenv("HANKELTX_FORMAT", raising=False)
    code, report = _cli("verify", "--default-grid")
    assert code == 0
    lines = report.splitlines()
    assert lines[0] == "identity_id,status,points_tested,failures"
    assert len(lines) == 18 and all(",PASS," in line for line in lines[1:])

    rng = random.Random(2024)
    for i in range(100):
        p = Params(F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4)))
        code, text = _cli("gen", f"--alpha={p.alpha}", f"--beta={p.beta}", "--len", str(rng.randint(1, 20)))
        assert code == 0
        s = parse_bfile(text)
        assert emit(s, "bfile") == text
        assert s == u_sequence(p, len(s))

    assert _cli("verify", "--default-grid", "--seed", "5", "--format", "json") == \
        _cli("verify", "--default-grid", "--seed", "5", "--format", "json")
    assert _cli("gen", "--alpha", "3", "--beta", "2", "--len", "12") == \
        _cli("gen", "--alpha", "3", "--beta", "2", "--len", "12")
