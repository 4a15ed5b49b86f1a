"""OEIS b-file, CSV and JSON serialisation of sequences.

Values are written as exact ``p/q`` strings (``p`` when ``q == 1``), never as
decimals, so every format round-trips bit for bit.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from fractions import Fraction

from .errors import GapError, ParseError
from .seqcore import RatLike, Seq, as_seq

FORMATS = ("bfile", "csv", "json")


def parse_bfile(text: str | bytes) -> Seq:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    values = []
    start = None
    expected = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index = int(parts[0])
            value = Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if start is None:
            start = expected = index
        if index != expected:
            raise GapError(f"line {lineno}: index {index} follows {expected - 1}")
        values.append(value)
        expected += 1
    return Seq(tuple(values), f"start={start if start is not None else 0}")


def emit(s: Seq | Iterable[RatLike], fmt: str = "bfile") -> str:
    s = as_seq(s)
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in enumerate(s))
    if fmt == "csv":
        return "n,value\n" + "".join(f"{n},{v}\n" for n, v in enumerate(s))
    if fmt == "json":
        return json.dumps([{"n": n, "value": str(v)} for n, v in enumerate(s)], separators=(",", ":"))
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
