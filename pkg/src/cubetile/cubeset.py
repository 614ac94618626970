"""Reading and writing the cubeset JSON interchange format.

A document looks like::

    {"dim": 2, "mode": "periodic", "period": [2, 2],
     "offsets": [["0", "0"], ["1", "1/2"]]}

Rationals are strings ``"p/q"`` (``"3"`` when the denominator is 1).
"""

from __future__ import annotations

import json
from typing import IO, Iterable, Iterator

from .exact import FINITE, PERIODIC, CubesetError, TranslateSet, format_rational, to_fraction


def to_dict(s: TranslateSet) -> dict:
    doc = {"dim": s.dim, "mode": s.mode}
    if s.is_periodic:
        doc["period"] = list(s.period)
    doc["offsets"] = [[format_rational(c) for c in p] for p in s.offsets]
    return doc


def from_dict(doc: dict) -> TranslateSet:
    try:
        dim = int(doc["dim"])
        mode = doc.get("mode", FINITE)
        raw = doc["offsets"]
    except (KeyError, TypeError) as exc:
        raise CubesetError(f"malformed cubeset document: {exc}") from None
    if isinstance(dim, bool) or dim < 1:
        raise CubesetError("dim must be a positive integer")
    try:
        offsets = [[_parse_rational(c) for c in p] for p in raw]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise CubesetError(f"bad rational in offsets: {exc}") from None
    for p in offsets:
        if len(p) != dim:
            raise CubesetError(f"offset of length {len(p)} in a {dim}-dimensional set")
    if mode == PERIODIC:
        period = doc.get("period")
        if not isinstance(period, list) or len(period) != dim:
            raise CubesetError("periodic sets need a period list of length dim")
        if any(not isinstance(n, int) or isinstance(n, bool) for n in period):
            raise CubesetError("periods must be integers")
        return TranslateSet.periodic(period, offsets)
    if mode == FINITE:
        return TranslateSet.finite(offsets, dim=dim)
    raise CubesetError(f"unknown mode {mode!r}")


def _parse_rational(value):
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"{value!r} is not an exact rational")
    if isinstance(value, str) and value.strip() != value:
        raise ValueError(f"{value!r} has surrounding whitespace")
    return to_fraction(value)


def dumps(s: TranslateSet) -> str:
    return json.dumps(to_dict(s), separators=(", ", ": "))


def loads(text: str) -> TranslateSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CubesetError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CubesetError("cubeset document must be a JSON object")
    return from_dict(doc)


def load(path) -> TranslateSet:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(s: TranslateSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(s) + "\n")


def write_lines(sets: Iterable[TranslateSet], fh: IO[str]) -> int:
    """Write one document per line; returns the number written."""
    n = 0
    for s in sets:
        fh.write(dumps(s) + "\n")
        n += 1
    return n


def read_lines(fh: IO[str]) -> Iterator[TranslateSet]:
    for line in fh:
        line = line.strip()
        if line:
            yield loads(line)
