"""Append-only result store: one tab-separated record per line.

Fields: canonical graph6, n, m, ern, dern, adv_ern, adv_dern, witness,
elapsed milliseconds.  Indeterminate numbers are stored as "indet"; the
witness is a ";"-joined list of "mult x d x graph6" entries using the
'×' separator, which never occurs in graph6 text.  Scanning skips corrupt
lines with a warning count and deduplicates by certificate, last write
winning.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

from .decks import DaEcard

__all__ = [
    "ResultRecord",
    "format_record",
    "parse_record",
    "format_witness",
    "store_append",
    "store_scan",
    "default_store_path",
]

STORE_ENV = "RECONKIT_STORE"
_FIELDS = 9


def default_store_path() -> str:
    return os.environ.get(STORE_ENV, "reconkit-store.txt")


@dataclass(frozen=True)
class ResultRecord:
    g6: str
    n: int
    m: int
    ern: int | None
    dern: int | None
    adv_ern: int | None
    adv_dern: int | None
    witness: str
    elapsed_ms: int


def format_witness(witness) -> str:
    parts = []
    for key, mult in witness:
        if isinstance(key, DaEcard):
            parts.append(f"{mult}×{key.d}×{key.card.canon}")
        else:
            parts.append(f"{mult}×-×{key.canon}")
    return ";".join(parts) or "-"


def _num(value) -> str:
    return "indet" if value is None else str(value)


def _parse_num(text: str):
    if text == "indet":
        return None
    return int(text)


def format_record(rec: ResultRecord) -> str:
    return "\t".join(
        [
            rec.g6,
            str(rec.n),
            str(rec.m),
            _num(rec.ern),
            _num(rec.dern),
            _num(rec.adv_ern),
            _num(rec.adv_dern),
            rec.witness,
            str(rec.elapsed_ms),
        ]
    )


def parse_record(line: str) -> ResultRecord:
    parts = line.rstrip("\n").split("\t")
    if len(parts) != _FIELDS:
        raise ValueError(f"expected {_FIELDS} fields, got {len(parts)}")
    g6, n, m, ern, dern, adv_ern, adv_dern, witness, ms = parts
    return ResultRecord(
        g6=g6,
        n=int(n),
        m=int(m),
        ern=_parse_num(ern),
        dern=_parse_num(dern),
        adv_ern=_parse_num(adv_ern),
        adv_dern=_parse_num(adv_dern),
        witness=witness,
        elapsed_ms=int(ms),
    )


def store_append(path: str, rec: ResultRecord) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(format_record(rec) + "\n")


_FILTER_RE = re.compile(r"^\s*(\w+)\s*(>=|<=|!=|=|>|<)\s*(\S+)\s*$")
_FILTER_FIELDS = {"n", "m", "ern", "dern", "adv_ern", "adv_dern", "elapsed_ms"}


def parse_filter(expr: str):
    """Tiny filter language: '<field> <op> <value>', e.g. 'dern>=3'.

    Indeterminate values compare as +infinity, so 'dern>=3' also selects
    graphs whose full deck is blocked.
    """
    match = _FILTER_RE.match(expr)
    if not match or match.group(1) not in _FILTER_FIELDS:
        raise ValueError(f"bad filter {expr!r}; fields: {sorted(_FILTER_FIELDS)}")
    field, op, raw = match.groups()
    target = float(raw)

    def value(rec):
        v = getattr(rec, field)
        return float("inf") if v is None else float(v)

    ops = {
        ">=": lambda v: v >= target,
        "<=": lambda v: v <= target,
        "=": lambda v: v == target,
        "!=": lambda v: v != target,
        ">": lambda v: v > target,
        "<": lambda v: v < target,
    }
    return lambda rec: ops[op](value(rec))


def store_scan(path: str, filter_expr: str | None = None):
    """Records from the store, deduplicated by graph (last write wins).

    Returns (records, stats) where stats counts corrupt lines skipped and
    duplicate certificates flagged.
    """
    predicate = parse_filter(filter_expr) if filter_expr else None
    by_cert: dict = {}
    stats = {"corrupt": 0, "duplicates": 0}
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                try:
                    rec = parse_record(line)
                except (ValueError, IndexError):
                    stats["corrupt"] += 1
                    continue
                if rec.g6 in by_cert:
                    stats["duplicates"] += 1
                by_cert[rec.g6] = rec
    records = [r for r in by_cert.values() if predicate is None or predicate(r)]
    records.sort(key=lambda r: (r.n, r.m, r.g6))
    return records, stats
