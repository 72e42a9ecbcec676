"""Text form of inertia sets: ``T^k_[m,n] U T_[m,n] ...`` or ``EMPTY``."""

from __future__ import annotations

import json
import re

from .algebra import InertiaSet, Trapezoid, decompose
from .errors import ParseError

__all__ = ["parse_t_notation", "parse_terms", "format_t_notation", "to_json", "from_json"]

_TERM = re.compile(r"T(?:\^(\d+))?_\[(\d+),(\d+)\]")
_SEP_RE = re.compile(r"\s*U\s*")
_SEP = " U "


def parse_terms(text: str) -> list[Trapezoid]:
    """Parse into the literal list of terms, keeping empty ones.

    Columns in errors are 1-based positions in ``text``.
    """
    if text.strip() == "EMPTY":
        return []
    pos = len(text) - len(text.lstrip())
    end = len(text.rstrip())
    if pos == end:
        raise ParseError("empty input", 1, 1, "a term or EMPTY")
    terms = []
    while True:
        m = _TERM.match(text, pos)
        if m is None or m.end() > end:
            what = text[pos:pos + 12] or "end of input"
            raise ParseError(f"bad term at {what!r}", 1, pos + 1, "T[^k]_[m,n]")
        k, lo, hi = m.group(1), m.group(2), m.group(3)
        terms.append(Trapezoid(int(k) if k is not None else 0, int(lo), int(hi)))
        pos = m.end()
        if pos == end:
            return terms
        sep = _SEP_RE.match(text, pos)
        if sep is None or sep.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected {text[bad]!r}", 1, bad + 1, repr(_SEP))
        pos = sep.end()


def parse_t_notation(text: str) -> InertiaSet:
    return InertiaSet.from_trapezoids(*parse_terms(text))


def format_terms(terms) -> str:
    terms = [t for t in terms if not t.is_empty]
    return _SEP.join(str(t) for t in terms) if terms else "EMPTY"


def format_t_notation(a) -> str:
    """Canonical text of a set, via :func:`decompose`."""
    points = a.points if isinstance(a, InertiaSet) else a
    return format_terms(decompose(points))


def to_json(a: InertiaSet, **kwargs) -> str:
    return json.dumps(a.to_dict(), **kwargs)


def from_json(text: str) -> InertiaSet:
    data = json.loads(text)
    return InertiaSet(tuple(p) for p in data["points"])
