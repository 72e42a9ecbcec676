"""Point-set algebra for inertia tables.

An inertia table is a finite set of partial inertias ``(pos, neg)``.  The
compact ``T^k_[m,n]`` notation describes the lattice points with both
coordinates at least ``k`` and coordinate sum between ``m`` and ``n``.
Point sets are the canonical representation here; trapezoid lists are only
a view produced by :func:`decompose`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import EmptySet, NotRepresentable

__all__ = [
    "InertiaPoint",
    "Trapezoid",
    "InertiaSet",
    "T",
    "expand",
    "union",
    "add",
    "cap",
    "decompose",
    "trapezoid_add_formula",
    "min_rank",
    "min_rank_line",
    "is_trapezoidal",
    "minkowski",
]


class InertiaPoint(NamedTuple):
    """Partial inertia of a symmetric matrix: positive and negative counts."""

    pos: int
    neg: int

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    def swapped(self) -> "InertiaPoint":
        return InertiaPoint(self.neg, self.pos)


def _point(p) -> InertiaPoint:
    pos, neg = p
    pos, neg = int(pos), int(neg)
    if pos < 0 or neg < 0:
        raise ValueError(f"inertia counts must be nonnegative, got {(pos, neg)}")
    return InertiaPoint(pos, neg)


@dataclass(frozen=True, order=True)
class Trapezoid:
    """The region ``T^inset_[lo, hi]``.

    Emptiness (``lo > hi`` or ``hi < 2 * inset``) is a property, not an error.
    """

    inset: int
    lo: int
    hi: int

    def __post_init__(self):
        for name in ("inset", "lo", "hi"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"Trapezoid.{name} must be a nonnegative int, got {value!r}")

    @property
    def is_empty(self) -> bool:
        return self.hi < 2 * self.inset or self.lo > self.hi

    def points(self) -> frozenset[InertiaPoint]:
        return expand(self)

    def normalized(self) -> "Trapezoid":
        """Same region with ``lo`` raised to the first nonempty rank."""
        return Trapezoid(self.inset, max(self.lo, 2 * self.inset), self.hi)

    def __str__(self) -> str:
        head = "T" if self.inset == 0 else f"T^{self.inset}"
        return f"{head}_[{self.lo},{self.hi}]"


def T(lo: int, hi: int, inset: int = 0) -> Trapezoid:
    """Shorthand constructor mirroring the written notation."""
    return Trapezoid(inset, lo, hi)


def expand(t: Trapezoid) -> frozenset[InertiaPoint]:
    k = t.inset
    pts = []
    for r in range(max(t.lo, 2 * k), t.hi + 1):
        for p in range(k, r - k + 1):
            pts.append(InertiaPoint(p, r - p))
    return frozenset(pts)


def minkowski(a: Iterable, b: Iterable) -> frozenset[InertiaPoint]:
    """Brute-force pointwise sum of two point collections."""
    b = list(b)
    return frozenset(InertiaPoint(p1 + p2, q1 + q2) for p1, q1 in a for p2, q2 in b)


def trapezoid_add_formula(a: Trapezoid, b: Trapezoid) -> Trapezoid:
    if a.is_empty or b.is_empty:
        raise ValueError("trapezoid_add_formula needs nonempty operands")
    a, b = a.normalized(), b.normalized()
    return Trapezoid(a.inset + b.inset, a.lo + b.lo, a.hi + b.hi)


def _full_row(points: frozenset, k: int, r: int) -> bool:
    return all(InertiaPoint(p, r - p) in points for p in range(k, r - k + 1))


def _maximal_trapezoids(points: frozenset[InertiaPoint]) -> list[Trapezoid]:
    """All inclusion-maximal nonempty trapezoids contained in ``points``."""
    if not points:
        return []
    top = max(p.rank for p in points)
    kmax = max(min(p) for p in points)
    found = []
    for k in range(kmax + 1):
        r = 2 * k
        while r <= top:
            if not _full_row(points, k, r):
                r += 1
                continue
            start = r
            while r + 1 <= top and _full_row(points, k, r + 1):
                r += 1
            found.append(Trapezoid(k, start, r))
            r += 1
    expanded = {t: expand(t) for t in found}
    return [
        t
        for t in found
        if not any(o != t and expanded[t] < expanded[o] for o in found)
    ]


# Exact minimum cover is attempted only below this many candidates.
_EXACT_COVER_LIMIT = 18


def decompose(points: Iterable) -> list[Trapezoid]:
    """Canonical trapezoid list whose expansions union to ``points``.

    Uses inclusion-maximal trapezoids only, so every term of a northeast
    closed table reaches the table's top rank.  Among those, picks a
    smallest cover, breaking ties by the ordering (inset, lo, -hi).
    Raises :class:`NotRepresentable` when some point lies in no contained
    trapezoid (asymmetric sets, isolated bumps off the diagonal, ...).
    """
    pts = frozenset(_point(p) for p in points)
    if not pts:
        return []
    cands = sorted(_maximal_trapezoids(pts), key=lambda t: (t.inset, t.lo, -t.hi))
    covered = frozenset().union(*(expand(t) for t in cands)) if cands else frozenset()
    missing = pts - covered
    if missing:
        raise NotRepresentable(
            f"points {sorted(missing)} are not inside any trapezoid contained in the set"
        )
    sets = [expand(t) for t in cands]
    if len(cands) <= _EXACT_COVER_LIMIT:
        for size in range(1, len(cands) + 1):
            for combo in combinations(range(len(cands)), size):
                if frozenset().union(*(sets[i] for i in combo)) == pts:
                    return [cands[i] for i in combo]
    # Greedy fallback, then drop terms the others already cover.
    chosen, seen = [], set()
    for i, s in enumerate(sets):
        if not s <= seen:
            chosen.append(i)
            seen |= s
    for i in list(chosen):
        rest = [j for j in chosen if j != i]
        if frozenset().union(*(sets[j] for j in rest)) == pts:
            chosen = rest
    return [cands[i] for i in chosen]


class InertiaSet:
    """Immutable finite set of inertia points.

    Equality and hashing use the point set only; the trapezoid
    decomposition is derived lazily.
    """

    def __init__(self, points: Iterable = ()):
        if isinstance(points, Trapezoid):
            points = expand(points)
        object.__setattr__(self, "points", frozenset(_point(p) for p in points))

    def __setattr__(self, name, value):
        if name == "points":
            raise AttributeError("InertiaSet is immutable")
        object.__setattr__(self, name, value)

    @classmethod
    def from_trapezoids(cls, *terms: Trapezoid) -> "InertiaSet":
        out = set()
        for t in terms:
            out |= expand(t)
        return cls(out)

    @classmethod
    def empty(cls) -> "InertiaSet":
        return cls()

    @classmethod
    def zero(cls) -> "InertiaSet":
        """Additive identity ``T_[0,0]``."""
        return cls([(0, 0)])

    @cached_property
    def decomposition(self) -> list[Trapezoid]:
        return decompose(self.points)

    def __eq__(self, other):
        if isinstance(other, InertiaSet):
            return self.points == other.points
        if isinstance(other, (set, frozenset)):
            return self.points == frozenset(_point(p) for p in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def __contains__(self, p):
        return tuple(p) in self.points

    def __bool__(self):
        return bool(self.points)

    def __le__(self, other: "InertiaSet") -> bool:
        return self.points <= other.points

    def __or__(self, other: "InertiaSet") -> "InertiaSet":
        return union(self, other)

    def __add__(self, other: "InertiaSet") -> "InertiaSet":
        return add(self, other)

    def __repr__(self):
        try:
            text = " U ".join(str(t) for t in self.decomposition) or "EMPTY"
        except NotRepresentable:
            text = "{" + ", ".join(f"({p},{q})" for p, q in self) + "}"
        return f"InertiaSet({text})"

    @property
    def max_rank(self) -> int:
        if not self.points:
            raise EmptySet("max_rank of an empty inertia set")
        return max(p.rank for p in self.points)

    def swapped(self) -> "InertiaSet":
        return InertiaSet(p.swapped() for p in self.points)

    def is_swap_closed(self) -> bool:
        return all(p.swapped() in self.points for p in self.points)

    def is_northeast_closed(self, n: int) -> bool:
        """Every point with rank below ``n`` has both upper neighbours."""
        for p, q in self.points:
            if p + q < n and (
                InertiaPoint(p + 1, q) not in self.points
                or InertiaPoint(p, q + 1) not in self.points
            ):
                return False
        return True

    def sorted_points(self) -> list[tuple[int, int]]:
        return [tuple(p) for p in sorted(self.points)]

    def to_dict(self) -> dict:
        """``decomposition`` is ``None`` for sets with no trapezoid cover."""
        try:
            terms = [{"k": t.inset, "m": t.lo, "n": t.hi} for t in self.decomposition]
        except NotRepresentable:
            terms = None
        return {"points": [list(p) for p in self.sorted_points()], "decomposition": terms}


def _as_set(a) -> InertiaSet:
    if isinstance(a, InertiaSet):
        return a
    if isinstance(a, Trapezoid):
        return InertiaSet(expand(a))
    return InertiaSet(a)


def union(*sets) -> InertiaSet:
    out = frozenset()
    for s in sets:
        out = out | _as_set(s).points
    return InertiaSet(out)


def add(*sets) -> InertiaSet:
    """Minkowski sum; the empty sum is ``{(0, 0)}`` and any empty operand gives the empty set."""
    acc = frozenset([InertiaPoint(0, 0)])
    for s in sets:
        acc = minkowski(acc, _as_set(s).points)
        if not acc:
            break
    return InertiaSet(acc)


def cap(a, n: int) -> InertiaSet:
    if n < 0:
        raise ValueError("cap needs n >= 0")
    return InertiaSet(p for p in _as_set(a).points if p.rank <= n)


def min_rank(a) -> int:
    a = _as_set(a)
    if not a.points:
        raise EmptySet("minimum rank of an empty inertia set")
    return min(p.rank for p in a.points)


def min_rank_line(a) -> frozenset[InertiaPoint]:
    m = min_rank(a)
    return frozenset(p for p in _as_set(a).points if p.rank == m)


def is_trapezoidal(a) -> bool:
    a = _as_set(a)
    if not a.points:
        return False
    lo = min(p.rank for p in a.points)
    return a.points == expand(Trapezoid(0, lo, a.max_rank))
