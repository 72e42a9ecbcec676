"""Brute-force realizations: certify which inertia points a graph attains.

The oracle only ever proves membership.  A point that no grid matrix hits
is reported as missing, never as impossible.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Optional, Sequence

import numpy as np
from numba import njit

from .algebra import InertiaPoint, InertiaSet
from .errors import NonSymmetric, PatternViolation, TooLarge
from .graphs import Graph

__all__ = [
    "Realization",
    "MatrixInertia",
    "AttainedReport",
    "RealizationSample",
    "jacobi_eigenvalues",
    "matrix_inertia",
    "batch_inertia",
    "exact_rank",
    "enumerate_realizations",
    "verify_containment",
    "witness_minrank_path",
    "witness_max_rank",
    "DEFAULT_OFFDIAG",
    "DEFAULT_DIAG",
    "DEFAULT_BUDGET",
    "DEFAULT_TOL",
    "DEFAULT_ORDER_CAP",
    "HARD_ORDER_CAP",
]

DEFAULT_OFFDIAG = (-2.0, -1.0, 1.0, 2.0)
DEFAULT_DIAG = (-2.0, -1.0, 0.0, 1.0, 2.0)
DEFAULT_BUDGET = 2_000_000
DEFAULT_TOL = 1e-9
DEFAULT_ORDER_CAP = 7
HARD_ORDER_CAP = 10
DEFAULT_SEED = 20130702
_CHUNK = 1 << 16


@dataclass(frozen=True)
class Realization:
    """A symmetric matrix whose off-diagonal support is the edge set of ``graph``."""

    graph: Graph
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=float)
        object.__setattr__(self, "entries", a)
        n = self.graph.order
        if a.shape != (n, n):
            raise PatternViolation(f"matrix shape {a.shape} does not match order {n}")
        if not np.array_equal(a, a.T):
            raise NonSymmetric("realization matrix must be symmetric")
        for i in range(n):
            for j in range(i + 1, n):
                if (a[i, j] != 0) != self.graph.has_edge(i, j):
                    raise PatternViolation(f"entry ({i},{j}) breaks the zero pattern")

    @property
    def order(self) -> int:
        return self.graph.order

    def to_list(self) -> list[list[float]]:
        return self.entries.tolist()


@dataclass(frozen=True)
class MatrixInertia:
    pos: int
    neg: int
    zero: int
    tolerance_used: float

    @property
    def point(self) -> InertiaPoint:
        return InertiaPoint(self.pos, self.neg)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.pos, self.neg, self.zero)


def jacobi_eigenvalues(a, tol: float = 1e-14, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = np.abs(a).max() or 1.0
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a))


def _counts(w: np.ndarray, tol: float) -> tuple[int, int, int]:
    thresh = tol * max(1.0, float(np.abs(w).max()) if w.size else 1.0)
    pos = int(np.sum(w > thresh))
    neg = int(np.sum(w < -thresh))
    return pos, neg, w.size - pos - neg


def matrix_inertia(r, tol: float = DEFAULT_TOL) -> MatrixInertia:
    """Sign counts of the eigenvalues of a realization (or a bare matrix).

    An eigenvalue is zero when ``|lambda| <= tol * max(1, max |lambda|)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = r.entries if isinstance(r, Realization) else np.asarray(r, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetric("matrix must be square")
    if not np.allclose(a, a.T, rtol=0, atol=0):
        raise NonSymmetric("matrix must be symmetric")
    pos, neg, zero = _counts(jacobi_eigenvalues(a), tol)
    return MatrixInertia(pos, neg, zero, tol)


def batch_inertia(mats: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``(pos, neg)`` counts for a stack of symmetric matrices."""
    w = np.linalg.eigvalsh(mats)
    thresh = tol * np.maximum(1.0, np.abs(w).max(axis=-1, initial=0.0))[..., None]
    return (w > thresh).sum(axis=-1), (w < -thresh).sum(axis=-1)


def exact_rank(m) -> int:
    """Rank by fraction-free (Bareiss) elimination; exact for integer or rational input."""
    rows = [[Fraction(x) for x in row] for row in np.asarray(m).tolist()]
    scale = lcm(*(x.denominator for row in rows for x in row)) if rows and rows[0] else 1
    a = [[int(x * scale) for x in row] for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, nrows):
            for j in range(col + 1, ncols):
                q, rem = divmod(a[rank][col] * a[i][j] - a[i][col] * a[rank][j], prev)
                assert rem == 0, "Bareiss step must divide exactly"
                a[i][j] = q
            a[i][col] = 0
        prev = a[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


@njit(cache=True)
def _charpoly_sign_counts(coords, eu, ev, offv, diagv, n, negate):  # pragma: no cover - jitted
    """Exact ``(pos, neg, zero)`` for integer grid matrices.

    Power sums ``tr(A^k)`` come from powers up to ``A^ceil(n/2)``; Newton's
    identities turn them into characteristic polynomial coefficients.  All
    roots are real, so Descartes' sign rule on ``p(x)`` and ``p(-x)``
    counts positive and negative eigenvalues exactly.
    """
    N = coords.shape[0]
    m = eu.shape[0]
    h = (n + 1) // 2
    out = np.zeros((N, 3), np.int64)
    pw = np.zeros((h + 1, n, n), np.int64)
    d = np.zeros(n, np.int64)
    w = np.zeros(m, np.int64)
    c = np.zeros(n + 1, np.int64)
    p = np.zeros(n + 1, np.int64)
    sign = -1 if negate else 1
    for t in range(N):
        for i in range(n):
            d[i] = sign * diagv[coords[t, m + i]]
        for e in range(m):
            w[e] = sign * offv[coords[t, e]]
        a1 = pw[1]
        for i in range(n):
            for j in range(n):
                a1[i, j] = 0
            a1[i, i] = d[i]
        for e in range(m):
            a1[eu[e], ev[e]] = w[e]
            a1[ev[e], eu[e]] = w[e]
        for k in range(2, h + 1):
            q = pw[k]
            r = pw[k - 1]
            for i in range(n):
                for j in range(n):
                    q[i, j] = d[i] * r[i, j]
            for e in range(m):
                a, b, x = eu[e], ev[e], w[e]
                for j in range(n):
                    q[a, j] += x * r[b, j]
                    q[b, j] += x * r[a, j]
        acc = 0
        for i in range(n):
            acc += d[i]
        p[1] = acc
        for k in range(2, n + 1):
            x_ = pw[k // 2]
            y_ = pw[k - k // 2]
            acc = 0
            for a in range(n):
                for b in range(n):
                    acc += x_[a, b] * y_[a, b]
            p[k] = acc
        c[0] = 1
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                acc += c[k - j] * p[j]
            c[k] = -acc // k
        zero = 0
        k = n
        while k > 0 and c[k] == 0:
            zero += 1
            k -= 1
        pos = 0
        neg = 0
        last = 1
        lastn = 1
        for k in range(1, n + 1):
            if c[k] != 0:
                sg = 1 if c[k] > 0 else -1
                if sg != last:
                    pos += 1
                last = sg
                sgn = sg if k % 2 == 0 else -sg
                if sgn != lastn:
                    neg += 1
                lastn = sgn
        out[t, 0] = pos
        out[t, 1] = neg
        out[t, 2] = zero
    return out


def _exact_route_ok(n: int, m_max_degree: int, off: np.ndarray, dg: np.ndarray) -> bool:
    """Integer grids whose characteristic polynomial arithmetic fits in int64."""
    vals = np.concatenate([off, dg])
    if not np.all(vals == np.round(vals)) or n == 0:
        return False
    row = float(np.abs(dg).max() + m_max_degree * np.abs(off).max())
    return n * n * (2.0 ** n) * max(row, 1.0) ** n < 2.0 ** 60


@dataclass
class RealizationSample:
    """What one grid scan found."""

    graph: Graph
    attained: InertiaSet
    witnesses: dict
    tested: int
    grid_size: int
    exhaustive: bool
    seed: Optional[int]
    offdiag: tuple
    diag: tuple
    tol: float
    method: str = "eigh"
    invariant_checks: int = 0


@dataclass
class AttainedReport:
    attained: InertiaSet
    predicted: InertiaSet
    containment_ok: bool
    violations: list
    missing_predicted: list
    witnesses: dict = field(default_factory=dict)
    sample: Optional[RealizationSample] = None

    def to_dict(self) -> dict:
        s = self.sample
        out = {
            "graph": None,
            "grid": None,
            "seed": None,
            "attained": [list(p) for p in self.attained.sorted_points()],
            "containment_ok": self.containment_ok,
            "violations": [list(p) for p in self.violations],
            "missing_predicted": [list(p) for p in self.missing_predicted],
        }
        if s is not None:
            out["graph"] = {"order": s.graph.order, "edges": [list(e) for e in s.graph.sorted_edges()]}
            out["grid"] = {"offdiag": list(s.offdiag), "diag": list(s.diag), "tested": s.tested,
                           "grid_size": s.grid_size, "exhaustive": s.exhaustive, "tol": s.tol,
                           "method": s.method}
            out["seed"] = s.seed
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _fill(graph: Graph, edges, off, diag, coords: np.ndarray) -> np.ndarray:
    n, m = graph.order, len(edges)
    mats = np.zeros((coords.shape[0], n, n))
    idx = np.arange(n)
    mats[:, idx, idx] = diag[coords[:, m:]]
    for e, (u, v) in enumerate(edges):
        vals = off[coords[:, e]]
        mats[:, u, v] = vals
        mats[:, v, u] = vals
    return mats


def enumerate_realizations(
    g: Graph,
    offdiag: Sequence[float] = DEFAULT_OFFDIAG,
    diag: Sequence[float] = DEFAULT_DIAG,
    budget: int = DEFAULT_BUDGET,
    seed: Optional[int] = None,
    tol: float = DEFAULT_TOL,
    order_cap: int = DEFAULT_ORDER_CAP,
    check_invariants: bool = False,
    method: str = "auto",
    n_jobs: int = 1,
) -> RealizationSample:
    """Scan the value grid exhaustively when it fits ``budget``, else sample it.

    ``method`` picks the sign counter: ``"exact"`` (integer grids only),
    ``"eigh"`` (floating point, threshold ``tol``) or ``"auto"``.
    With ``check_invariants`` every matrix is also negated and must give
    swapped counts, and ``pos + neg + zero`` must equal the order.
    """
    if g.order > min(order_cap, HARD_ORDER_CAP):
        raise TooLarge(f"order {g.order} exceeds the cap {min(order_cap, HARD_ORDER_CAP)}")
    off = np.asarray(sorted(set(offdiag)), dtype=float)
    dg = np.asarray(sorted(set(diag)), dtype=float)
    if off.size == 0 or dg.size == 0:
        raise ValueError("value grids must be non-empty")
    if np.any(off == 0):
        raise PatternViolation("off-diagonal values must be non-zero")
    if seed is None:
        seed = int(os.environ.get("INERTIA_KIT_SEED", DEFAULT_SEED))
    n = g.order
    edges = g.sorted_edges()
    dims = np.array([off.size] * len(edges) + [dg.size] * n, dtype=np.int64)
    grid_size = prod(int(x) for x in dims)
    exhaustive = grid_size <= budget
    total = grid_size if exhaustive else budget
    exact_ok = _exact_route_ok(n, max(g.degrees(), default=0), off, dg)
    if method == "auto":
        method = "exact" if exact_ok else "eigh"
    elif method == "exact" and not exact_ok:
        raise ValueError("exact sign counting needs a small integer grid")
    elif method not in ("exact", "eigh"):
        raise ValueError(f"unknown method {method!r}")
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    off_i, dg_i = off.astype(np.int64), dg.astype(np.int64)

    def counts(coords, negate=False):
        if method == "exact":
            res = _charpoly_sign_counts(coords, eu, ev, off_i, dg_i, n, negate)
            return res[:, 0], res[:, 1], res[:, 2]
        mats = _fill(g, edges, off, dg, coords)
        pos, neg = batch_inertia(-mats if negate else mats, tol)
        return pos, neg, n - pos - neg

    def scan(chunk: int):
        start, stop = chunk * _CHUNK, min((chunk + 1) * _CHUNK, total)
        if dims.size == 0:
            coords = np.zeros((stop - start, 0), dtype=np.int64)
        elif exhaustive:
            coords = np.stack(np.unravel_index(np.arange(start, stop), dims), axis=1)
        else:
            # Per-chunk streams keep sampling independent of scheduling.
            rng = np.random.default_rng([seed, chunk])
            coords = rng.integers(0, dims, size=(stop - start, dims.size))
        if n == 0:
            pos = neg = zero = np.zeros(stop - start, dtype=np.int64)
        else:
            pos, neg, zero = counts(coords)
        checks = 0
        if check_invariants and n:
            assert np.all(pos + neg + zero == n), "sign counts do not add up to the order"
            npos, nneg, nzero = counts(coords, negate=True)
            assert np.array_equal(npos, neg) and np.array_equal(nneg, pos), "negation duality broken"
            assert np.array_equal(nzero, zero), "negation changed the nullity"
            checks = stop - start
        code = pos * (n + 1) + neg
        uniq, first = np.unique(code, return_index=True)
        found = {}
        for c, i in zip(uniq.tolist(), first.tolist()):
            found[InertiaPoint(c // (n + 1), c % (n + 1))] = _fill(g, edges, off, dg, coords[i:i + 1])[0]
        return found, checks

    chunks = range((total + _CHUNK - 1) // _CHUNK)
    if n_jobs > 1:
        with ThreadPoolExecutor(n_jobs) as pool:
            results = list(pool.map(scan, chunks))
    else:
        results = [scan(c) for c in chunks]

    witnesses, checks = {}, 0
    for found, c in results:
        checks += c
        for p, mat in found.items():
            witnesses.setdefault(p, mat)
    return RealizationSample(
        graph=g,
        attained=InertiaSet(witnesses),
        witnesses={p: Realization(g, m) for p, m in sorted(witnesses.items())},
        tested=total,
        grid_size=grid_size,
        exhaustive=exhaustive,
        seed=None if exhaustive else seed,
        offdiag=tuple(off.tolist()),
        diag=tuple(dg.tolist()),
        tol=0.0 if method == "exact" else tol,
        method=method,
        invariant_checks=checks,
    )


def verify_containment(attained, predicted, sample: Optional[RealizationSample] = None) -> AttainedReport:
    attained = attained if isinstance(attained, InertiaSet) else InertiaSet(attained)
    predicted = predicted if isinstance(predicted, InertiaSet) else InertiaSet(predicted)
    violations = sorted(attained.points - predicted.points)
    missing = sorted(predicted.points - attained.points)
    return AttainedReport(
        attained=attained,
        predicted=predicted,
        containment_ok=not violations,
        violations=violations,
        missing_predicted=missing,
        witnesses=dict(sample.witnesses) if sample else {},
        sample=sample,
    )


def witness_minrank_path(n: int) -> Realization:
    """Positive semidefinite rank ``n-1`` realization of the path on ``n`` vertices."""
    if n < 2:
        raise ValueError("path witness needs n >= 2")
    from .graphs import Path, build

    a = np.zeros((n, n))
    for i in range(n - 1):
        a[i, i] += 1.0
        a[i + 1, i + 1] += 1.0
        a[i, i + 1] = a[i + 1, i] = -1.0
    return Realization(build(Path(n)), a)


def witness_max_rank(g: Graph, sign: int = 1) -> Realization:
    """Strictly diagonally dominant realization: inertia ``(n, 0)`` (or ``(0, n)``)."""
    deg = g.degrees()
    a = np.diag([float(d + 1) for d in deg])
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return Realization(g, sign * a)
