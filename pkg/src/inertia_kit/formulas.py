"""Closed-form inertia sets for named graph families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import InertiaSet, Trapezoid, add, cap, union
from .errors import InvalidSpec, Unsupported
from . import graphs as gr

__all__ = [
    "FormulaResult",
    "inertia_path",
    "inertia_cycle",
    "inertia_disjoint_paths",
    "inertia_generalized_star",
    "inertia_bouquet",
    "inertia_supernova",
    "inertia_pulsar",
    "inertia_binary_star",
    "inertia_complete_bipartite",
    "inertia_bipartite_join",
    "inertia_formula",
    "ONE_ONE",
]

# T^1_[2,2] = {(1, 1)}, the correction term of the cut-vertex rule.
ONE_ONE = InertiaSet([(1, 1)])


def _t(inset: int, lo: int, hi: int) -> InertiaSet:
    """Expand ``T^inset_[lo,hi]``, treating a negative ``lo`` as 0."""
    if hi < 0:
        return InertiaSet()
    return InertiaSet(Trapezoid(inset, max(lo, 0), hi))


def _terms(*terms) -> InertiaSet:
    return union(*(_t(*t) for t in terms))


@dataclass(frozen=True)
class FormulaResult:
    set: InertiaSet
    provenance: str
    parameters: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"provenance": self.provenance, "parameters": dict(self.parameters),
                **self.set.to_dict()}


def inertia_path(n: int) -> InertiaSet:
    if n < 1:
        raise InvalidSpec("path needs n >= 1")
    return _t(0, n - 1, n)


def inertia_cycle(n: int) -> InertiaSet:
    if n < 3:
        raise InvalidSpec("cycle needs n >= 3")
    return _t(0, n - 2, n)


def inertia_disjoint_paths(n: int, k: int) -> InertiaSet:
    if not 1 <= k <= n:
        raise InvalidSpec(f"need 1 <= k <= n, got n={n}, k={k}")
    return _t(0, n - k, n)


def inertia_generalized_star(n: int, p: int) -> InertiaSet:
    if p < 1 or n < p + 1:
        raise InvalidSpec(f"generalized star needs p >= 1 and n >= p + 1, got n={n}, p={p}")
    return _terms((0, n - 1, n), (1, n - p + 1, n))


def inertia_bouquet(n: int, k: int) -> InertiaSet:
    if k < 1 or n < 2 * k + 1:
        raise InvalidSpec(f"bouquet needs k >= 1 and n >= 2k + 1, got n={n}, k={k}")
    return _t(0, n - k - 1, n)


def inertia_supernova(n: int, alpha: int, beta: int) -> InertiaSet:
    """Bouquet of ``alpha`` cycles and ``beta`` pendant paths at one centre."""
    if alpha < 1 or beta < 1 or n < 2 * alpha + beta + 1:
        raise InvalidSpec(
            f"supernova needs alpha, beta >= 1 and n >= 2*alpha + beta + 1, got "
            f"n={n}, alpha={alpha}, beta={beta}"
        )
    return _terms((0, n - alpha - 1, n), (1, n - alpha - beta + 1, n))


def inertia_pulsar(n: int, alpha1: int, beta1: int, alpha2: int, beta2: int) -> InertiaSet:
    if min(alpha1, beta1, alpha2, beta2) < 0:
        raise InvalidSpec("pulsar counts must be nonnegative")
    if n < 2 * (alpha1 + alpha2) + beta1 + beta2 + 4:
        raise InvalidSpec(f"no pulsar on {n} vertices has these cycle and path counts")
    a = alpha1 + alpha2
    return _terms(
        (0, n - a - 2, n),
        (1, n - a - beta1, n),
        (1, n - a - beta2, n),
        (2, n - a - beta1 - beta2, n),
    )


def inertia_binary_star(n: int, alpha: int, beta: int, delta_cycles: int, gamma: int,
                        w: int, corrected: bool = False) -> InertiaSet:
    """``gamma`` counts the pendant paths of the second supernova, bridge included.

    The default is the published four-term statement.  It misses points once
    the first supernova has two or more pendant paths; ``corrected=True`` adds
    the term ``T^1_[n-alpha-beta-delta, n]`` that the cut-vertex recursion
    produces in that case (see the notes in the README).
    """
    if w < 2:
        raise InvalidSpec("binary star needs w >= 2")
    if min(alpha, beta, delta_cycles) < 0 or gamma < 1:
        raise InvalidSpec("binary star needs nonnegative counts and gamma >= 1")
    if n < 2 * (alpha + delta_cycles) + beta + gamma + w - 1:
        raise InvalidSpec(f"no binary star on {n} vertices has these parameters")
    a, d = alpha, delta_cycles
    last = 3 if w == 2 else 2
    result = _terms(
        (0, n - a - d - 1, n),
        (1, n - a - gamma - d + 1, n),
        (1, n - a - beta - d + 1, n),
        (2, n - a - beta - gamma - d + last, n),
    )
    if corrected:
        result = result | _t(1, n - a - beta - d, n)
    return result


def inertia_complete_bipartite(a: int, b: int) -> InertiaSet:
    if a < 1 or a > b:
        raise InvalidSpec(f"complete bipartite needs 1 <= a <= b, got a={a}, b={b}")
    return _terms((0, b, a + b), (1, 2, b - 1))


def _bipartite_any(a: int, b: int) -> InertiaSet:
    """``K_{a,b}`` for any part sizes; an empty part leaves isolated vertices."""
    a, b = sorted((a, b))
    if a == 0:
        return _t(0, 0, b)
    return inertia_complete_bipartite(a, b)


def inertia_bipartite_join(a: int, b: int, c: int, d: int, case: str) -> InertiaSet:
    if min(a, b, c, d) < 1:
        raise InvalidSpec("bipartite join parts must be nonempty")
    if case not in gr.BIPARTITE_CASES:
        raise InvalidSpec(f"case must be one of {gr.BIPARTITE_CASES}, got {case!r}")
    n = a + b + c + d - 1
    a2, b2 = (a - 1, b) if case[0] == "A" else (a, b - 1)
    c2, d2 = (c - 1, d) if case[1] == "C" else (c, d - 1)
    whole = cap(add(_bipartite_any(a, b), _bipartite_any(c, d)), n)
    split = cap(add(_bipartite_any(a2, b2), _bipartite_any(c2, d2), ONE_ONE), n)
    return whole | split


def _nova_counts(s: gr.Supernova) -> tuple[int, int, int]:
    n = 1 + sum(c - 1 for c in s.cycle_sizes) + sum(s.arm_sizes)
    return n, len(s.cycle_sizes), len(s.arm_sizes)


def _nova_set(s: gr.Supernova) -> FormulaResult:
    n, alpha, beta = _nova_counts(s)
    if alpha and beta:
        return FormulaResult(inertia_supernova(n, alpha, beta), "supernova",
                             {"n": n, "alpha": alpha, "beta": beta})
    if alpha:
        return FormulaResult(inertia_bouquet(n, alpha), "bouquet", {"n": n, "k": alpha})
    if beta:
        return FormulaResult(inertia_generalized_star(n, beta), "generalized_star",
                             {"n": n, "p": beta})
    return FormulaResult(inertia_path(1), "path", {"n": 1})


def inertia_formula(spec: gr.FamilySpec, corrected: bool = False) -> FormulaResult:
    """Dispatch a family spec to its closed form.

    ``corrected`` only affects binary stars (see :func:`inertia_binary_star`).
    """
    g = gr.build(spec)  # validates the spec
    n = g.order
    if isinstance(spec, gr.Path):
        return FormulaResult(inertia_path(n), "path", {"n": n})
    if isinstance(spec, gr.Cycle):
        return FormulaResult(inertia_cycle(n), "cycle", {"n": n})
    if isinstance(spec, gr.DisjointPaths):
        k = len(spec.sizes)
        return FormulaResult(inertia_disjoint_paths(n, k), "disjoint_paths", {"n": n, "k": k})
    if isinstance(spec, gr.GeneralizedStar):
        p = len(spec.arm_sizes)
        return FormulaResult(inertia_generalized_star(n, p), "generalized_star", {"n": n, "p": p})
    if isinstance(spec, gr.Bouquet):
        k = len(spec.cycle_sizes)
        return FormulaResult(inertia_bouquet(n, k), "bouquet", {"n": n, "k": k})
    if isinstance(spec, gr.Supernova):
        return _nova_set(spec)
    if isinstance(spec, gr.Pulsar):
        _, a1, b1 = _nova_counts(spec.s1)
        _, a2, b2 = _nova_counts(spec.s2)
        params = {"n": n, "alpha1": a1, "beta1": b1, "alpha2": a2, "beta2": b2}
        return FormulaResult(inertia_pulsar(n, a1, b1, a2, b2), "pulsar", params)
    if isinstance(spec, gr.BinaryStar):
        _, a, b = _nova_counts(spec.s1)
        _, d, g2 = _nova_counts(spec.s2)
        params = {"n": n, "alpha": a, "beta": b, "delta_cycles": d, "gamma": g2 + 1, "w": spec.w}
        s = inertia_binary_star(n, a, b, d, g2 + 1, spec.w, corrected=corrected)
        tag = f"binary_star_w{'2' if spec.w == 2 else 'gt2'}" + ("_corrected" if corrected else "")
        return FormulaResult(s, tag, params)
    if isinstance(spec, gr.CompleteBipartite):
        a, b = sorted((spec.a, spec.b))
        return FormulaResult(inertia_complete_bipartite(a, b), "complete_bipartite",
                             {"n": n, "a": a, "b": b})
    if isinstance(spec, gr.BipartiteJoin):
        s = inertia_bipartite_join(spec.a, spec.b, spec.c, spec.d, spec.case)
        return FormulaResult(s, "bipartite_join", {"n": n, "a": spec.a, "b": spec.b,
                                                   "c": spec.c, "d": spec.d, "case": spec.case})
    if isinstance(spec, gr.DisjointUnion):
        parts = [inertia_formula(s, corrected) for s in spec.specs]
        return FormulaResult(add(*(p.set for p in parts)), "disjoint_union",
                             {"n": n, "parts": [p.provenance for p in parts]})
    if isinstance(spec, gr.Join):
        raise Unsupported("no closed form for an arbitrary join; use the recursion engine")
    raise Unsupported(f"no closed form for {type(spec).__name__}")
