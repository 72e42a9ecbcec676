"""Parameter sweeps over the named families used by the consistency checks."""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from typing import Iterator

from . import graphs as gr

__all__ = ["family_sweep", "nova_pool", "unique_by_isomorphism"]


def _multisets(values, max_count, min_count=1):
    for k in range(min_count, max_count + 1):
        yield from combinations_with_replacement(values, k)


def nova_pool() -> list[gr.Supernova]:
    """Small supernovas (possibly degenerate) used inside pulsars and binary stars."""
    cycles = [(), (3,), (4,), (3, 3)]
    arms = [(), (1,), (2,), (1, 1), (1, 2), (1, 1, 1)]
    return [gr.Supernova(c, a) for c in cycles for a in arms]


def family_sweep(max_order: int = 12) -> Iterator[gr.FamilySpec]:
    """Every spec of the standard sweep whose graph has at most ``max_order`` vertices.

    Bipartite joins with all part sizes up to 4 are always included.
    """
    def fits(spec):
        return gr.build(spec).order <= max_order

    for n in range(1, min(10, max_order) + 1):
        yield gr.Path(n)
    for n in range(3, min(10, max_order) + 1):
        yield gr.Cycle(n)
    for arms in _multisets((1, 2, 3), 4):
        spec = gr.GeneralizedStar(arms)
        if fits(spec):
            yield spec
    for cycles in _multisets((3, 4, 5), 3):
        spec = gr.Bouquet(cycles)
        if fits(spec):
            yield spec
    for cycles, arms in product(_multisets((3, 4), 2), _multisets((1, 2), 3)):
        spec = gr.Supernova(cycles, arms)
        if fits(spec):
            yield spec
    pool = nova_pool()
    for s1, s2 in product(pool, pool):
        for m in (4, 5, 6):
            for gap in range(2, m - 1):
                spec = gr.Pulsar(s1, s2, m, gap)
                if fits(spec):
                    yield spec
        for w in (2, 3, 4):
            spec = gr.BinaryStar(s1, s2, w)
            if fits(spec):
                yield spec
    for a, b, c, d in product(range(1, 5), repeat=4):
        for case in gr.BIPARTITE_CASES:
            yield gr.BipartiteJoin(a, b, c, d, case)


def unique_by_isomorphism(specs) -> dict:
    """Group specs by the isomorphism class of their graphs.

    Returns ``{key: [spec, ...]}`` in first-seen order.
    """
    groups: dict = {}
    reps: list = []
    for spec in specs:
        g = gr.build(spec)
        key = gr.canonical_form(g)
        if key is None:
            for i, (rg, rkey) in enumerate(reps):
                if gr.is_isomorphic(g, rg):
                    key = rkey
                    break
            else:
                key = ("brute", len(reps))
                reps.append((g, key))
        groups.setdefault(key, []).append(spec)
    return groups
