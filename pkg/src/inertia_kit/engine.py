"""Inertia sets by recursion over cut vertices.

A connected graph with a cut vertex ``v`` splits as ``F (+)_v G``; its
inertia set is

    [I(F) + I(G)]_n  U  [I(F - v) + I(G - v) + {(1, 1)}]_n

with ``n = |F| + |G| - 1``.  The engine peels leaf blocks off the block
tree and falls back to closed forms for edges, cycles and complete
bipartite blocks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .algebra import InertiaSet, add, cap, union
from .errors import Disconnected, UnsupportedBlock
from .formulas import ONE_ONE, _bipartite_any, inertia_cycle, inertia_path
from .graphs import Block, Graph, canonical_form, connected_components, cut_vertex_blocks, delete_vertex

__all__ = ["JoinInputs", "join_inertia", "recursive_inertia", "block_inertia", "InertiaEngine"]


@dataclass(frozen=True)
class JoinInputs:
    iF: InertiaSet
    iG: InertiaSet
    iF_minus_v: InertiaSet
    iG_minus_v: InertiaSet
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("a join of two graphs on >= 2 vertices has n >= 3")
        for name in ("iF", "iG", "iF_minus_v", "iG_minus_v"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be nonempty")


def join_inertia(j: JoinInputs) -> InertiaSet:
    whole = cap(add(j.iF, j.iG), j.n)
    split = cap(add(j.iF_minus_v, j.iG_minus_v, ONE_ONE), j.n)
    return whole | split


def block_inertia(block: Block, removed: Optional[int] = None) -> InertiaSet:
    """Known inertia of a block, optionally with one of its vertices deleted."""
    size = len(block.vertices)
    if block.kind == "Edge":
        return inertia_path(1 if removed is not None else 2)
    if block.kind == "Cycle":
        return inertia_path(size - 1) if removed is not None else inertia_cycle(size)
    if block.kind == "CompleteBipartite":
        left, right = block.parts
        a, b = len(left), len(right)
        if removed is not None:
            if removed in left:
                a -= 1
            else:
                b -= 1
        return _bipartite_any(a, b)
    raise UnsupportedBlock(block.vertices, block.kind)


class InertiaEngine:
    """Recursive evaluator with an isomorphism-keyed memo.

    ``rng`` randomises which leaf block is peeled at each step; results
    must not depend on it.
    """

    def __init__(self, rng: Optional[random.Random] = None, memo: bool = True):
        self.rng = rng
        self.memo = {} if memo else None
        self.calls = 0

    def inertia(self, g: Graph) -> InertiaSet:
        parts = connected_components(g)
        if not parts:
            return InertiaSet.zero()
        return add(*(self._connected(c) for c in parts))

    def _connected(self, g: Graph) -> InertiaSet:
        key = canonical_form(g) if self.memo is not None else None
        if key is not None and key in self.memo:
            return self.memo[key]
        self.calls += 1
        result = self._evaluate(g)
        if key is not None:
            self.memo[key] = result
        return result

    def _evaluate(self, g: Graph) -> InertiaSet:
        if g.order == 1:
            return inertia_path(1)
        tree = cut_vertex_blocks(g)
        if len(tree.blocks) == 1:
            return block_inertia(tree.blocks[0])
        leaves = tree.leaf_blocks()
        block, v = self.rng.choice(leaves) if self.rng else leaves[0]
        # Every leaf block is checked up front so errors name the culprit.
        for b in tree.blocks:
            if b.kind == "Other":
                raise UnsupportedBlock(b.vertices, b.kind)
        inner = [x for x in block.vertices if x != v]
        keep = [x for x in range(g.order) if x not in set(inner)]
        rest = g.induced(keep)
        v_rest = keep.index(v)
        return join_inertia(JoinInputs(
            iF=block_inertia(block),
            iG=self._connected(rest),
            iF_minus_v=block_inertia(block, removed=v),
            iG_minus_v=self.inertia(delete_vertex(rest, v_rest)),
            n=g.order,
        ))


def recursive_inertia(g: Graph, rng: Optional[random.Random] = None, memo: bool = True) -> InertiaSet:
    """Inertia set of a connected graph built from supported blocks."""
    if not g.is_connected():
        raise Disconnected("recursive_inertia needs a connected graph; split components first")
    return InertiaEngine(rng=rng, memo=memo).inertia(g)
