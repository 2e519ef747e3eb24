"""Block decomposition and solving of games built by repeated pasting.

Pasting two games identifies one vertex of each. Games obtained this way
have a tree of biconnected blocks, and a leaf block ``L`` hanging off cut
vertex ``v`` can be solved on its own: with ``v`` owned by ``o``, player
``o`` wins ``v`` in the whole game iff it wins ``v`` in ``L`` or in the rest.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .attractor import _attract, eliminate_dead_ends
from .core import Player, Regions, Subgame, as_view
from .errors import InputError
from . import kernels


@dataclass(frozen=True)
class BlockCutTree:
    """Biconnected blocks of the underlying undirected graph.

    ``edges`` are the tree edges ``(block index, cut vertex)``; ``components``
    are the connected components. Blocks are ordered by their smallest vertex.
    """

    blocks: tuple
    cut_vertices: frozenset
    edges: tuple
    components: tuple

    def blocks_of(self, v: int) -> list:
        return [b for b, c in self.edges if c == v]

    def block_adjacency(self) -> list:
        """Pairs of blocks sharing a cut vertex."""
        by_cut: dict = {}
        for b, c in self.edges:
            by_cut.setdefault(c, []).append(b)
        pairs = set()
        for bs in by_cut.values():
            for i, x in enumerate(bs):
                for y in bs[i + 1:]:
                    pairs.add((min(x, y), max(x, y)))
        return sorted(pairs)

    def leaves(self) -> list:
        """Indices of blocks containing exactly one cut vertex."""
        count = [0] * len(self.blocks)
        for b, _ in self.edges:
            count[b] += 1
        return [b for b, k in enumerate(count) if k == 1]

    def validate(self, g):
        """Check the block cover properties against ``g``; raises InputError."""
        view = as_view(g)
        alive = set(view.vertices().tolist())
        if set().union(*self.blocks) != alive:
            raise InputError("blocks do not cover the vertices")
        home: dict = {}
        for b, verts in enumerate(self.blocks):
            for v in verts:
                home.setdefault(v, []).append(b)
        for u, w in view.arcs():
            if u == w:
                continue
            shared = set(home[u]) & set(home[w])
            if len(shared) != 1:
                raise InputError(f"arc ({u}, {w}) lies in {len(shared)} blocks")
        for i in range(len(self.blocks)):
            for j in range(i + 1, len(self.blocks)):
                if len(self.blocks[i] & self.blocks[j]) > 1:
                    raise InputError(f"blocks {i} and {j} share more than one vertex")
        # block-cut graph of each component is a tree: nodes - 1 == edges
        nodes = len(self.blocks) + len(self.cut_vertices)
        if nodes - len(self.components) != len(self.edges):
            raise InputError("block-cut graph is not a forest")


def _undirected_csr(view: Subgame):
    a = view.arena
    m = view.arc_mask()
    s, t = a.arc_src[m], a.succ_idx[m]
    keep = s != t
    s, t = s[keep], t[keep]
    n = max(view.n, 1)
    keys = np.unique(np.minimum(s, t) * n + np.maximum(s, t))
    x, y = np.divmod(keys, n)
    src = np.concatenate([x, y])
    dst = np.concatenate([y, x])
    eid = np.concatenate([np.arange(x.size), np.arange(x.size)])
    order = np.argsort(src, kind="stable")
    ptr = np.zeros(view.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=view.n), out=ptr[1:])
    return ptr, dst[order].astype(np.int64), eid[order].astype(np.int64)


class _Blocks:
    """Flat block arrays of a view, as produced by ``kernels.blocks``."""

    __slots__ = ("comp", "ncomp", "bptr", "verts", "is_cut")

    def __init__(self, view: Subgame):
        ptr, nbr, eid = _undirected_csr(view)
        self.comp, self.bptr, self.verts = kernels.blocks(ptr, nbr, eid, view.vertices().astype(np.int64))
        self.ncomp = int(self.comp.max()) + 1 if self.comp.size else 0
        count = np.bincount(self.verts, minlength=view.n)
        self.is_cut = count[self.verts] > 1

    @property
    def count(self) -> int:
        return self.bptr.size - 1

    def block(self, b: int) -> np.ndarray:
        return self.verts[self.bptr[b]:self.bptr[b + 1]]

    def leaf(self):
        """Lowest-index block with exactly one cut vertex, and that vertex."""
        cuts = np.add.reduceat(self.is_cut.astype(np.int64), self.bptr[:-1])
        b = int(np.flatnonzero(cuts == 1)[0])
        lo, hi = self.bptr[b], self.bptr[b + 1]
        return self.verts[lo:hi], int(self.verts[lo:hi][self.is_cut[lo:hi]][0])


def biconnected_components(g) -> BlockCutTree:
    """Hopcroft-Tarjan lowpoint decomposition, iterative, linear in the arcs.

    Self-loops are ignored and isolated vertices form singleton blocks.
    """
    view = as_view(g)
    fb = _Blocks(view)
    blocks = tuple(frozenset(fb.block(b).tolist()) for b in range(fb.count))
    cuts = frozenset(fb.verts[fb.is_cut].tolist())
    bid = np.repeat(np.arange(fb.count), np.diff(fb.bptr))
    edges = tuple(zip(bid[fb.is_cut].tolist(), fb.verts[fb.is_cut].tolist()))
    alive = view.vertices()
    order = np.argsort(fb.comp[alive], kind="stable")
    split = np.flatnonzero(np.diff(fb.comp[alive][order])) + 1
    components = tuple(frozenset(c.tolist()) for c in np.split(alive[order], split)) if alive.size else ()
    return BlockCutTree(blocks, cuts, edges, components)


def default_component_solver(view: Subgame) -> Regions:
    """Weak-tournament solver when it applies, Zielonka otherwise."""
    from .baseline import solve_zielonka
    from .joins import is_weak_tournament, solve_weak_tournament

    if is_weak_tournament(view):
        return solve_weak_tournament(view)
    return solve_zielonka(view).regions


def _task(view: Subgame, solver, winner: np.ndarray):
    """Solve ``view`` into ``winner``; yields subgames that must be solved first."""
    de = eliminate_dead_ends(view)
    winner[de.even_mask] = 0
    winner[de.odd_mask] = 1
    view = de.reduced
    if view.count == 0:
        return
    fb = _Blocks(view)
    if fb.ncomp > 1:
        alive = view.alive == 1
        for c in range(fb.ncomp):
            yield view.restrict(alive & (fb.comp == c))
        return
    if fb.count == 1:
        res = solver(view)
        alive = view.alive == 1
        winner[alive] = res.winner[alive]
        return
    block, v = fb.leaf()
    L = view.mask(block)
    o = Player(int(view.arena.owner[v]))
    in_leaf = solver(view.restrict(L))
    inner = L.copy()
    inner[v] = False
    rest = view.without(inner)
    if in_leaf.winner[v] == int(o):
        A = _attract(rest, o, _single(view.n, v)).mask
        winner[inner] = in_leaf.winner[inner]
        winner[A] = int(o)
        sub = rest.without(A)
        if sub.count:
            yield sub
        return
    yield rest
    if winner[v] == int(o.opponent):
        winner[inner] = in_leaf.winner[inner]
        return
    leaf_view = view.restrict(L)
    AL = _attract(leaf_view, o, _single(view.n, v)).mask
    remainder = leaf_view.without(AL)
    winner[AL] = int(o)
    if remainder.count:
        res = solver(remainder)
        left = remainder.alive == 1
        winner[left] = res.winner[left]


def _single(n: int, v: int) -> np.ndarray:
    m = np.zeros(n, dtype=np.uint8)
    m[v] = 1
    return m


def solve_pasted(g, component_solver=None) -> Regions:
    """Exact regions of a game whose blocks ``component_solver`` can handle.

    ``component_solver`` maps a subgame view to Regions and must also handle
    every subgame of a block. Works without recursion limits: pending
    subgames are kept on an explicit stack.
    """
    view = as_view(g)
    solver = component_solver or default_component_solver
    winner = np.full(view.n, -1, dtype=np.int8)
    stack = [_task(view, solver, winner)]
    while stack:
        try:
            sub = next(stack[-1])
        except StopIteration:
            stack.pop()
            continue
        stack.append(_task(sub, solver, winner))
    return Regions(winner)
