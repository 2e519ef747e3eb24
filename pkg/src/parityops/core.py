"""Parity game arenas, subgame views and winning regions.

Vertices are dense integers ``0..n-1``. An :class:`Arena` is immutable and
stores successor and predecessor lists in CSR form. Solvers never copy an
arena: they work on a :class:`Subgame`, which is an alive-mask over an arena
together with the alive out-degree of every vertex.

Vertex sets cross the public API as iterables of ints (or boolean masks) and
come back as ``frozenset``; internally everything is a numpy mask.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels
from .errors import EmptyGameError, InputError


class Player(enum.IntEnum):
    EVEN = 0
    ODD = 1

    @property
    def opponent(self) -> "Player":
        return Player(1 - self)

    @classmethod
    def of_priority(cls, d: int) -> "Player":
        """The player favoured by priority ``d``."""
        return cls(d % 2)

    @property
    def symbol(self) -> str:
        return "○" if self is Player.EVEN else "□"


EVEN = Player.EVEN
ODD = Player.ODD


def opponent(p) -> Player:
    return Player(p).opponent


class Arena:
    """Immutable parity game ``(V, V_even, V_odd, E, priority)``.

    Parallel arcs are merged; self-loops are kept. Successor and predecessor
    lists are sorted ascending. ``names`` are optional display labels and
    ``ids`` optional external vertex ids (kept by the PGSolver parser when
    the input ids are not ``0..n-1``).
    """

    __slots__ = (
        "owner", "priority", "succ_ptr", "succ_idx", "pred_ptr", "pred_idx",
        "arc_src", "names", "ids", "_prepared",
    )

    def __init__(self, owner, priority, src=(), dst=(), names=None, ids=None):
        owner = np.asarray(owner, dtype=np.int64).reshape(-1)
        priority = np.asarray(priority, dtype=np.int64).reshape(-1)
        n = owner.shape[0]
        if priority.shape[0] != n:
            raise InputError("owner and priority arrays differ in length")
        if n and ((owner < 0) | (owner > 1)).any():
            raise InputError("owners must be 0 (even) or 1 (odd)")
        if n and (priority < 0).any():
            raise InputError("priorities must be non-negative")
        src = np.asarray(src, dtype=np.int64).reshape(-1)
        dst = np.asarray(dst, dtype=np.int64).reshape(-1)
        if src.shape != dst.shape:
            raise InputError("arc endpoint arrays differ in length")
        if src.size and (src.min() < 0 or dst.min() < 0 or src.max() >= n or dst.max() >= n):
            raise InputError("arc endpoint out of range")
        keys = np.unique(src * max(n, 1) + dst)
        src, dst = np.divmod(keys, max(n, 1))

        self.owner = owner.astype(np.uint8)
        self.priority = priority
        self.succ_idx = dst.astype(np.int64)
        self.succ_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=self.succ_ptr[1:])
        self.arc_src = src.astype(np.int64)
        order = np.argsort(dst, kind="stable")
        self.pred_idx = src[order].astype(np.int64)
        self.pred_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(dst, minlength=n), out=self.pred_ptr[1:])
        for arr in (self.owner, self.priority, self.succ_idx, self.succ_ptr,
                    self.arc_src, self.pred_idx, self.pred_ptr):
            arr.setflags(write=False)
        if names is not None:
            names = tuple(names)
            if len(names) != n:
                raise InputError("names must have one entry per vertex")
            if all(x is None for x in names):
                names = None
        self.names = names
        if ids is not None:
            ids = tuple(int(i) for i in ids)
            if len(ids) != n or len(set(ids)) != n:
                raise InputError("ids must be distinct, one per vertex")
            if ids == tuple(range(n)):
                ids = None
        self.ids = ids
        self._prepared = {}

    @classmethod
    def from_successors(cls, owners, priorities, successors, names=None, ids=None):
        src, dst = [], []
        for v, succ in enumerate(successors):
            for w in succ:
                src.append(v)
                dst.append(w)
        if len(successors) != len(owners):
            raise InputError("one successor list per vertex is required")
        return cls(owners, priorities, src, dst, names=names, ids=ids)

    @property
    def n(self) -> int:
        return int(self.owner.shape[0])

    def __len__(self):
        return self.n

    @property
    def num_arcs(self) -> int:
        return int(self.succ_idx.shape[0])

    def successors(self, v: int) -> np.ndarray:
        return self.succ_idx[self.succ_ptr[v]:self.succ_ptr[v + 1]]

    def predecessors(self, v: int) -> np.ndarray:
        return self.pred_idx[self.pred_ptr[v]:self.pred_ptr[v + 1]]

    def arcs(self):
        return zip(self.arc_src.tolist(), self.succ_idx.tolist())

    def external_id(self, v: int) -> int:
        return self.ids[v] if self.ids is not None else v

    def __eq__(self, other):
        if not isinstance(other, Arena):
            return NotImplemented
        return (
            np.array_equal(self.owner, other.owner)
            and np.array_equal(self.priority, other.priority)
            and np.array_equal(self.succ_ptr, other.succ_ptr)
            and np.array_equal(self.succ_idx, other.succ_idx)
            and self.names == other.names
            and self.ids == other.ids
        )

    __hash__ = None

    def __repr__(self):
        return f"Arena(n={self.n}, arcs={self.num_arcs})"


class Subgame:
    """Alive-vertex view over an arena.

    Induced-subgame semantics: the view has exactly the alive vertices and
    the arcs with both endpoints alive. Views are treated as values; the
    ``without``/``restrict`` methods return new views.
    """

    __slots__ = ("arena", "alive", "outdeg", "count")

    def __init__(self, arena: Arena, alive: np.ndarray, outdeg: np.ndarray | None = None):
        self.arena = arena
        self.alive = alive
        self.outdeg = kernels.alive_outdeg(arena, alive) if outdeg is None else outdeg
        self.count = int(np.count_nonzero(alive))

    @classmethod
    def full(cls, arena: Arena) -> "Subgame":
        alive = np.ones(arena.n, dtype=np.uint8)
        outdeg = np.diff(arena.succ_ptr).astype(np.int64)
        return cls(arena, alive, outdeg)

    @property
    def n(self) -> int:
        return self.arena.n

    def __len__(self):
        return self.count

    def is_empty(self) -> bool:
        return self.count == 0

    def vertices(self) -> np.ndarray:
        return np.flatnonzero(self.alive)

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices().tolist())

    def __contains__(self, v) -> bool:
        return 0 <= v < self.n and bool(self.alive[v])

    def owned_by(self, player) -> np.ndarray:
        """Mask of alive vertices owned by ``player``."""
        return (self.alive == 1) & (self.arena.owner == int(player))

    def successors(self, v: int) -> list:
        s = self.arena.successors(v)
        return s[self.alive[s] == 1].tolist()

    def arc_mask(self) -> np.ndarray:
        a = self.arena
        return (self.alive[a.arc_src] == 1) & (self.alive[a.succ_idx] == 1)

    @property
    def num_arcs(self) -> int:
        return int(np.count_nonzero(self.arc_mask()))

    def arcs(self):
        a = self.arena
        m = self.arc_mask()
        return zip(a.arc_src[m].tolist(), a.succ_idx[m].tolist())

    def is_total(self) -> bool:
        return not bool(((self.alive == 1) & (self.outdeg == 0)).any())

    def mask(self, vertices) -> np.ndarray:
        """Boolean mask for ``vertices``; raises if any is not alive."""
        m = to_mask(self.n, vertices)
        if (m & (self.alive == 0)).any():
            bad = int(np.flatnonzero(m & (self.alive == 0))[0])
            raise InputError(f"vertex {bad} is not in the game")
        return m

    def without(self, vertices) -> "Subgame":
        removed = to_mask(self.n, vertices).astype(np.uint8)
        alive = self.alive.copy()
        outdeg = self.outdeg.copy()
        kernels.remove(self.arena, alive, outdeg, removed)
        return Subgame(self.arena, alive, outdeg)

    def restrict(self, keep) -> "Subgame":
        m = self.mask(keep)
        return Subgame(self.arena, m.astype(np.uint8))

    def same_view(self, other: "Subgame") -> bool:
        return self.arena is other.arena and np.array_equal(self.alive, other.alive)

    def to_arena(self) -> tuple[Arena, np.ndarray]:
        """Compact copy of the view; also returns the old id of each new vertex."""
        verts = self.vertices()
        new_id = np.full(self.n, -1, dtype=np.int64)
        new_id[verts] = np.arange(verts.size)
        a = self.arena
        m = self.arc_mask()
        names = None if a.names is None else [a.names[v] for v in verts.tolist()]
        out = Arena(a.owner[verts], a.priority[verts], new_id[a.arc_src[m]],
                    new_id[a.succ_idx[m]], names=names)
        return out, verts

    def __repr__(self):
        return f"Subgame(alive={self.count}/{self.n})"


def as_view(g) -> Subgame:
    if isinstance(g, Subgame):
        return g
    if isinstance(g, Arena):
        return Subgame.full(g)
    raise TypeError(f"expected Arena or Subgame, got {type(g).__name__}")


def to_mask(n: int, vertices) -> np.ndarray:
    if isinstance(vertices, np.ndarray) and vertices.dtype in (np.bool_, np.uint8) and vertices.shape == (n,):
        return vertices.astype(bool)
    if isinstance(vertices, np.ndarray) and vertices.dtype.kind in "iu":
        idx = vertices.astype(np.int64).ravel()
    else:
        idx = np.fromiter((int(v) for v in vertices), dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= n):
        raise InputError("vertex id out of range")
    m = np.zeros(n, dtype=bool)
    m[idx] = True
    return m


def as_set(mask) -> frozenset:
    return frozenset(np.flatnonzero(mask).tolist())


def restrict(g, keep) -> Subgame:
    """The induced subgame on ``keep``; ``keep`` must be alive in ``g``."""
    return as_view(g).restrict(keep)


def top_priority(view: Subgame) -> tuple[int, np.ndarray]:
    if view.count == 0:
        raise EmptyGameError("empty game has no maximum priority")
    alive = view.alive == 1
    d = int(view.arena.priority[alive].max())
    return d, alive & (view.arena.priority == d)


def priority_level(g) -> tuple[int, frozenset]:
    """Maximum alive priority and the alive vertices that carry it."""
    d, mask = top_priority(as_view(g))
    return d, as_set(mask)


class Undirected(NamedTuple):
    adjacency: dict
    self_loops: frozenset


def underlying_undirected(g) -> Undirected:
    """Symmetric adjacency of the alive arcs; self-loops are listed apart."""
    view = as_view(g)
    adj = {v: set() for v in view.vertices().tolist()}
    loops = set()
    for u, w in view.arcs():
        if u == w:
            loops.add(u)
        else:
            adj[u].add(w)
            adj[w].add(u)
    return Undirected({v: frozenset(s) for v, s in adj.items()}, frozenset(loops))


@dataclass(frozen=True, eq=False)
class Regions:
    """Winner of every vertex of a view, with an optional strategy.

    ``winner[v]`` is 0/1 for vertices of the solved view and -1 elsewhere.
    ``strategy[v]`` is a successor for vertices owned by their winner and -1
    otherwise. Equality compares winners only.
    """

    winner: np.ndarray
    strategy: np.ndarray | None = None

    @classmethod
    def empty(cls, n: int, with_strategy=False) -> "Regions":
        return cls(np.full(n, -1, dtype=np.int8),
                   np.full(n, -1, dtype=np.int64) if with_strategy else None)

    @classmethod
    def from_sets(cls, n: int, even: Iterable[int] = (), odd: Iterable[int] = (), strategy=None):
        w = np.full(n, -1, dtype=np.int8)
        w[to_mask(n, even)] = 0
        odd_m = to_mask(n, odd)
        if (odd_m & (w == 0)).any():
            raise InputError("a vertex cannot be won by both players")
        w[odd_m] = 1
        strat = None
        if strategy is not None:
            strat = np.full(n, -1, dtype=np.int64)
            for v, s in dict(strategy).items():
                strat[v] = s
        return cls(w, strat)

    def mask(self, player) -> np.ndarray:
        return self.winner == int(player)

    def __getitem__(self, player) -> frozenset:
        return as_set(self.mask(player))

    @property
    def even(self) -> frozenset:
        return self[EVEN]

    @property
    def odd(self) -> frozenset:
        return self[ODD]

    @property
    def covered(self) -> np.ndarray:
        return self.winner >= 0

    def winner_of(self, v: int) -> Player:
        w = int(self.winner[v])
        if w < 0:
            raise InputError(f"vertex {v} is not covered")
        return Player(w)

    def strategy_map(self) -> dict:
        if self.strategy is None:
            return {}
        idx = np.flatnonzero(self.strategy >= 0)
        return dict(zip(idx.tolist(), self.strategy[idx].tolist()))

    def __eq__(self, other):
        if not isinstance(other, Regions):
            return NotImplemented
        return np.array_equal(self.winner, other.winner)

    __hash__ = None

    def __repr__(self):
        return f"Regions(even={sorted(self.even)}, odd={sorted(self.odd)})"
