"""Solvers for joins of games.

A join puts two disjoint games side by side and adds cross arcs so that
every even vertex on one side is adjacent (in some direction) to every odd
vertex on the other. When one side is a single-player game the join is a
half-join; weak tournaments are exactly the half-joins of single-player
games. A G-join only connects the single-player side to a hub set ``M`` of
opponent vertices on the other side.

Every half-solver here works on total games and is lifted by
:func:`~parityops.halfsolve.generic_solve`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .attractor import _attract
from .baseline import solve_single_player
from .core import Player, Regions, Subgame, as_set, as_view, to_mask
from .errors import InputError
from .halfsolve import WHOLE, HalfSolver, generic_solve, reduce_by, solved_empty


def _cross_pairs(view: Subgame, a: np.ndarray, b: np.ndarray) -> int:
    """Number of distinct adjacent pairs (x, y) with x in ``a`` and y in ``b``."""
    arena = view.arena
    m = view.arc_mask()
    s, t = arena.arc_src[m], arena.succ_idx[m]
    fw = a[s] & b[t]
    bw = b[s] & a[t]
    keys = np.concatenate([s[fw] * view.n + t[fw], t[bw] * view.n + s[bw]])
    return int(np.unique(keys).size)


def _fully_adjacent(view: Subgame, a: np.ndarray, b: np.ndarray) -> bool:
    na, nb = int(np.count_nonzero(a)), int(np.count_nonzero(b))
    if na == 0 or nb == 0:
        return True
    return _cross_pairs(view, a, b) == na * nb


def is_weak_tournament(g) -> bool:
    """Every even vertex is adjacent to every odd vertex."""
    view = as_view(g)
    return _fully_adjacent(view, view.owned_by(Player.EVEN), view.owned_by(Player.ODD))


def _side_masks(view: Subgame, *sides):
    return [view.mask(s) for s in sides]


def _check_partition(view: Subgame, a: np.ndarray, b: np.ndarray, what: str):
    if (a & b).any():
        raise InputError(f"{what}: sides overlap")
    if not np.array_equal(a | b, view.alive == 1):
        raise InputError(f"{what}: sides do not cover the game")


@dataclass(frozen=True)
class HalfJoinDecomposition:
    single_side: frozenset
    class_side: frozenset
    single_owner: Player

    def validate(self, g):
        view = as_view(g)
        single, rest = _side_masks(view, self.single_side, self.class_side)
        _check_partition(view, single, rest, "half-join")
        owner = Player(self.single_owner)
        if (view.arena.owner[single] != int(owner)).any():
            raise InputError(f"half-join: single side is not owned by {owner.name}")
        if not _fully_adjacent(view, single, rest & view.owned_by(owner.opponent)):
            raise InputError("half-join: a single-side vertex misses an opposite vertex")


@dataclass(frozen=True)
class JoinDecomposition:
    left: frozenset
    right: frozenset

    def validate(self, g):
        view = as_view(g)
        left, right = _side_masks(view, self.left, self.right)
        _check_partition(view, left, right, "join")
        even, odd = view.owned_by(Player.EVEN), view.owned_by(Player.ODD)
        if not (_fully_adjacent(view, left & even, right & odd) and _fully_adjacent(view, left & odd, right & even)):
            raise InputError("join: an opposite-owner cross pair is not adjacent")


@dataclass(frozen=True)
class GJoinDecomposition:
    single_side: frozenset
    class_side: frozenset
    m_set: frozenset
    single_owner: Player

    def validate(self, g):
        view = as_view(g)
        single, rest, hub = _side_masks(view, self.single_side, self.class_side, self.m_set)
        _check_partition(view, single, rest, "g-join")
        owner = Player(self.single_owner)
        if (view.arena.owner[single] != int(owner)).any():
            raise InputError(f"g-join: single side is not owned by {owner.name}")
        if (hub & ~rest).any() or (view.arena.owner[hub] != int(owner.opponent)).any():
            raise InputError("g-join: hub set must consist of opposite-owner class vertices")
        arena = view.arena
        m = view.arc_mask()
        s, t = arena.arc_src[m], arena.succ_idx[m]
        cross = (single[s] & rest[t]) | (rest[s] & single[t])
        touches_hub = hub[s] | hub[t]
        if (cross & ~touches_hub).any():
            raise InputError("g-join: a cross arc avoids the hub set")
        if not _fully_adjacent(view, hub, single):
            raise InputError("g-join: a hub vertex misses a single-side vertex")


def detect_half_join(g, player) -> HalfJoinDecomposition | None:
    """Split off the ``player`` vertices adjacent to every opponent vertex.

    Returns ``None`` when no such vertex exists. Whether the remaining side
    lies in a solvable class is for the caller to decide.
    """
    view = as_view(g)
    player = Player(player)
    mine, theirs = view.owned_by(player), view.owned_by(player.opponent)
    arena = view.arena
    m = view.arc_mask()
    s, t = arena.arc_src[m], arena.succ_idx[m]
    fw = mine[s] & theirs[t]
    bw = theirs[s] & mine[t]
    keys = np.unique(np.concatenate([s[fw] * view.n + t[fw], t[bw] * view.n + s[bw]]))
    degree = np.bincount(keys // max(view.n, 1), minlength=view.n)
    single = mine & (degree == int(np.count_nonzero(theirs)))
    if not single.any():
        return None
    rest = (view.alive == 1) & ~single
    return HalfJoinDecomposition(as_set(single), as_set(rest), player)


def _half_join_step(view: Subgame, single: np.ndarray, owner: Player, inner) -> object:
    if view.count == 0:
        return solved_empty(view)
    i = owner.opponent
    probe = _attract(view, i, view.owned_by(i).astype(np.uint8))
    lone = solve_single_player(view.without(probe.mask), owner)
    if lone.mask(owner).any():
        return reduce_by(view, owner, lone.mask(owner))
    probe = _attract(view, owner, (single & (view.alive == 1)).astype(np.uint8))
    rest = view.without(probe.mask)
    sub = inner(rest)
    found = sub.mask(i) & (rest.alive == 1)
    if found.any():
        return reduce_by(view, i, found)
    return WHOLE


def half_join_solver(dec: HalfJoinDecomposition, inner) -> HalfSolver:
    """Half-solver for a fixed decomposition; views may be any subgame of it."""
    owner = Player(dec.single_owner)
    cache = {}

    def step(view):
        single = cache.get(view.n)
        if single is None:
            single = cache[view.n] = to_mask(view.n, dec.single_side)
        return _half_join_step(view, single, owner, inner)

    return HalfSolver(f"half-join[{owner.name.lower()}]", step)


def _masked_half_join_solver(single: np.ndarray, owner: Player, inner) -> HalfSolver:
    return HalfSolver(f"half-join[{owner.name.lower()}]",
                      lambda view: _half_join_step(view, single, owner, inner))


def half_solve_half_join(g, dec: HalfJoinDecomposition, inner):
    """One half-solving step on a half-join (validates ``dec`` first)."""
    view = as_view(g)
    dec.validate(view)
    return _half_join_step(view, view.mask(dec.single_side), Player(dec.single_owner), inner)


def solve_half_join(g, dec: HalfJoinDecomposition, inner, *, audit=None) -> Regions:
    view = as_view(g)
    dec.validate(view)
    h = _masked_half_join_solver(view.mask(dec.single_side), Player(dec.single_owner), inner)
    return generic_solve(view, h, audit=audit)


def solve_weak_tournament(g, *, audit=None) -> Regions:
    """Solve a game on a weak tournament.

    The odd vertices form the single-player side and the even vertices the
    other side, which is itself a single-player game.
    """
    view = as_view(g)
    if not is_weak_tournament(view):
        raise InputError("game is not a weak tournament")
    h = _masked_half_join_solver(view.owned_by(Player.ODD), Player.ODD, solve_single_player)
    h = HalfSolver("weak-tournament", h.fn)
    return generic_solve(view, h, audit=audit)


def _join_step(view: Subgame, left, right, solver_left, solver_right, audit=None):
    if view.count == 0:
        return solved_empty(view)
    # drop even vertices on the right: the odd remainder there is single-player
    cut = _attract(view, Player.EVEN, (view.owned_by(Player.EVEN) & right).astype(np.uint8))
    p1 = view.without(cut.mask)
    h1 = _masked_half_join_solver(right & (p1.alive == 1), Player.ODD, solver_left)
    r1 = generic_solve(p1, h1, audit=audit)
    if r1.mask(Player.ODD).any():
        return reduce_by(view, Player.ODD, r1.mask(Player.ODD))
    cut = _attract(view, Player.ODD, (view.owned_by(Player.ODD) & left).astype(np.uint8))
    p2 = view.without(cut.mask)
    h2 = _masked_half_join_solver(left & (p2.alive == 1), Player.EVEN, solver_right)
    r2 = generic_solve(p2, h2, audit=audit)
    if r2.mask(Player.EVEN).any():
        return reduce_by(view, Player.EVEN, r2.mask(Player.EVEN))
    return WHOLE


def half_solve_join(g, dec: JoinDecomposition, solver_left, solver_right):
    view = as_view(g)
    dec.validate(view)
    return _join_step(view, view.mask(dec.left), view.mask(dec.right), solver_left, solver_right)


def solve_join(g, dec: JoinDecomposition, solver_left, solver_right, *, audit=None) -> Regions:
    view = as_view(g)
    dec.validate(view)
    left, right = view.mask(dec.left), view.mask(dec.right)
    h = HalfSolver("join", lambda v: _join_step(v, left, right, solver_left, solver_right, audit))
    return generic_solve(view, h, audit=audit)


def _g_join_step(view: Subgame, single, rest, hub, owner: Player, inner):
    if view.count == 0:
        return solved_empty(view)
    other = owner.opponent
    alive = view.alive == 1
    probe = _attract(view, other, view.owned_by(other).astype(np.uint8))
    lone = solve_single_player(view.without(probe.mask), owner)
    if lone.mask(owner).any():
        return reduce_by(view, owner, lone.mask(owner))
    probe = _attract(view, owner, (single & alive).astype(np.uint8))
    sub_view = view.without(probe.mask)
    sub = inner(sub_view)
    found = sub.mask(other) & (sub_view.alive == 1)
    if found.any():
        return reduce_by(view, other, found)
    # without the hub's attractor no cross arc is left: solve both sides apart
    probe = _attract(view, other, (hub & alive).astype(np.uint8))
    q = view.without(probe.mask)
    q_alive = q.alive == 1
    won = np.zeros(view.n, dtype=bool)
    if (q_alive & single).any():
        won |= solve_single_player(q.restrict(q_alive & single), owner).mask(owner)
    if (q_alive & rest).any():
        part = q.restrict(q_alive & rest)
        won |= inner(part).mask(owner) & (part.alive == 1)
    if won.any():
        return reduce_by(view, owner, won)
    return WHOLE


def half_solve_g_join(g, dec: GJoinDecomposition, inner):
    view = as_view(g)
    dec.validate(view)
    return _g_join_step(view, view.mask(dec.single_side), view.mask(dec.class_side),
                        view.mask(dec.m_set), Player(dec.single_owner), inner)


def solve_g_join(g, dec: GJoinDecomposition, inner, *, audit=None) -> Regions:
    view = as_view(g)
    dec.validate(view)
    single, rest, hub = view.mask(dec.single_side), view.mask(dec.class_side), view.mask(dec.m_set)
    owner = Player(dec.single_owner)
    h = HalfSolver("g-join", lambda v: _g_join_step(v, single, rest, hub, owner, inner))
    return generic_solve(view, h, audit=audit)
