"""Reference solvers: single-player, Zielonka, brute force, and verification.

Zielonka's algorithm is the general-purpose oracle for games too large to
enumerate; :func:`solve_brute_force` enumerates positional strategy pairs and
is independent of every attractor-based routine in the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .attractor import _attract, eliminate_dead_ends
from .core import Arena, Player, Regions, Subgame, as_view, top_priority
from .errors import InputError, SizeLimitError

BRUTE_FORCE_CAP = 8
PROFILE_CAP = 8 ** 8  # every game on at most 8 vertices


def solve_single_player(g, owner=None) -> Regions:
    """Solve a game in which one player owns every alive vertex.

    The owner wins exactly where it can reach a cycle whose maximum
    priority has its parity. ``owner`` may be omitted when the game is
    nonempty; an empty game yields empty regions.
    """
    view = as_view(g)
    alive = view.alive == 1
    owners = view.arena.owner[alive]
    if owner is None:
        if owners.size == 0:
            return Regions.empty(view.n, with_strategy=True)
        owner = Player(int(owners[0]))
    owner = Player(owner)
    if owners.size and (owners != int(owner)).any():
        raise InputError(f"not a single-player game for {owner.name}")
    win, strat = kernels.single_player(view.arena, view.alive, int(owner))
    winner = np.full(view.n, -1, dtype=np.int8)
    winner[alive] = int(owner.opponent)
    winner[win == 1] = int(owner)
    strategy = np.where(win == 1, strat, -1)
    return Regions(winner, strategy)


@dataclass
class SolverReport:
    regions: Regions
    depth: int = 0
    touches: int = 0
    calls: int = 0

    @property
    def has_strategy(self) -> bool:
        return self.regions.strategy is not None


@dataclass
class _ZStats:
    depth: int = 0
    touches: int = 0
    calls: int = 0


def solve_zielonka(g) -> SolverReport:
    """Zielonka's recursive algorithm with positional strategies for both players."""
    view = as_view(g)
    winner = np.full(view.n, -1, dtype=np.int8)
    strategy = np.full(view.n, -1, dtype=np.int64)
    stats = _ZStats()
    _zielonka(view, winner, strategy, stats, 1)
    return SolverReport(Regions(winner, strategy), stats.depth, stats.touches, stats.calls)


def _zielonka(view: Subgame, winner, strategy, stats: _ZStats, depth: int):
    stats.calls += 1
    stats.depth = max(stats.depth, depth)
    arena = view.arena
    while True:
        de = eliminate_dead_ends(view)
        stats.touches += de.touches
        winner[de.even_mask] = 0
        winner[de.odd_mask] = 1
        sel = de.strategy >= 0
        strategy[sel] = de.strategy[sel]
        view = de.reduced
        if view.count == 0:
            return
        d, top = top_priority(view)
        i = Player.of_priority(d)
        attr = _attract(view, i, top.astype(np.uint8))
        stats.touches += attr.touches
        sub = view.without(attr.mask)
        _zielonka(sub, winner, strategy, stats, depth + 1)
        sub_alive = sub.alive == 1
        opp_region = sub_alive & (winner == int(i.opponent))
        if not opp_region.any():
            winner[view.alive == 1] = int(i)
            off_top = attr.mask & (attr.strategy >= 0)
            strategy[off_top] = attr.strategy[off_top]
            mine = top & (arena.owner == int(i))
            for v in np.flatnonzero(mine).tolist():
                strategy[v] = view.successors(v)[0]
            return
        # the opponent's subgame region is a dominion of the whole view
        back = _attract(view, i.opponent, opp_region.astype(np.uint8))
        stats.touches += back.touches
        extra = back.mask & ~opp_region
        winner[back.mask] = int(i.opponent)
        sel = extra & (back.strategy >= 0)
        strategy[sel] = back.strategy[sel]
        strategy[(view.alive == 1) & ~back.mask] = -1
        view = view.without(back.mask)


def solve_brute_force(g, cap: int = BRUTE_FORCE_CAP) -> Regions:
    """Winning regions by enumerating every pair of positional strategies.

    For each pair the play from each start vertex is a lasso; its winner
    is the parity of the largest priority on the loop (a dead end counts
    as a loop lost by its owner). Even wins ``v`` iff some even strategy
    beats all odd strategies from ``v``; the odd region is computed with
    the quantifiers swapped and must be the exact complement.
    """
    view = as_view(g)
    verts = view.vertices()
    k = int(verts.size)
    if k > cap:
        raise SizeLimitError(f"{k} vertices exceed the brute-force cap of {cap}")
    if k == 0:
        return Regions.empty(view.n)
    arena = view.arena
    local = {v: j for j, v in enumerate(verts.tolist())}
    owner = arena.owner[verts].astype(np.int64)
    pri = arena.priority[verts].astype(np.int64)
    big = 2 * int(pri.max()) + 4
    choices = []
    loop_pri = pri.copy()
    for j, v in enumerate(verts.tolist()):
        succ = [local[w] for w in view.successors(v)]
        if not succ:
            succ = [j]
            # stuck owner loses: its dead end behaves as a loop won by the opponent
            loop_pri[j] = big + (1 if owner[j] == 0 else 0)
        choices.append(succ)
    n_profiles = math.prod(len(c) for c in choices)
    if n_profiles > PROFILE_CAP:
        raise SizeLimitError(f"{n_profiles} strategy profiles exceed {PROFILE_CAP}")
    table = np.zeros((k, max(len(c) for c in choices)), dtype=np.int64)
    for j, c in enumerate(choices):
        table[j, :len(c)] = c
    degree = np.array([len(c) for c in choices], dtype=np.int64)
    even_forall_any, odd_exists = kernels.profiles(table, degree, owner.astype(np.uint8), loop_pri)
    if not np.array_equal(even_forall_any, ~odd_exists):
        raise AssertionError("positional determinacy failed in brute-force enumeration")
    winner = np.full(view.n, -1, dtype=np.int8)
    winner[verts] = np.where(even_forall_any, 0, 1)
    return Regions(winner)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_solution(g, regions: Regions) -> Verdict:
    """Check that claimed regions are won with the recorded strategies.

    Each region must be closed under the winner's strategy and under every
    move of the loser, and the loser must win nowhere in the one-player game
    left once the winner's strategy is fixed.
    """
    view = as_view(g)
    arena = view.arena
    alive = view.alive == 1
    w = regions.winner
    if w.shape[0] != view.n:
        return Verdict(False, None, "regions belong to a different arena")
    bad = np.flatnonzero(alive != (w >= 0))
    if bad.size:
        return Verdict(False, int(bad[0]), "vertex coverage differs from the game")
    strat = regions.strategy
    if strat is None:
        return Verdict(False, None, "no strategy recorded")
    for v in view.vertices().tolist():
        p = int(w[v])
        succ = view.successors(v)
        if arena.owner[v] == p:
            s = int(strat[v])
            if not succ:
                return Verdict(False, v, "winner owns a dead end")
            if s not in succ:
                return Verdict(False, v, "strategy edge missing or not an arc")
            if w[s] != p:
                return Verdict(False, v, "strategy edge leaves the region")
        else:
            for s in succ:
                if w[s] != p:
                    return Verdict(False, v, "loser can leave the region")
    for p in (Player.EVEN, Player.ODD):
        region = np.flatnonzero(alive & (w == int(p)))
        if region.size == 0:
            continue
        local = np.full(view.n, -1, dtype=np.int64)
        local[region] = np.arange(region.size)
        src, dst = [], []
        for j, v in enumerate(region.tolist()):
            targets = [int(strat[v])] if arena.owner[v] == int(p) else view.successors(v)
            for s in targets:
                src.append(j)
                dst.append(int(local[s]))
        loser = p.opponent
        fixed = Arena(np.full(region.size, int(loser)), arena.priority[region], src, dst)
        res = solve_single_player(fixed, loser)
        lost = np.flatnonzero(res.mask(loser))
        if lost.size:
            return Verdict(False, int(region[lost[0]]), f"{loser.name} escapes against the strategy")
    return Verdict(True)
