"""Attractors, closed sets and dead-end elimination."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import Player, Subgame, as_set, as_view


@dataclass(frozen=True, eq=False)
class AttractorResult:
    mask: np.ndarray
    strategy: np.ndarray
    touches: int

    @property
    def attracted(self) -> frozenset:
        return as_set(self.mask)

    def strategy_map(self) -> dict:
        idx = np.flatnonzero(self.strategy >= 0)
        return dict(zip(idx.tolist(), self.strategy[idx].tolist()))


def attract(g, player, target) -> AttractorResult:
    """Vertices from which ``player`` forces a visit to ``target``.

    Opponent-owned dead ends are attracted even when outside ``target``:
    the opponent is stuck there and loses. Strategy edges point one step
    closer to the target; the first discovered successor wins ties.
    """
    view = as_view(g)
    tgt = view.mask(target).astype(np.uint8)
    return _attract(view, player, tgt)


def _attract(view: Subgame, player, target_u8) -> AttractorResult:
    m, strat, touches = kernels.attract(view.arena, view.alive, view.outdeg, Player(player), target_u8)
    return AttractorResult(m.astype(bool), strat, touches)


def is_closed(g, player, vertices) -> bool:
    """``player`` can keep the play inside ``vertices`` and the opponent cannot leave."""
    view = as_view(g)
    inside = view.mask(vertices)
    a = view.arena
    arcs = view.arc_mask() & inside[a.arc_src]
    stays = inside[a.succ_idx]
    owned = a.owner == int(player)
    # some successor inside, for the player's own vertices
    good = np.zeros(view.n, dtype=np.int64)
    np.add.at(good, a.arc_src[arcs & stays], 1)
    if (inside & owned & (good == 0)).any():
        return False
    # every successor inside, for the opponent's vertices
    leaks = arcs & ~stays & ~owned[a.arc_src]
    return not bool(leaks.any())


@dataclass(frozen=True, eq=False)
class DeadEndResult:
    reduced: Subgame
    even_mask: np.ndarray
    odd_mask: np.ndarray
    strategy: np.ndarray
    touches: int

    @property
    def won_even(self) -> frozenset:
        return as_set(self.even_mask)

    @property
    def won_odd(self) -> frozenset:
        return as_set(self.odd_mask)

    def __iter__(self):
        return iter((self.reduced, self.won_even, self.won_odd))


def eliminate_dead_ends(g) -> DeadEndResult:
    """Strip dead ends and their attractors until the game is total.

    A dead end belongs to a losing owner, so the opponent's attractor of
    those dead ends is credited to the opponent and removed; this repeats
    until no dead end is left.
    """
    view = as_view(g)
    n = view.n
    won = [np.zeros(n, dtype=bool), np.zeros(n, dtype=bool)]
    strategy = np.full(n, -1, dtype=np.int64)
    touches = 0
    while True:
        dead = (view.alive == 1) & (view.outdeg == 0)
        if not dead.any():
            break
        for loser in (Player.EVEN, Player.ODD):
            stuck = dead & (view.arena.owner == int(loser)) & (view.alive == 1)
            if not stuck.any():
                continue
            winner = loser.opponent
            res = _attract(view, winner, stuck.astype(np.uint8))
            touches += res.touches
            won[winner] |= res.mask
            sel = res.mask & (res.strategy >= 0)
            strategy[sel] = res.strategy[sel]
            view = view.without(res.mask)
    return DeadEndResult(view, won[0], won[1], strategy, touches)
