"""Lifting half-solvers to full solvers.

A half-solver inspects a total game and either solves it, peels off a
region whose winner it knows, or reports that one player wins everywhere
without saying which. :func:`generic_solve` turns any such procedure into a
solver: in the last case it removes the attractor of the top priority,
solves the rest, and the global winner is the owner of that priority unless
the opponent wins somewhere in the rest.
"""
from __future__ import annotations

import contextlib
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .attractor import _attract, eliminate_dead_ends
from .core import Player, Regions, Subgame, as_set, as_view, top_priority
from .errors import ContractViolation


@dataclass(frozen=True, eq=False)
class Solved:
    regions: Regions


@dataclass(frozen=True, eq=False)
class Reduced:
    remaining: Subgame
    even_mask: np.ndarray
    odd_mask: np.ndarray
    touches: int = 0

    @property
    def won_even_star(self) -> frozenset:
        return as_set(self.even_mask)

    @property
    def won_odd_star(self) -> frozenset:
        return as_set(self.odd_mask)


class Whole:
    """One player wins every vertex; which one is left open."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "WHOLE"


WHOLE = Whole()
HalfSolveOutcome = Union[Solved, Reduced, Whole]


@dataclass(frozen=True)
class HalfSolver:
    name: str
    fn: Callable[[Subgame], HalfSolveOutcome]

    def __call__(self, view: Subgame) -> HalfSolveOutcome:
        return self.fn(view)


def solved_empty(view: Subgame) -> Solved:
    return Solved(Regions.empty(view.n))


def reduce_by(view: Subgame, player, region) -> Reduced:
    """Credit the ``player``-attractor of ``region`` to ``player`` and drop it."""
    player = Player(player)
    res = _attract(view, player, (np.asarray(region) & (view.alive == 1)).astype(np.uint8))
    empty = np.zeros(view.n, dtype=bool)
    masks = (res.mask, empty) if player is Player.EVEN else (empty, res.mask)
    return Reduced(view.without(res.mask), masks[0], masks[1], res.touches)


@dataclass
class EpisodeStats:
    vertices: int
    arcs: int
    iterations: int = 0
    max_depth: int = 0
    touches: int = 0
    outcomes: Counter = field(default_factory=Counter)


_episode_logs: list = []


@contextlib.contextmanager
def episode_log():
    """Collect the :class:`EpisodeStats` of every ``generic_solve`` call inside the block."""
    log: list = []
    _episode_logs.append(log)
    try:
        yield log
    finally:
        _episode_logs.remove(log)


def _check_solved(view: Subgame, out: Solved, name: str):
    alive = view.alive == 1
    w = out.regions.winner
    if w.shape[0] != view.n or (w[alive] < 0).any() or (w[alive] > 1).any():
        raise ContractViolation(f"{name}: Solved regions do not partition the game")


def _check_reduced(view: Subgame, out: Reduced, name: str):
    rem = out.remaining
    if rem.arena is not view.arena:
        raise ContractViolation(f"{name}: Reduced subgame belongs to another arena")
    alive, left = view.alive == 1, rem.alive == 1
    if (left & ~alive).any() or rem.count >= view.count:
        raise ContractViolation(f"{name}: Reduced subgame is not a proper subgame")
    if (out.even_mask & out.odd_mask).any():
        raise ContractViolation(f"{name}: starred regions overlap")
    if not np.array_equal(out.even_mask | out.odd_mask, alive & ~left):
        raise ContractViolation(f"{name}: starred regions do not cover the removed vertices")


def generic_solve(g, half_solver: HalfSolver, *, audit=None) -> Regions:
    """Exact winning regions using ``half_solver`` on every subgame met.

    Dead ends are stripped before each call, so half-solvers only see total
    games. ``audit(view, outcome)``, if given, is called for every outcome.
    Raises :class:`ContractViolation` when an outcome is malformed.
    """
    view = as_view(g)
    name = half_solver.name
    stats = EpisodeStats(view.count, view.num_arcs)
    winner = np.full(view.n, -1, dtype=np.int8)
    frames = []  # (view, top-priority owner, mask of the recursive subgame)
    cur = view
    while True:
        de = eliminate_dead_ends(cur)
        stats.touches += de.touches
        winner[de.even_mask] = 0
        winner[de.odd_mask] = 1
        cur = de.reduced
        if cur.count == 0:
            break
        stats.iterations += 1
        out = half_solver(cur)
        if audit is not None:
            audit(cur, out)
        if isinstance(out, Solved):
            stats.outcomes["solved"] += 1
            _check_solved(cur, out, name)
            alive = cur.alive == 1
            winner[alive] = out.regions.winner[alive]
            break
        if isinstance(out, Reduced):
            stats.outcomes["reduced"] += 1
            _check_reduced(cur, out, name)
            winner[out.even_mask] = 0
            winner[out.odd_mask] = 1
            stats.touches += out.touches
            cur = out.remaining
            continue
        if isinstance(out, Whole):
            stats.outcomes["whole"] += 1
            d, top = top_priority(cur)
            i = Player.of_priority(d)
            attr = _attract(cur, i, top.astype(np.uint8))
            stats.touches += attr.touches
            sub = cur.without(attr.mask)
            frames.append((cur, i, sub.alive == 1))
            stats.max_depth = max(stats.max_depth, len(frames))
            cur = sub
            continue
        raise ContractViolation(f"{name}: unknown outcome {out!r}")
    # each frame's episode ends with its Whole step, so unwind them all
    while frames:
        fview, i, sub_mask = frames.pop()
        lost_somewhere = bool((sub_mask & (winner == int(i.opponent))).any())
        winner[fview.alive == 1] = int(i.opponent) if lost_somewhere else int(i)
    for log in _episode_logs:
        log.append(stats)
    return Regions(winner)


def oracle_audit(max_vertices: int = 20, oracle=None):
    """Audit hook checking every outcome against an exact solver.

    Reduced outcomes must credit vertices to their true winners and Whole
    outcomes must come with an empty winning region. Views larger than
    ``max_vertices`` are skipped.
    """
    if oracle is None:
        from .baseline import solve_zielonka

        def oracle(view):
            return solve_zielonka(view).regions

    def audit(view: Subgame, out):
        if view.count > max_vertices:
            return
        truth = oracle(view)
        if isinstance(out, Reduced):
            if (out.even_mask & ~truth.mask(Player.EVEN)).any() or (out.odd_mask & ~truth.mask(Player.ODD)).any():
                raise ContractViolation("Reduced outcome credits a vertex to the wrong player")
        elif isinstance(out, Whole):
            if truth.mask(Player.EVEN).any() and truth.mask(Player.ODD).any():
                raise ContractViolation("Whole outcome while both regions are nonempty")
        elif isinstance(out, Solved):
            alive = view.alive == 1
            if not np.array_equal(out.regions.winner[alive], truth.winner[alive]):
                raise ContractViolation("Solved outcome disagrees with the oracle")

    return audit
