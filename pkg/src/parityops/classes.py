"""Shipped hereditary game classes: membership tests and solvers.

Each entry pairs a membership test with a solver that handles every game of
the class, including subgames with dead ends. The registry order is the
order in which automatic dispatch tries them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .attractor import eliminate_dead_ends
from .baseline import solve_single_player, solve_zielonka
from .core import Regions, as_view
from .errors import InputError
from .joins import is_weak_tournament, solve_weak_tournament
from .pasting import biconnected_components, solve_pasted


def is_edgeless(g) -> bool:
    return as_view(g).num_arcs == 0


def is_single_player(g) -> bool:
    view = as_view(g)
    owners = view.arena.owner[view.alive == 1]
    return owners.size == 0 or bool((owners == owners[0]).all())


def solve_edgeless(g) -> Regions:
    """Every vertex is a dead end, lost by its owner."""
    view = as_view(g)
    de = eliminate_dead_ends(view)
    winner = np.full(view.n, -1, dtype=np.int8)
    winner[de.even_mask] = 0
    winner[de.odd_mask] = 1
    if de.reduced.count:
        raise InputError("game has arcs")
    return Regions(winner, np.full(view.n, -1, dtype=np.int64))


def _is_cycle_block(view, block) -> bool:
    sub = view.restrict(block)
    deg = {v: 0 for v in block}
    und = set()
    for u, w in sub.arcs():
        if u != w:
            und.add((min(u, w), max(u, w)))
    for u, w in und:
        deg[u] += 1
        deg[w] += 1
    return all(d == 2 for d in deg.values())


def is_block_cactus(g) -> bool:
    """Every block is a weak tournament or an undirected cycle."""
    view = as_view(g)
    tree = biconnected_components(view)
    for block in tree.blocks:
        if len(block) <= 2 or is_weak_tournament(view.restrict(block)):
            continue
        if not _is_cycle_block(view, block):
            return False
    return True


def solve_block_cactus(g) -> Regions:
    return solve_pasted(g)


def _solve_wt(g) -> Regions:
    return solve_weak_tournament(g)


def _solve_zielonka(g) -> Regions:
    return solve_zielonka(g).regions


@dataclass(frozen=True)
class GameClass:
    name: str
    member: Callable
    solver: Callable


CLASSES = {
    c.name: c
    for c in (
        GameClass("edgeless", is_edgeless, solve_edgeless),
        GameClass("single-player", is_single_player, solve_single_player),
        GameClass("weak-tournament", is_weak_tournament, _solve_wt),
        GameClass("block-cactus", is_block_cactus, solve_block_cactus),
    )
}

#: not a tractable class; accepted where a caller explicitly asks for it
GENERAL = GameClass("general", lambda g: True, _solve_zielonka)


def get_class(name: str) -> GameClass:
    if name == GENERAL.name:
        return GENERAL
    try:
        return CLASSES[name]
    except KeyError:
        raise InputError(f"unknown game class {name!r}; known: {', '.join(CLASSES)}") from None


def class_of(g, names=None) -> GameClass | None:
    """First shipped class (in registry order) containing ``g``."""
    view = as_view(g)
    for name in names or CLASSES:
        c = CLASSES[name]
        if c.member(view):
            return c
    return None
