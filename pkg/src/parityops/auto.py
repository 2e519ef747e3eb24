"""Automatic choice of a structural solver, with Zielonka as the fallback."""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .addvertex import find_removable_vertex, solve_add_vertex
from .attractor import eliminate_dead_ends
from .baseline import solve_zielonka
from .classes import CLASSES, class_of
from .core import Player, Regions, as_view
from .joins import detect_half_join, is_weak_tournament, solve_half_join, solve_weak_tournament
from .pasting import biconnected_components, solve_pasted

# apex search runs one membership test per vertex; skip it on large games
APEX_SEARCH_LIMIT = 400


class AutoResult(NamedTuple):
    regions: Regions
    trace: list


def solve_auto(g) -> AutoResult:
    """Solve ``g`` with the first structural method that applies.

    Order: dead-end elimination, weak tournament, half-join of a shipped
    class (odd single side first), block decomposition with every block
    solved the same way, apex over a shipped class, then Zielonka. ``trace``
    names the method taken at every level.
    """
    trace: list = []
    return AutoResult(_auto(as_view(g), trace, 0), trace)


def _auto(view, trace, depth) -> Regions:
    pad = "  " * depth
    de = eliminate_dead_ends(view)
    winner = np.full(view.n, -1, dtype=np.int8)
    winner[de.even_mask] = 0
    winner[de.odd_mask] = 1
    removed = view.count - de.reduced.count
    if removed:
        trace.append(f"{pad}dead-ends: {removed} vertices")
    r = de.reduced
    if r.count == 0:
        return Regions(winner)
    sub = _dispatch(r, trace, depth, pad)
    alive = r.alive == 1
    winner[alive] = sub.winner[alive]
    return Regions(winner)


def _dispatch(r, trace, depth, pad) -> Regions:
    if is_weak_tournament(r):
        trace.append(f"{pad}weak-tournament: {r.count} vertices")
        return solve_weak_tournament(r)
    for player in (Player.ODD, Player.EVEN):
        dec = detect_half_join(r, player)
        if dec is None or not dec.class_side:
            continue
        cls = class_of(r.restrict(dec.class_side))
        if cls is None:
            continue
        trace.append(f"{pad}half-join: single side {player.name.lower()} ({len(dec.single_side)}), class side {cls.name}")
        return solve_half_join(r, dec, cls.solver)
    tree = biconnected_components(r)
    if len(tree.blocks) > 1:
        trace.append(f"{pad}paste: {len(tree.blocks)} blocks")
        return solve_pasted(r, lambda block: _auto(block, trace, depth + 1))
    if r.count <= APEX_SEARCH_LIMIT:
        for cls in CLASSES.values():
            cert = find_removable_vertex(r, cls.member, cls.name)
            if cert is not None:
                trace.append(f"{pad}add-vertex: apex {cert.apex}, class {cls.name}")
                return solve_add_vertex(r, cert.apex, cls.solver)
    trace.append(f"{pad}zielonka: {r.count} vertices")
    return solve_zielonka(r).regions
