"""Reducing region computation to recognising a global odd winner.

For a vertex ``s`` the pinned game ``P_s`` gives odd a way back to ``s``
from every odd vertex through a hub of huge even priority, and subdivides
every even move with an odd vertex so that odd may also bail out right
after even moves. Odd then wins all of ``P_s`` iff odd wins ``s`` in the
original game.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .baseline import solve_zielonka
from .core import Arena, Player, Regions, as_view
from .errors import InputError


@dataclass(frozen=True, eq=False)
class PinnedGame:
    arena: Arena
    origin: np.ndarray  # original vertex of each gadget vertex, -1 for added ones
    pin: int
    hub: int
    subdivisions: tuple  # (gadget vertex, (u, x)) per subdivided even arc

    @property
    def size(self) -> int:
        return self.arena.n


def build_pinned_game(g, s: int) -> PinnedGame:
    """Construct ``P_s``: originals first, then subdivisions in arc order, hub last."""
    view = as_view(g)
    if s not in view:
        raise InputError(f"pin vertex {s} is not in the game")
    a = view.arena
    verts = view.vertices()
    k = int(verts.size)
    new_id = np.full(view.n, -1, dtype=np.int64)
    new_id[verts] = np.arange(k)
    m = view.arc_mask()
    src, dst = a.arc_src[m], a.succ_idx[m]
    even_arc = a.owner[src] == int(Player.EVEN)
    es, ed = src[even_arc], dst[even_arc]
    n_sub = int(es.size)
    sub_ids = np.arange(k, k + n_sub)
    hub = k + n_sub
    owner = np.concatenate([a.owner[verts], np.ones(n_sub, dtype=np.int64), [0]])
    top = int(a.priority[verts].max()) if k else 0
    hub_pri = top + 1 if top % 2 else top + 2
    priority = np.concatenate([a.priority[verts], a.priority[es], [hub_pri]])
    odd_nodes = np.concatenate([new_id[verts[a.owner[verts] == 1]], sub_ids])
    arcs_src = np.concatenate([
        new_id[src[~even_arc]], new_id[es], sub_ids, odd_nodes, [hub],
    ])
    arcs_dst = np.concatenate([
        new_id[dst[~even_arc]], sub_ids, new_id[ed], np.full(odd_nodes.size, hub), [new_id[s]],
    ])
    arena = Arena(owner, priority, arcs_src, arcs_dst)
    origin = np.concatenate([verts, np.full(n_sub + 1, -1, dtype=np.int64)])
    subs = tuple((int(i), (int(u), int(x))) for i, u, x in zip(sub_ids, es, ed))
    return PinnedGame(arena, origin, int(new_id[s]), hub, subs)


def odd_wins_everywhere(game) -> bool:
    """Reference recognizer: odd wins every vertex, per Zielonka."""
    view = as_view(game)
    regions = solve_zielonka(view).regions
    return not bool((regions.mask(Player.EVEN) & (view.alive == 1)).any())


def solve_via_global_recognizer(g, recognizer=odd_wins_everywhere, timings: dict | None = None) -> Regions:
    """Regions from one recognizer call per vertex on its pinned game.

    ``timings``, if given, receives the total build and recognizer times in
    seconds under ``"build"`` and ``"recognize"``.
    """
    view = as_view(g)
    winner = np.full(view.n, -1, dtype=np.int8)
    build = recog = 0.0
    for s in view.vertices().tolist():
        t0 = time.perf_counter()
        pinned = build_pinned_game(view, s)
        t1 = time.perf_counter()
        odd = recognizer(pinned.arena)
        recog += time.perf_counter() - t1
        build += t1 - t0
        winner[s] = 1 if odd else 0
    if timings is not None:
        timings["build"] = build
        timings["recognize"] = recog
    return Regions(winner)


def recognize_region(g, A) -> bool:
    """Whether ``A`` is exactly the odd winning region (decided by solving)."""
    view = as_view(g)
    claimed = view.mask(A)
    regions = solve_zielonka(view).regions
    return np.array_equal(claimed, regions.mask(Player.ODD) & (view.alive == 1))
