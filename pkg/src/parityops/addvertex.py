"""Games one vertex away from a tractable class.

If removing some vertex ``v`` leaves a game in a hereditary class ``C``,
the two subgames left after removing the even and the odd attractor of
``v`` lie in ``C``. Solving both either exposes a region whose winner is
certain or shows that one player wins everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .attractor import _attract
from .core import Player, Regions, as_view
from .errors import InputError
from .halfsolve import WHOLE, HalfSolver, Solved, generic_solve, reduce_by, solved_empty


@dataclass(frozen=True)
class ApexCertificate:
    apex: int
    class_name: str

    def validate(self, g, member):
        view = as_view(g)
        if self.apex not in view or not member(view.without([self.apex])):
            raise InputError(f"vertex {self.apex} is not an apex for {self.class_name}")


def find_removable_vertex(g, member, class_name: str = "") -> ApexCertificate | None:
    """Smallest vertex whose removal leaves a game accepted by ``member``."""
    view = as_view(g)
    for v in view.vertices().tolist():
        if member(view.without([v])):
            return ApexCertificate(v, class_name)
    return None


def _single(n: int, v: int) -> np.ndarray:
    m = np.zeros(n, dtype=np.uint8)
    m[v] = 1
    return m


def half_solve_add_vertex(g, v: int, inner):
    """One step: probe the subgames outside the even and odd attractors of ``v``."""
    view = as_view(g)
    if view.count == 0:
        return solved_empty(view)
    if v not in view:
        return Solved(inner(view))
    target = _single(view.n, v)
    p1 = view.without(_attract(view, Player.EVEN, target).mask)
    r1 = inner(p1)
    odd = r1.mask(Player.ODD) & (p1.alive == 1)
    if odd.any():
        return reduce_by(view, Player.ODD, odd)
    p2 = view.without(_attract(view, Player.ODD, target).mask)
    r2 = inner(p2)
    even = r2.mask(Player.EVEN) & (p2.alive == 1)
    if even.any():
        return reduce_by(view, Player.EVEN, even)
    return WHOLE


def add_vertex_solver(apex: int, inner) -> HalfSolver:
    return HalfSolver("add-vertex", lambda view: half_solve_add_vertex(view, apex, inner))


def solve_add_vertex(g, apex: int, inner, *, audit=None) -> Regions:
    """Solve ``g`` given that ``g`` minus ``apex`` lies in the class ``inner`` solves."""
    view = as_view(g)
    if apex not in view:
        raise InputError(f"apex {apex} is not in the game")
    return generic_solve(view, add_vertex_solver(apex, inner), audit=audit)
