import numpy as np
import pytest
from hypothesis import given, settings

from conftest import G_APEX, G_CYC2, G_DEAD, arena, arenas, random_corpus
from parityops import (
    EVEN, ODD, InputError, Player, as_view, attract, eliminate_dead_ends, is_closed, solve_brute_force,
)


def test_attract_chain():
    # v0 (odd) -> v1 (even) -> v2 (even)
    g = arena([(ODD, 0), (EVEN, 0), (EVEN, 0)], [(0, 1), (1, 2), (2, 2)])
    res = attract(g, EVEN, {2})
    assert res.attracted == {0, 1, 2}
    assert res.strategy_map().get(1) == 2


def test_attract_empty_target_on_total_game():
    assert attract(G_CYC2, EVEN, set()).attracted == frozenset()


def test_attract_apex():
    assert attract(G_APEX, ODD, {2}).attracted == {0, 1, 2}


def test_attract_opponent_dead_end_is_vacuously_attracted():
    g = arena([(ODD, 0), (EVEN, 0)], [(1, 1)])
    assert attract(g, EVEN, set()).attracted == {0}


def test_attract_rejects_dead_target():
    view = as_view(G_CYC2).without({1})
    with pytest.raises(InputError):
        attract(view, EVEN, {1})


def test_is_closed_examples():
    assert is_closed(G_CYC2, EVEN, {0, 1})
    assert not is_closed(G_CYC2, EVEN, {0})
    assert is_closed(G_APEX, ODD, {0, 1, 2})


def test_eliminate_dead_ends_examples():
    red, won_even, won_odd = eliminate_dead_ends(G_DEAD)
    assert red.count == 0 and won_even == set() and won_odd == {0}
    red, won_even, won_odd = eliminate_dead_ends(G_CYC2)
    assert red.count == 2 and not won_even and not won_odd
    g = arena([(EVEN, 1), (ODD, 2)], [(0, 1)])
    red, won_even, won_odd = eliminate_dead_ends(g)
    assert red.count == 0 and won_even == {0, 1} and won_odd == set()


@settings(max_examples=150, deadline=None)
@given(arenas(max_n=7))
def test_attractor_invariants(g):
    view = as_view(g)
    for p in Player:
        for target in ({0} if g.n else set(), set(range(0, g.n, 2))):
            res = attract(g, p, target)
            m = res.mask
            assert target <= res.attracted
            # strategy edges of the player stay inside
            for v, s in res.strategy_map().items():
                assert g.owner[v] == p and m[s] and s in view.successors(v)
            # opponent vertices have every successor inside
            for v in res.attracted - target:
                if g.owner[v] != p:
                    assert all(m[w] for w in view.successors(v))
            # idempotent
            assert attract(g, p, res.attracted).attracted == res.attracted
            # complement of an attractor is closed for the opponent
            rest = set(range(g.n)) - res.attracted
            assert is_closed(g, p.opponent, rest)


@settings(max_examples=100, deadline=None)
@given(arenas(max_n=7))
def test_dead_end_elimination_agrees_with_brute_force(g):
    de = eliminate_dead_ends(g)
    assert de.reduced.is_total()
    truth = solve_brute_force(g)
    assert de.won_even <= truth.even
    assert de.won_odd <= truth.odd


def test_backends_agree_on_attractors():
    from parityops import kernels

    for g in random_corpus(120, max_n=12):
        view = as_view(g)
        target = np.zeros(g.n, dtype=np.uint8)
        target[::3] = 1
        for p in (0, 1):
            outs = []
            for be in kernels.available():
                with kernels.use_backend(be):
                    outs.append(kernels.attract(g, view.alive, view.outdeg, p, target))
            for other in outs[1:]:
                assert np.array_equal(outs[0][0], other[0])
                assert np.array_equal(outs[0][1], other[1])
                assert outs[0][2] == other[2]
