import numpy as np
import pytest
from hypothesis import given, settings

from conftest import (
    G_APEX, G_CYC2, G_CYC2B, G_DEAD, G_EMPTY, G_LOOP, G_PASTE, G_SP, arena, arenas, oracle, random_corpus,
)
from parityops import (
    EVEN, ODD, GenSpec, InputError, Regions, SizeLimitError, gen_single_player, solve_brute_force,
    solve_single_player, solve_zielonka, verify_solution,
)


def test_single_player_examples():
    assert solve_single_player(G_SP, ODD).even == {0, 1}
    loop = arena([(ODD, 1)], [(0, 0)])
    assert solve_single_player(loop, ODD).odd == {0}
    path = arena([(ODD, 0), (ODD, 0)], [(0, 1)])
    assert solve_single_player(path, ODD).even == {0, 1}


def test_single_player_rejects_mixed_owners():
    with pytest.raises(InputError):
        solve_single_player(G_CYC2, EVEN)


def test_single_player_strategy_reaches_good_cycle():
    # 0 -> 1 -> 2 -> 1 with priority 2 on vertex 2 (good for even); 0 -> 3 self-loop priority 1
    g = arena([(EVEN, 0), (EVEN, 0), (EVEN, 2), (EVEN, 1)], [(0, 1), (1, 2), (2, 1), (0, 3), (3, 3)])
    r = solve_single_player(g, EVEN)
    assert r.even == {0, 1, 2} and r.odd == {3}
    assert verify_solution(g, Regions(r.winner, r.strategy))


def test_single_player_nested_cycles():
    # even owner: cycle 0<->1 has max 3 (bad) but inner self-loop at 0 with priority 2 is good
    g = arena([(EVEN, 2), (EVEN, 3)], [(0, 1), (1, 0), (0, 0)])
    assert solve_single_player(g).even == {0, 1}
    # odd owner: max 4 on the only cycle through 1, self-loop on 0 with priority 2 is bad too
    h = arena([(ODD, 2), (ODD, 4)], [(0, 1), (1, 0), (0, 0)])
    assert solve_single_player(h).even == {0, 1}


def test_zielonka_examples():
    assert solve_zielonka(G_CYC2).regions.even == {0, 1}
    assert solve_zielonka(G_CYC2B).regions.odd == {0, 1}
    assert solve_zielonka(G_APEX).regions.odd == {0, 1, 2}
    rep = solve_zielonka(G_APEX)
    assert rep.has_strategy and rep.calls >= 1


def test_brute_force_examples():
    assert solve_brute_force(G_LOOP).even == {0}
    assert solve_brute_force(G_DEAD).odd == {0}
    assert solve_brute_force(G_PASTE).even == {0, 1, 2}
    assert solve_brute_force(G_EMPTY) == Regions.empty(0)


def test_brute_force_cap():
    g = random_corpus(1, max_n=1)[0]
    big = arena([(EVEN, 0)] * 9, [(i, (i + 1) % 9) for i in range(9)])
    with pytest.raises(SizeLimitError):
        solve_brute_force(big)
    assert solve_brute_force(big, cap=9) == oracle(big)
    assert solve_brute_force(g) == oracle(g)


def test_verify_examples():
    z = solve_zielonka(G_CYC2).regions
    assert verify_solution(G_CYC2, z)
    swapped = Regions(1 - z.winner, z.strategy)
    verdict = verify_solution(G_CYC2, swapped)
    assert not verdict and verdict.witness is not None
    assert verify_solution(G_EMPTY, Regions.empty(0, with_strategy=True))


def test_verify_rejects_missing_strategy_and_coverage():
    z = solve_zielonka(G_CYC2).regions
    assert not verify_solution(G_CYC2, Regions(z.winner))
    partial = z.winner.copy()
    partial[1] = -1
    assert not verify_solution(G_CYC2, Regions(partial, z.strategy))


def test_verify_rejects_strategy_cycle_that_loses():
    # even owns 0 with choices: self-loop (priority 1, losing) or 1 (priority 2 loop)
    g = arena([(EVEN, 1), (EVEN, 2)], [(0, 0), (0, 1), (1, 1)])
    good = solve_zielonka(g).regions
    assert verify_solution(g, good)
    bad_strategy = good.strategy.copy()
    bad_strategy[0] = 0
    assert not verify_solution(g, Regions(good.winner, bad_strategy))


def test_single_player_matches_zielonka():
    for seed in range(500):
        g = gen_single_player(GenSpec("single-player", 1 + seed % 50, 8, [0.05, 0.1, 0.3][seed % 3], seed))
        assert solve_single_player(g) == oracle(g), seed


@settings(max_examples=200, deadline=None)
@given(arenas(max_n=6))
def test_zielonka_equals_brute_force_and_verifies(g):
    z = solve_zielonka(g).regions
    assert z == solve_brute_force(g)
    assert verify_solution(g, z)
    assert (z.winner >= 0).all()


def test_brute_force_backends_agree():
    from parityops import kernels

    for g in random_corpus(60, max_n=7):
        results = []
        for be in kernels.available():
            with kernels.use_backend(be):
                results.append(solve_brute_force(g))
        assert all(r == results[0] for r in results)
