import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import G_CYC2, G_CYC2B, G_SP, arena, oracle
from parityops import (
    EVEN, ODD, WHOLE, GenSpec, GJoinDecomposition, HalfJoinDecomposition, InputError, JoinDecomposition,
    Reduced, Solved, as_view, detect_half_join, gen_single_player, gen_weak_tournament, generate, half_solve_g_join,
    half_solve_half_join, half_solve_join, is_weak_tournament, oracle_audit, solve_edgeless, solve_g_join,
    solve_half_join, solve_join, solve_single_player, solve_weak_tournament, solve_zielonka,
)


def z(view):
    return solve_zielonka(view).regions


def test_is_weak_tournament_examples():
    assert is_weak_tournament(G_CYC2)
    assert is_weak_tournament(arena([(EVEN, 1), (ODD, 2)], [(0, 1)]))
    assert not is_weak_tournament(arena([(EVEN, 0), (ODD, 0)]))


def test_detect_examples():
    d = detect_half_join(G_CYC2, EVEN)
    assert d.single_side == {0} and d.class_side == {1} and d.single_owner == EVEN
    assert detect_half_join(arena([(EVEN, 0), (ODD, 0)]), EVEN) is None
    d = detect_half_join(G_SP, ODD)
    assert d.single_side == {0, 1} and d.class_side == set()


def test_detection_on_weak_tournaments_splits_by_owner():
    for seed in range(300):
        g = gen_weak_tournament(GenSpec("weak-tournament", 1 + seed % 12, 6, 0.3 + 0.6 * (seed % 3) / 2, seed))
        odd = set(np.flatnonzero(g.owner == 1).tolist())
        d = detect_half_join(g, ODD)
        if not odd:
            assert d is None
            continue
        assert d.single_side == odd
        d.validate(g)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_detection_soundness(data):
    from conftest import arenas

    g = data.draw(arenas(max_n=7))
    for p in (EVEN, ODD):
        d = detect_half_join(g, p)
        if d is not None:
            d.validate(g)


def test_half_join_reduced_example():
    # p even (2) with a self-loop, q odd (1); p <-> q
    g = arena([(EVEN, 2), (ODD, 1)], [(0, 1), (1, 0), (0, 0)])
    dec = detect_half_join(g, ODD)
    assert dec.single_side == {1}
    out = half_solve_half_join(g, dec, solve_single_player)
    assert isinstance(out, Reduced)
    assert out.won_even_star == {0, 1} and out.won_odd_star == set()
    assert solve_half_join(g, dec, solve_single_player).even == {0, 1}


def test_half_join_whole_example():
    dec = HalfJoinDecomposition(frozenset({1}), frozenset({0}), ODD)
    assert half_solve_half_join(G_CYC2, dec, solve_single_player) is WHOLE


def test_half_join_empty():
    g = arena([])
    out = half_solve_half_join(g, HalfJoinDecomposition(frozenset(), frozenset(), ODD), solve_single_player)
    assert isinstance(out, Solved)


def test_half_join_validation():
    g = arena([(EVEN, 0), (ODD, 0)])
    with pytest.raises(InputError):
        solve_half_join(g, HalfJoinDecomposition(frozenset({1}), frozenset({0}), ODD), solve_single_player)
    with pytest.raises(InputError):
        solve_half_join(G_CYC2, HalfJoinDecomposition(frozenset({0}), frozenset({1}), ODD), solve_single_player)
    with pytest.raises(InputError):
        solve_half_join(G_CYC2, HalfJoinDecomposition(frozenset({1}), frozenset(), ODD), solve_single_player)


def test_weak_tournament_examples():
    assert solve_weak_tournament(G_CYC2).even == {0, 1}
    assert solve_weak_tournament(G_CYC2B).odd == {0, 1}
    for seed in range(100):
        g = gen_single_player(GenSpec("single-player", 1 + seed % 20, 6, 0.3, seed))
        assert solve_weak_tournament(g) == solve_single_player(g)
    with pytest.raises(InputError):
        solve_weak_tournament(arena([(EVEN, 0), (ODD, 0)]))


def test_weak_tournament_differential():
    audit = oracle_audit()
    for seed in range(200):
        g = gen_weak_tournament(GenSpec("weak-tournament", 1 + seed % 30, 10, [0.2, 0.5, 0.9][seed % 3], seed))
        assert solve_weak_tournament(g, audit=audit) == oracle(g), seed


def test_join_edgeless_examples():
    # the probes follow the left/right roles of the decomposition, so here the
    # second probe already sees the whole game and reduces it for even
    dec = JoinDecomposition(frozenset({0}), frozenset({1}))
    audit = oracle_audit()
    for pris in ((2, 1), (1, 2)):
        g = arena([(EVEN, pris[0]), (ODD, pris[1])], [(0, 1), (1, 0)])
        out = half_solve_join(g, dec, solve_edgeless, solve_edgeless)
        audit(as_view(g), out)
        assert isinstance(out, Reduced) and out.won_even_star == {0, 1}
        assert solve_join(g, dec, solve_edgeless, solve_edgeless).even == {0, 1}


def test_join_cyc2b_with_single_vertex():
    # left: G_CYC2B, right: r odd (0) linked both ways with the even vertex of left
    g = arena([(EVEN, 1), (ODD, 3), (ODD, 0)], [(0, 1), (1, 0), (0, 2), (2, 0)])
    dec = JoinDecomposition(frozenset({0, 1}), frozenset({2}))
    assert solve_join(g, dec, z, z, audit=oracle_audit()) == oracle(g)


def test_join_validation():
    g = arena([(EVEN, 0), (ODD, 0)])
    with pytest.raises(InputError):
        solve_join(g, JoinDecomposition(frozenset({0}), frozenset({1})), z, z)


def test_join_differential():
    audit = oracle_audit()
    for seed in range(150):
        inst = generate(GenSpec("join", 2 + seed % 20, 8, 0.5, seed))
        dec = inst.witness
        assert solve_join(inst.arena, dec, z, z, audit=audit) == oracle(inst.arena), seed


def test_edgeless_sides_join_differential():
    for seed in range(100):
        inst = generate(GenSpec("join", 2 + seed % 16, 8, 0.5, seed), left_class="edgeless", right_class="edgeless")
        assert solve_join(inst.arena, inst.witness, solve_edgeless, solve_edgeless) == oracle(inst.arena), seed


def test_g_join_example_probe_two():
    # s odd (1), c even (0) with a self-loop, s <-> c
    g = arena([(ODD, 1), (EVEN, 0)], [(0, 1), (1, 0), (1, 1)])
    dec = GJoinDecomposition(frozenset({0}), frozenset({1}), frozenset({1}), ODD)
    out = half_solve_g_join(g, dec, z)
    assert isinstance(out, Reduced) and out.won_even_star == {0, 1}
    assert solve_g_join(g, dec, z).even == {0, 1}


def test_g_join_class_side_claim_needs_hub_attractor():
    # x even (1) with a self-loop is the hub; w odd (0) self-loop is the single side; x -> w.
    # alone, x is lost by even, but in the game even escapes to w and wins.
    g = arena([(EVEN, 1), (ODD, 0)], [(0, 0), (1, 1), (0, 1)])
    dec = GJoinDecomposition(frozenset({1}), frozenset({0}), frozenset({0}), ODD)
    assert oracle(g).even == {0, 1}
    assert half_solve_g_join(g, dec, z) is WHOLE
    assert solve_g_join(g, dec, z, audit=oracle_audit()).even == {0, 1}


def test_g_join_full_join_matches_half_join():
    for g in (G_CYC2, G_CYC2B):
        hj = HalfJoinDecomposition(frozenset({1}), frozenset({0}), ODD)
        gj = GJoinDecomposition(frozenset({1}), frozenset({0}), frozenset({0}), ODD)
        a, b = half_solve_half_join(g, hj, solve_single_player), half_solve_g_join(g, gj, solve_single_player)
        assert type(a) is type(b)
        assert solve_g_join(g, gj, solve_single_player) == solve_half_join(g, hj, solve_single_player)


def test_g_join_empty_hub_disconnected():
    # two unrelated parts: odd single side (loop, 3) and an even class side (loop, 2)
    g = arena([(ODD, 3), (EVEN, 2)], [(0, 0), (1, 1)])
    dec = GJoinDecomposition(frozenset({0}), frozenset({1}), frozenset(), ODD)
    assert solve_g_join(g, dec, z, audit=oracle_audit()) == oracle(g)


def test_g_join_validation():
    g = arena([(ODD, 1), (EVEN, 0), (EVEN, 0)], [(0, 1), (1, 0), (0, 2)])
    # arc 0 -> 2 crosses outside the hub
    with pytest.raises(InputError):
        solve_g_join(g, GJoinDecomposition(frozenset({0}), frozenset({1, 2}), frozenset({1}), ODD), z)
    # hub vertex owned by the single side's owner
    h = arena([(ODD, 1), (ODD, 0)], [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        solve_g_join(h, GJoinDecomposition(frozenset({0}), frozenset({1}), frozenset({1}), ODD), z)


def test_g_join_differential():
    audit = oracle_audit()
    for seed in range(200):
        inst = generate(GenSpec("g-join", 2 + seed % 20, 8, [0.2, 0.5, 0.9][seed % 3], seed),
                        m_fraction=[0.1, 0.3, 1.0][seed % 3])
        inst.witness.validate(inst.arena)
        assert solve_g_join(inst.arena, inst.witness, z, audit=audit) == oracle(inst.arena), seed


def test_half_join_differential_both_owners():
    audit = oracle_audit()
    for seed in range(200):
        owner = (EVEN, ODD)[seed % 2]
        inst = generate(GenSpec("half-join", 1 + seed % 25, 8, 0.5, seed), single_owner=owner)
        assert solve_half_join(inst.arena, inst.witness, z, audit=audit) == oracle(inst.arena), seed
