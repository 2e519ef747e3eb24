import numpy as np
import pytest

from conftest import G_APEX, G_CYC2, arena, oracle
from parityops import (
    CLASSES, EVEN, ODD, WHOLE, GenSpec, InputError, Reduced, Solved, ApexCertificate, as_view,
    find_removable_vertex, generate, half_solve_add_vertex, is_edgeless, is_weak_tournament,
    oracle_audit, solve_add_vertex, solve_zielonka,
)
from parityops.attractor import attract


def z(view):
    return solve_zielonka(view).regions


def test_find_examples():
    assert find_removable_vertex(G_APEX, is_weak_tournament).apex == 0
    tri = arena([(EVEN, 0)] * 3, [(0, 1), (1, 2), (2, 0)])
    assert find_removable_vertex(tri, is_edgeless) is None
    assert find_removable_vertex(arena([]), lambda g: True) is None
    cert = find_removable_vertex(G_APEX, is_weak_tournament, "weak-tournament")
    cert.validate(G_APEX, is_weak_tournament)
    with pytest.raises(InputError):
        ApexCertificate(0, "edgeless").validate(tri, is_edgeless)


def test_half_solve_apex_whole():
    assert half_solve_add_vertex(G_APEX, 2, z) is WHOLE
    assert solve_add_vertex(G_APEX, 2, z).odd == {0, 1, 2}


def test_half_solve_reduced_for_even():
    g = arena([(EVEN, 1), (ODD, 2), (EVEN, 0)], [(0, 1), (1, 0), (2, 2)])
    out = half_solve_add_vertex(g, 2, z)
    assert isinstance(out, Reduced) and out.won_even_star == {0, 1}
    assert solve_add_vertex(g, 2, z).even == {0, 1, 2}


def test_vanished_apex_is_solved_directly():
    g = as_view(G_APEX).without([2])
    out = half_solve_add_vertex(g, 2, z)
    assert isinstance(out, Solved) and out.regions.even == {0, 1}


def test_missing_apex_rejected():
    with pytest.raises(InputError):
        solve_add_vertex(G_CYC2, 7, z)


@pytest.mark.parametrize("base", ["weak-tournament", "edgeless", "block-cactus", "single-player"])
def test_differential(base):
    cls = CLASSES[base]
    audit = oracle_audit()
    for seed in range(80):
        inst = generate(GenSpec("add-vertex", 1 + seed % 25, 8, 0.5, seed), base_class=base)
        g, cert = inst.arena, inst.witness
        cert.validate(g, cls.member)
        assert find_removable_vertex(g, cls.member) is not None
        assert solve_add_vertex(g, cert.apex, cls.solver, audit=audit) == oracle(g), (base, seed)


@pytest.mark.parametrize("base", ["weak-tournament", "edgeless", "single-player"])
def test_probes_stay_in_class(base):
    cls = CLASSES[base]
    for seed in range(60):
        inst = generate(GenSpec("add-vertex", 1 + seed % 20, 6, 0.5, seed), base_class=base)
        view, v = as_view(inst.arena), inst.witness.apex
        for p in (EVEN, ODD):
            probe = view.without(attract(view, p, {v}).mask)
            assert cls.member(probe)
