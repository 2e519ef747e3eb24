import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import G_CYC2, G_DEAD, G_EMPTY, G_LOOP, arena, arenas, oracle, random_corpus
from parityops import (
    Arena, InputError, PGSolverSyntaxError, Regions, SolutionFile, parse_pgsolver, parse_solution,
    solve_zielonka, write_pgsolver, write_solution,
)
from parityops.cli import attach_strategy
from parityops.io import read_game


def same(a: Arena, b: Arena):
    return (a.n == b.n and a.owner.tolist() == b.owner.tolist() and a.priority.tolist() == b.priority.tolist()
            and sorted(a.arcs()) == sorted(b.arcs()))


CYC2_TEXT = "parity 1;\n0 1 0 1;\n1 2 1 0;\n"


def test_parse_examples():
    assert same(parse_pgsolver("parity 1;\n0 1 0 1;\n1 2 1 0;"), G_CYC2)
    g = parse_pgsolver('0 0 0 0 "loop";')
    assert same(g, G_LOOP) and g.names == ("loop",)
    assert same(parse_pgsolver("0 0 0 ;"), G_DEAD)
    assert parse_pgsolver("").n == 0
    assert parse_pgsolver("  \n\n").n == 0


def test_write_examples():
    assert write_pgsolver(G_CYC2) == CYC2_TEXT
    assert write_pgsolver(G_EMPTY) == ""
    assert write_pgsolver(G_DEAD) == "parity 0;\n0 0 0 ;\n"


def test_sparse_ids_and_any_order():
    g = parse_pgsolver("parity 40;\n40 2 1 7;\n7 1 0 40,7;\n")
    assert g.n == 2 and g.ids == (7, 40)
    assert sorted(g.arcs()) == [(0, 0), (0, 1), (1, 0)]
    assert write_pgsolver(g) == "parity 40;\n7 1 0 7,40;\n40 2 1 7;\n"


def test_line_endings_and_names():
    g = parse_pgsolver('parity 1;\r\n0 1 0 1 "a \\"q\\"";\r\n1 2 1 0;\r\n')
    assert g.names[0] == 'a "q"'
    back = parse_pgsolver(write_pgsolver(g))
    assert back.names == g.names


@pytest.mark.parametrize("text, line, col, what", [
    ("0 1 0 1;\n0 2 1 0;", 2, 1, "duplicate"),
    ("0 1 0 5;", 1, 7, "not declared"),
    ("0 -1 0 0;", 1, 3, "negative priority"),
    ("0 1 2 0;", 1, 5, "owner"),
    ("0 1 0 0", 1, 8, "';'"),
    ("0 1 0 0;\n1 x 0 0;", 2, 3, "priority"),
    ("0 1 0 0; @", 1, 10, "unexpected character"),
    ("parity ;", 1, 8, "maximum id"),
])
def test_syntax_errors(text, line, col, what):
    with pytest.raises(PGSolverSyntaxError) as e:
        parse_pgsolver(text)
    assert (e.value.line, e.value.column) == (line, col)
    assert what in str(e.value)


def test_strict_mode_rejects_dead_ends():
    with pytest.raises(PGSolverSyntaxError):
        parse_pgsolver("0 0 0 ;", strict=True)
    parse_pgsolver("0 0 0 0;", strict=True)


def test_round_trip_corpus():
    for g in random_corpus(1000, max_n=10):
        text = write_pgsolver(g)
        back = parse_pgsolver(text)
        assert same(back, g)
        assert write_pgsolver(back) == text


@settings(max_examples=200, deadline=None)
@given(arenas(max_n=8, max_priority=1000))
def test_round_trip_property(g):
    assert same(parse_pgsolver(write_pgsolver(g)), g)


def test_read_game(tmp_path):
    p = tmp_path / "g.gm"
    p.write_text(CYC2_TEXT)
    assert same(read_game(p), G_CYC2)


def test_solution_examples():
    regions = attach_strategy(G_CYC2, solve_zielonka(G_CYC2).regions)
    assert write_solution(regions) == "0 0 1\n1 0\n"
    assert write_solution(Regions.empty(0)) == ""
    sol = parse_solution("0 0 1\n1 0\n")
    assert sol.winner == {0: 0, 1: 0} and sol.strategy == {0: 1}
    assert sol.to_regions(G_CYC2) == regions


def test_solution_uses_external_ids():
    g = parse_pgsolver("parity 40;\n40 2 1 7;\n7 2 0 40,7;\n")
    regions = attach_strategy(g, solve_zielonka(g).regions)
    text = write_solution(regions, g)
    assert text.splitlines()[0].startswith("7 ")
    assert parse_solution(text).to_regions(g) == regions


@pytest.mark.parametrize("text", ["0\n", "0 2\n", "0 0\n0 1\n", "a b\n", "0 0 1 2\n"])
def test_solution_errors(text):
    with pytest.raises(PGSolverSyntaxError):
        parse_solution(text)


def test_solution_unknown_vertices():
    with pytest.raises(InputError):
        SolutionFile({5: 0}).to_regions(G_CYC2)
    with pytest.raises(InputError):
        SolutionFile({0: 0}, {0: 9}).to_regions(G_CYC2)
    with pytest.raises(InputError):
        SolutionFile({0: 1, 1: 1}, {0: 1}).validate(G_CYC2)


@settings(max_examples=200, deadline=None)
@given(arenas(max_n=7))
def test_solution_round_trip(g):
    regions = attach_strategy(g, oracle(g))
    assert parse_solution(write_solution(regions, g)).to_regions(g) == regions
