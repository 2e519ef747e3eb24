"""Rewrite the golden fixtures. Run only when generator output is meant to change."""
import pathlib

from parityops import GenSpec, generate, solve_zielonka, write_pgsolver, write_solution
from parityops.cli import attach_strategy

HERE = pathlib.Path(__file__).parent

# name -> (spec, generate options)
GOLDENS = {
    "random_n5_s42": (GenSpec("random", 5, 4, 0.5, 42), {}),
    "tournament_n6_s7": (GenSpec("weak-tournament", 6, 4, 0.5, 7), {}),
    "join_n8_s3": (GenSpec("join", 8, 6, 0.5, 3), {}),
    "gjoin_n8_s5": (GenSpec("g-join", 8, 6, 0.5, 5), {}),
    "cactus_s11": (GenSpec("block-cactus", 20, 8, 0.5, 11), {"blocks": 6}),
    "apex_n9_s2": (GenSpec("add-vertex", 9, 6, 0.5, 2), {}),
}


def build(name):
    spec, options = GOLDENS[name]
    inst = generate(spec, **options)
    regions = attach_strategy(inst.arena, solve_zielonka(inst.arena).regions)
    return write_pgsolver(inst.arena), write_solution(regions, inst.arena)


if __name__ == "__main__":
    for name in GOLDENS:
        game, sol = build(name)
        (HERE / f"{name}.gm").write_text(game, newline="\n")
        (HERE / f"{name}.sol").write_text(sol, newline="\n")
