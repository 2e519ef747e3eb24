"""Structural solvers for parity games.

The reference solvers (Zielonka, brute force) work on any game; the
structural ones exploit joins, weak tournaments, block decompositions and
apex vertices. Hot graph kernels come from a compiled extension when it is
built and from a pure-Python mirror otherwise; see :mod:`parityops.kernels`.
"""
from .addvertex import ApexCertificate, find_removable_vertex, half_solve_add_vertex, solve_add_vertex
from .attractor import AttractorResult, DeadEndResult, attract, eliminate_dead_ends, is_closed
from .auto import AutoResult, solve_auto
from .baseline import (
    SolverReport, Verdict, solve_brute_force, solve_single_player, solve_zielonka, verify_solution,
)
from .classes import CLASSES, GameClass, class_of, is_block_cactus, is_edgeless, is_single_player, solve_edgeless
from .core import (
    EVEN, ODD, Arena, Player, Regions, Subgame, as_view, opponent, priority_level, restrict,
    underlying_undirected,
)
from .errors import (
    ContractViolation, EmptyGameError, GenerationError, InputError, ParityError, PGSolverSyntaxError,
    SizeLimitError,
)
from .generators import (
    GenSpec, Instance, gen_add_vertex, gen_block_cactus, gen_edgeless, gen_g_join, gen_half_join, gen_join,
    gen_random, gen_single_player, gen_weak_tournament, generate,
)
from .halfsolve import (
    WHOLE, EpisodeStats, HalfSolver, Reduced, Solved, Whole, episode_log, generic_solve, oracle_audit, reduce_by,
)
from .io import SolutionFile, parse_pgsolver, parse_solution, write_pgsolver, write_solution
from .joins import (
    GJoinDecomposition, HalfJoinDecomposition, JoinDecomposition, detect_half_join, half_join_solver,
    half_solve_g_join, half_solve_half_join, half_solve_join, is_weak_tournament, solve_g_join,
    solve_half_join, solve_join, solve_weak_tournament,
)
from .kernels import backend_name, set_backend, use_backend
from .pasting import BlockCutTree, biconnected_components, solve_pasted
from .recognition import PinnedGame, build_pinned_game, recognize_region, solve_via_global_recognizer

__version__ = "0.1.0"
