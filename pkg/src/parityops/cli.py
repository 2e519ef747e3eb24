"""Command-line front end: ``parityops solve|gen|verify|bench``.

Exit codes: 0 success, 1 solution rejected by ``verify``, 2 unreadable
input or bad flags, 3 method not applicable to the game, 4 internal
contract violation. Solutions go to stdout (or ``-o``); everything else
goes to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

import numpy as np

from . import kernels
from .addvertex import ApexCertificate, find_removable_vertex, solve_add_vertex
from .auto import solve_auto
from .baseline import solve_brute_force, solve_single_player, solve_zielonka, verify_solution
from .classes import CLASSES, class_of, get_class
from .core import Player, Regions, as_view
from .errors import ContractViolation, GenerationError, InputError, SizeLimitError
from .generators import CLASS_TAGS, GenSpec, generate
from .io import parse_pgsolver, parse_solution, write_pgsolver, write_solution
from .joins import (
    GJoinDecomposition, HalfJoinDecomposition, JoinDecomposition, detect_half_join,
    is_weak_tournament, solve_g_join, solve_half_join, solve_join, solve_weak_tournament,
)
from .pasting import biconnected_components, solve_pasted
from .recognition import solve_via_global_recognizer

EXIT_OK, EXIT_REJECTED, EXIT_INPUT, EXIT_INAPPLICABLE, EXIT_CONTRACT = 0, 1, 2, 3, 4
METHODS = ("auto", "zielonka", "brute", "tournament", "halfjoin", "join", "gjoin",
           "paste", "addvertex", "recognition")
CLASS_ALIASES = {"tournament": "weak-tournament", "cactus": "block-cactus"}
CROSSCHECK_ENV = "PARITYOPS_CROSSCHECK_CAP"
DEFAULT_CROSSCHECK_CAP = 200


class Inapplicable(Exception):
    """The requested method does not apply to the input game."""


def _log(msg: str):
    print(msg, file=sys.stderr)


# -- decomposition sidecars ---------------------------------------------------

def _to_ext(arena, vs):
    ext = arena.ids or range(arena.n)
    return sorted(ext[v] for v in vs)


def _from_ext(arena, vs):
    index = {v: i for i, v in enumerate(arena.ids or range(arena.n))}
    try:
        return frozenset(index[int(v)] for v in vs)
    except KeyError as e:
        raise InputError(f"decomposition mentions unknown vertex {e.args[0]}") from None


def witness_to_json(arena, witness, class_names: dict | None = None) -> dict:
    """Sidecar document for a decomposition or certificate (external ids)."""
    extra = class_names or {}
    if isinstance(witness, HalfJoinDecomposition):
        d = {"kind": "half-join", "single_side": _to_ext(arena, witness.single_side),
             "class_side": _to_ext(arena, witness.class_side), "single_owner": int(witness.single_owner)}
    elif isinstance(witness, JoinDecomposition):
        d = {"kind": "join", "left": _to_ext(arena, witness.left), "right": _to_ext(arena, witness.right)}
    elif isinstance(witness, GJoinDecomposition):
        d = {"kind": "g-join", "single_side": _to_ext(arena, witness.single_side),
             "class_side": _to_ext(arena, witness.class_side), "m_set": _to_ext(arena, witness.m_set),
             "single_owner": int(witness.single_owner)}
    elif isinstance(witness, ApexCertificate):
        ext = arena.ids or range(arena.n)
        d = {"kind": "add-vertex", "apex": ext[witness.apex], "class": witness.class_name}
    else:
        raise TypeError(f"no sidecar form for {type(witness).__name__}")
    d.update(extra)
    return d


def witness_from_json(arena, d: dict):
    kind = d.get("kind")
    try:
        if kind == "half-join":
            return HalfJoinDecomposition(_from_ext(arena, d["single_side"]), _from_ext(arena, d["class_side"]),
                                         Player(int(d["single_owner"])))
        if kind == "join":
            return JoinDecomposition(_from_ext(arena, d["left"]), _from_ext(arena, d["right"]))
        if kind == "g-join":
            return GJoinDecomposition(_from_ext(arena, d["single_side"]), _from_ext(arena, d["class_side"]),
                                      _from_ext(arena, d["m_set"]), Player(int(d["single_owner"])))
        if kind == "add-vertex":
            (apex,) = _from_ext(arena, [d["apex"]])
            return ApexCertificate(apex, d.get("class", ""))
        if kind == "block-cactus":
            return None
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed {kind} decomposition: {e}") from None
    raise InputError(f"unknown decomposition kind {kind!r}")


def _block_sidecar(arena) -> dict:
    tree = biconnected_components(arena)
    return {"kind": "block-cactus", "blocks": [_to_ext(arena, b) for b in tree.blocks],
            "cut_vertices": _to_ext(arena, tree.cut_vertices)}


# -- solving ------------------------------------------------------------------

def _side_class(view, side, name=None):
    if name:
        return get_class(name)
    cls = class_of(view.restrict(side))
    if cls is None:
        raise Inapplicable("a side of the decomposition lies in no shipped class")
    return cls


def _load_sidecar(arena, path):
    if path is None:
        return None, {}
    try:
        with open(path, encoding="utf-8") as fh:
            d = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read decomposition {path}: {e}") from None
    return witness_from_json(arena, d), d


def run_method(arena, method: str, sidecar=None) -> Regions:
    view = as_view(arena)
    dec, doc = _load_sidecar(arena, sidecar)
    if method == "auto":
        res = solve_auto(view)
        for line in res.trace:
            _log(f"auto: {line}")
        return res.regions
    if method == "zielonka":
        return solve_zielonka(view).regions
    if method == "brute":
        try:
            return solve_brute_force(view)
        except SizeLimitError as e:
            raise Inapplicable(str(e)) from None
    if method == "tournament":
        if not is_weak_tournament(view):
            raise Inapplicable("game is not a weak tournament")
        return solve_weak_tournament(view)
    if method == "halfjoin":
        if dec is None:
            dec = detect_half_join(view, Player.ODD) or detect_half_join(view, Player.EVEN)
            if dec is None:
                raise Inapplicable("no half-join decomposition found")
        _require(dec, HalfJoinDecomposition)
        cls = _side_class(view, dec.class_side, doc.get("class"))
        _log(f"halfjoin: class side {cls.name}")
        return solve_half_join(view, dec, cls.solver)
    if method == "join":
        if dec is None:
            hj = detect_half_join(view, Player.ODD) or detect_half_join(view, Player.EVEN)
            if hj is None:
                raise Inapplicable("no join decomposition found")
            dec = JoinDecomposition(hj.class_side, hj.single_side)
        _require(dec, JoinDecomposition)
        left = _side_class(view, dec.left, doc.get("left_class"))
        right = _side_class(view, dec.right, doc.get("right_class"))
        _log(f"join: left {left.name}, right {right.name}")
        return solve_join(view, dec, left.solver, right.solver)
    if method == "gjoin":
        if dec is None:
            hj = detect_half_join(view, Player.ODD) or detect_half_join(view, Player.EVEN)
            if hj is None:
                raise Inapplicable("no G-join decomposition found")
            m = view.mask(hj.class_side) & view.owned_by(Player(hj.single_owner).opponent)
            dec = GJoinDecomposition(hj.single_side, hj.class_side, frozenset(np.flatnonzero(m).tolist()),
                                     hj.single_owner)
        _require(dec, GJoinDecomposition)
        cls = _side_class(view, dec.class_side, doc.get("class"))
        _log(f"gjoin: class side {cls.name}")
        return solve_g_join(view, dec, cls.solver)
    if method == "paste":
        return solve_pasted(view)
    if method == "addvertex":
        if dec is None:
            for cls in CLASSES.values():
                dec = find_removable_vertex(view, cls.member, cls.name)
                if dec is not None:
                    break
            if dec is None:
                raise Inapplicable("no vertex leaves a shipped class when removed")
        _require(dec, ApexCertificate)
        cls = get_class(dec.class_name) if dec.class_name else class_of(view.without([dec.apex]))
        if cls is None or not cls.member(view.without([dec.apex])):
            raise Inapplicable(f"vertex {dec.apex} is not an apex for a shipped class")
        _log(f"addvertex: apex {dec.apex}, class {cls.name}")
        return solve_add_vertex(view, dec.apex, cls.solver)
    if method == "recognition":
        m = view.num_arcs
        _log(f"recognition: building {view.count} pinned games of up to {view.count + m + 1} vertices each")
        return solve_via_global_recognizer(view)
    raise InputError(f"unknown method {method!r}")


def _require(dec, kind):
    if not isinstance(dec, kind):
        raise InputError(f"decomposition is not a {kind.__name__}")


def attach_strategy(arena, regions: Regions) -> Regions:
    """Regions with winning strategies, computed inside each region if missing.

    Each region is a trap for the loser, so a winning strategy of the
    subgame on the region wins in the whole game. The subgame must be won
    entirely by the region's owner, otherwise the regions are wrong.
    """
    if regions.strategy is not None and (
        (regions.strategy >= 0) | (regions.winner != arena.owner.astype(np.int8))
    ).all():
        return regions
    view = as_view(arena)
    strategy = np.full(arena.n, -1, dtype=np.int64)
    for p in (Player.EVEN, Player.ODD):
        region = regions.mask(p) & (view.alive == 1)
        if not region.any():
            continue
        sub = solve_zielonka(view.restrict(region)).regions
        if (sub.mask(p.opponent) & region).any():
            raise ContractViolation(f"claimed {p.name} region is not won by {p.name}")
        sel = region & (arena.owner == int(p))
        strategy[sel] = sub.strategy[sel]
    return Regions(regions.winner.copy(), strategy)


# -- commands -----------------------------------------------------------------

def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _emit(text: str, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    arena = parse_pgsolver(_read_text(args.input), strict=args.strict)
    t0 = time.perf_counter()
    regions = run_method(arena, args.method, args.decomposition)
    elapsed = time.perf_counter() - t0
    _log(f"solve: method {args.method}, {arena.n} vertices, {arena.num_arcs} arcs, {elapsed:.3f}s")
    if not args.no_strategy:
        regions = attach_strategy(arena, regions)
    if args.verify:
        verdict = verify_solution(arena, regions)
        if not verdict:
            raise ContractViolation(f"verification failed at vertex {verdict.witness}: {verdict.reason}")
        if solve_zielonka(arena).regions != regions:
            raise ContractViolation("result disagrees with Zielonka")
        _log("solve: verified")
    _emit(write_solution(regions, arena), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    arena = parse_pgsolver(_read_text(args.input), strict=args.strict)
    sol = parse_solution(_read_text(args.solution))
    sol.validate(arena)
    regions = sol.to_regions(arena)
    verdict = verify_solution(arena, regions)
    if not verdict:
        v = verdict.witness
        ext = arena.external_id(v) if v is not None else None
        _log(f"verify: rejected at vertex {ext}: {verdict.reason}")
        return EXIT_REJECTED
    _log("verify: accepted")
    return EXIT_OK


def _spec_from_args(args) -> GenSpec:
    cls = CLASS_ALIASES.get(args.cls, args.cls)
    return GenSpec(cls, args.n, args.max_priority, args.density, args.seed)


def cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    options = {}
    if args.blocks is not None:
        options["blocks"] = args.blocks
    if args.kinds:
        options["kinds"] = tuple(args.kinds.split(","))
    inst = generate(spec, **options)
    _emit(write_pgsolver(inst.arena), args.output)
    sidecar = args.sidecar or (f"{args.output}.dec.json" if args.output and args.output != "-" else None)
    doc = None
    if inst.witness is not None:
        doc = witness_to_json(inst.arena, inst.witness)
    elif spec.cls == "block-cactus":
        doc = _block_sidecar(inst.arena)
    if doc is not None and sidecar:
        with open(sidecar, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        _log(f"gen: decomposition written to {sidecar}")
    _log(f"gen: {spec.cls}, {inst.arena.n} vertices, {inst.arena.num_arcs} arcs")
    return EXIT_OK


# natural solver of each class, used by bench when --method is not given
def _natural(inst, cls):
    view = as_view(inst.arena)
    w = inst.witness
    if cls == "weak-tournament":
        return "tournament", lambda: solve_weak_tournament(view)
    if cls == "half-join":
        return "halfjoin", lambda: solve_half_join(view, w, CLASSES["weak-tournament"].solver)
    if cls == "join":
        left, right = class_of(view.restrict(w.left)), class_of(view.restrict(w.right))
        return "join", lambda: solve_join(view, w, left.solver, right.solver)
    if cls == "g-join":
        return "gjoin", lambda: solve_g_join(view, w, CLASSES["weak-tournament"].solver)
    if cls == "block-cactus":
        return "paste", lambda: solve_pasted(view)
    if cls == "add-vertex":
        return "addvertex", lambda: solve_add_vertex(view, w.apex, CLASSES[w.class_name].solver)
    if cls == "single-player":
        return "single-player", lambda: solve_single_player(view)
    return "zielonka", lambda: solve_zielonka(view).regions


def _int_list(text):
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def _crosscheck_cap() -> int:
    raw = os.environ.get(CROSSCHECK_ENV)
    if raw is None:
        return DEFAULT_CROSSCHECK_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{CROSSCHECK_ENV} must be an integer") from None


BENCH_COLUMNS = ["class", "n", "seed", "method", "wall_time_ns", "vertices", "arcs", "agreement"]


def cmd_bench(args) -> int:
    classes = [CLASS_ALIASES.get(c, c) for c in args.classes.split(",") if c]
    sizes, seeds = _int_list(args.sizes), _int_list(args.seeds)
    if not seeds:
        seeds = [0]
    cap = _crosscheck_cap()
    out = open(args.csv, "w", newline="", encoding="utf-8") if args.csv and args.csv != "-" else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        for cls in classes:
            for n in sizes:
                for seed in seeds:
                    spec = GenSpec(cls, n, args.max_priority, args.density, seed)
                    inst = generate(spec)
                    if args.method:
                        name = args.method
                        fn = (lambda a=inst.arena: run_method(a, name))
                    else:
                        name, fn = _natural(inst, cls)
                    t0 = time.perf_counter_ns()
                    regions = fn()
                    dt = time.perf_counter_ns() - t0
                    agree = ""
                    if inst.arena.n <= cap:
                        agree = str(solve_zielonka(inst.arena).regions == regions).lower()
                    writer.writerow([cls, n, seed, name, dt, inst.arena.n, inst.arena.num_arcs, agree])
                    out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parityops", description="Structural parity game solvers.")
    p.add_argument("--backend", choices=("auto", "compiled", "python"), default="auto",
                   help="kernel backend (default: compiled when available)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a PGSolver game")
    s.add_argument("--input", "-i", required=True, help="game file, or - for stdin")
    s.add_argument("--method", "-m", choices=METHODS, default="auto")
    s.add_argument("--decomposition", "-d", help="JSON sidecar with a decomposition or apex certificate")
    s.add_argument("--output", "-o", help="solution file (default stdout)")
    s.add_argument("--verify", action="store_true", help="check the result against its strategies and Zielonka")
    s.add_argument("--no-strategy", action="store_true", help="omit strategy successors")
    s.add_argument("--strict", action="store_true", help="reject vertices without successors")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution file against a game")
    v.add_argument("--input", "-i", required=True)
    v.add_argument("--solution", "-s", required=True)
    v.add_argument("--strict", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="generate a seeded instance")
    g.add_argument("--class", dest="cls", required=True,
                   choices=sorted(set(CLASS_TAGS) | set(CLASS_ALIASES)))
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--max-priority", type=int, default=4)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--blocks", type=int, help="block count for block-cactus")
    g.add_argument("--kinds", help="block kinds for block-cactus, e.g. clique,cycle")
    g.add_argument("--output", "-o", help="game file (default stdout)")
    g.add_argument("--sidecar", help="decomposition file (default <output>.dec.json)")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time solvers on generated instances")
    b.add_argument("--classes", default="weak-tournament")
    b.add_argument("--sizes", default="", help="comma-separated sizes")
    b.add_argument("--seeds", default="0", help="comma-separated seeds")
    b.add_argument("--method", choices=METHODS, help="force one method instead of each class's own")
    b.add_argument("--max-priority", type=int, default=8)
    b.add_argument("--density", type=float, default=0.5)
    b.add_argument("--csv", help="output CSV (default stdout)")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        if args.backend != "auto":
            kernels.set_backend(args.backend)
        return args.func(args)
    except Inapplicable as e:
        _log(f"error: {e}")
        return EXIT_INAPPLICABLE
    except (ContractViolation, AssertionError) as e:
        _log(f"contract violation: {e}")
        return EXIT_CONTRACT
    except (InputError, GenerationError) as e:
        _log(f"error: {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
