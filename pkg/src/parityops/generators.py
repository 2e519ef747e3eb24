"""Seeded instance generators, one per game class, with witness decompositions.

Randomness comes from numpy's counter-based Philox generator keyed by the
seed and a per-purpose stream label, so every output is a pure function of
its arguments and independent draws never share a stream.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .addvertex import ApexCertificate
from .core import Arena, Player
from .errors import GenerationError, InputError
from .joins import GJoinDecomposition, HalfJoinDecomposition, JoinDecomposition

CLASS_TAGS = (
    "random", "weak-tournament", "half-join", "join", "g-join",
    "block-cactus", "add-vertex", "single-player", "edgeless",
)
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GenSpec:
    cls: str = "random"
    n: int = 8
    max_priority: int = 4
    density: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.cls not in CLASS_TAGS:
            raise InputError(f"unknown class tag {self.cls!r}")
        if self.n < 0:
            raise InputError("n must be non-negative")
        if self.max_priority < 0:
            raise InputError("max priority must be non-negative")
        if not 0.0 <= self.density <= 1.0:
            raise InputError("density must lie in [0, 1]")


def rng(seed: int, *stream: int) -> np.random.Generator:
    """Independent Philox stream for ``(seed, *stream)``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed & _MASK64, *stream])))


class _Parts:
    """Mutable arc list used while assembling a game."""

    def __init__(self):
        self.owner: list = []
        self.priority: list = []
        self.src: list = []
        self.dst: list = []

    def add_vertices(self, owner, priority) -> np.ndarray:
        base = len(self.owner)
        self.owner.extend(int(x) for x in owner)
        self.priority.extend(int(x) for x in priority)
        return np.arange(base, len(self.owner))

    def add_arcs(self, src, dst):
        self.src.append(np.asarray(src, dtype=np.int64))
        self.dst.append(np.asarray(dst, dtype=np.int64))

    def arena(self) -> Arena:
        cat = lambda xs: np.concatenate(xs) if xs else np.empty(0, np.int64)  # noqa: E731
        return Arena(self.owner, self.priority, cat(self.src), cat(self.dst))


def _labels(r, n, max_priority, owner=None):
    owners = r.integers(0, 2, n) if owner is None else np.full(n, int(owner))
    return owners, r.integers(0, max_priority + 1, n)


def _random_arcs(r, ids, density, loops=True):
    k = ids.size
    pick = r.random((k, k)) < density
    if not loops:
        np.fill_diagonal(pick, False)
    s, t = np.nonzero(pick)
    return ids[s], ids[t]


def _orient(r, xs, ys):
    """At least one arc per pair ``(x, y)``; each direction or both, uniformly."""
    if xs.size == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    way = r.integers(0, 3, xs.size)
    fw, bw = way != 1, way != 0
    return np.concatenate([xs[fw], ys[bw]]), np.concatenate([ys[fw], xs[bw]])


def _cross(a, b):
    x, y = np.meshgrid(a, b, indexing="ij")
    return x.ravel(), y.ravel()


def _fill(parts: _Parts, r, cls: str, n: int, max_priority: int, density: float, owner=None):
    """Append an instance of a base class to ``parts``; returns its vertex ids."""
    if cls == "single-player":
        owner = Player(int(r.integers(0, 2))) if owner is None else owner
    o, p = _labels(r, n, max_priority, owner)
    ids = parts.add_vertices(o, p)
    if cls == "edgeless":
        return ids
    if cls in ("random", "single-player"):
        parts.add_arcs(*_random_arcs(r, ids, density))
        return ids
    if cls == "weak-tournament":
        ev, od = ids[o == 0], ids[o == 1]
        parts.add_arcs(*_orient(r, *_cross(ev, od)))
        for group in (ev, od):
            parts.add_arcs(*_random_arcs(r, group, density))
        return ids
    raise InputError(f"{cls!r} is not a base class")


def gen_random(spec: GenSpec) -> Arena:
    """Each ordered pair (self-loops included) is an arc with probability ``density``."""
    parts = _Parts()
    _fill(parts, rng(spec.seed, 1), "random", spec.n, spec.max_priority, spec.density)
    return parts.arena()


def gen_single_player(spec: GenSpec, owner=None) -> Arena:
    parts = _Parts()
    _fill(parts, rng(spec.seed, 2), "single-player", spec.n, spec.max_priority, spec.density, owner)
    return parts.arena()


def gen_edgeless(spec: GenSpec) -> Arena:
    parts = _Parts()
    _fill(parts, rng(spec.seed, 3), "edgeless", spec.n, spec.max_priority, spec.density)
    return parts.arena()


def gen_weak_tournament(spec: GenSpec) -> Arena:
    """Random owners; every even/odd pair gets one or both arcs; same-owner arcs per ``density``."""
    parts = _Parts()
    _fill(parts, rng(spec.seed, 4), "weak-tournament", spec.n, spec.max_priority, spec.density)
    return parts.arena()


def _split(r, n: int) -> int:
    return 0 if n == 0 else int(r.integers(1, n + 1)) if n == 1 else int(r.integers(1, n))


def gen_half_join(spec: GenSpec, single_owner=None, class_kind: str = "weak-tournament"):
    """Single-player side owned by ``single_owner`` joined to a ``class_kind`` side."""
    r = rng(spec.seed, 5)
    owner = Player(int(r.integers(0, 2))) if single_owner is None else Player(single_owner)
    k = _split(r, spec.n)
    parts = _Parts()
    single = _fill(parts, r, "single-player", k, spec.max_priority, spec.density, owner)
    rest = _fill(parts, r, class_kind, spec.n - k, spec.max_priority, spec.density)
    ro = np.asarray(parts.owner, dtype=np.int64)[rest] if rest.size else np.empty(0, np.int64)
    parts.add_arcs(*_orient(r, *_cross(single, rest[ro != int(owner)])))
    same = rest[ro == int(owner)]
    if same.size and single.size:
        x, y = _cross(single, same)
        pick = r.random((2, x.size)) < spec.density / 2
        parts.add_arcs(np.concatenate([x[pick[0]], y[pick[1]]]), np.concatenate([y[pick[0]], x[pick[1]]]))
    arena = parts.arena()
    return arena, HalfJoinDecomposition(frozenset(single.tolist()), frozenset(rest.tolist()), owner)


def gen_join(left: GenSpec, right: GenSpec, seed: int):
    """Disjoint sides (each from its own spec) plus cross arcs covering every opposite-owner pair.

    Same-owner cross pairs get arcs with half the left density. Sides use
    their spec's class tag, which must be a base class.
    """
    r = rng(seed, 6)
    parts = _Parts()
    a = _fill(parts, rng(left.seed, 61), left.cls, left.n, left.max_priority, left.density)
    b = _fill(parts, rng(right.seed, 62), right.cls, right.n, right.max_priority, right.density)
    owner = np.asarray(parts.owner, dtype=np.int64)
    oa, ob = owner[a], owner[b]
    for p in (0, 1):
        parts.add_arcs(*_orient(r, *_cross(a[oa == p], b[ob != p])))
        x, y = _cross(a[oa == p], b[ob == p])
        pick = r.random((2, x.size)) < left.density / 2
        parts.add_arcs(np.concatenate([x[pick[0]], y[pick[1]]]), np.concatenate([y[pick[0]], x[pick[1]]]))
    return parts.arena(), JoinDecomposition(frozenset(a.tolist()), frozenset(b.tolist()))


def gen_g_join(single: GenSpec, other: GenSpec, m_fraction: float, seed: int, single_owner=None):
    """Single-player side joined to a class side through a hub set ``M`` only."""
    if not 0.0 < m_fraction <= 1.0:
        raise InputError("m-fraction must lie in (0, 1]")
    r = rng(seed, 7)
    owner = Player(int(r.integers(0, 2))) if single_owner is None else Player(single_owner)
    parts = _Parts()
    s = _fill(parts, rng(single.seed, 71), "single-player", single.n, single.max_priority, single.density, owner)
    c = _fill(parts, rng(other.seed, 72), other.cls, other.n, other.max_priority, other.density)
    oc = np.asarray(parts.owner, dtype=np.int64)[c] if c.size else np.empty(0, np.int64)
    pool = c[oc != int(owner)]
    if pool.size == 0:
        raise GenerationError("class side has no vertex owned by the opponent of the single side")
    k = max(1, int(round(m_fraction * pool.size)))
    hub = np.sort(r.choice(pool, size=k, replace=False))
    parts.add_arcs(*_orient(r, *_cross(hub, s)))
    dec = GJoinDecomposition(frozenset(s.tolist()), frozenset(c.tolist()), frozenset(hub.tolist()), owner)
    return parts.arena(), dec


def gen_block_cactus(blocks: int, kinds=("clique", "cycle"), seed: int = 0, *,
                     block_size=(2, 5), max_priority: int = 4, density: float = 0.5) -> Arena:
    """Paste ``blocks`` clique or cycle blocks, each onto one earlier vertex.

    A clique block orients every pair one way or both; a cycle block is a
    directed cycle. The shared vertex keeps its owner and priority.
    """
    kinds = (kinds,) if isinstance(kinds, str) else tuple(kinds)
    if not kinds or any(k not in ("clique", "cycle") for k in kinds):
        raise InputError("block kinds must be 'clique' or 'cycle'")
    if blocks < 0:
        raise InputError("block count must be non-negative")
    lo, hi = block_size
    if lo < 2 or hi < lo:
        raise InputError("block sizes must be at least 2")
    r = rng(seed, 8)
    parts = _Parts()
    for b in range(blocks):
        kind = kinds[int(r.integers(0, len(kinds)))]
        size = int(r.integers(lo, hi + 1))
        if kind == "cycle" and size == 2 and hi > 2:
            size = 3
        if b == 0:
            o, p = _labels(r, size, max_priority)
            members = parts.add_vertices(o, p)
        else:
            anchor = int(r.integers(0, len(parts.owner)))
            o, p = _labels(r, size - 1, max_priority)
            members = np.concatenate([[anchor], parts.add_vertices(o, p)])
        if kind == "cycle":
            perm = r.permutation(members)
            parts.add_arcs(perm, np.roll(perm, -1))
        else:
            x, y = np.triu_indices(size, 1)
            parts.add_arcs(*_orient(r, members[x], members[y]))
        loops = members[r.random(size) < density / 4]
        parts.add_arcs(loops, loops)
    return parts.arena()


def gen_add_vertex(base: GenSpec, seed: int):
    """A game from ``base`` plus one extra vertex with arbitrary arcs; the extra vertex is last."""
    from .classes import CLASSES

    cls_name = base.cls
    if cls_name not in CLASSES:
        raise InputError(f"{cls_name!r} has no membership test")
    arena = generate(base).arena
    r = rng(seed, 9)
    n = arena.n
    u = n
    src, dst = arena.arc_src.tolist(), arena.succ_idx.tolist()
    out = np.flatnonzero(r.random(n) < base.density)
    inc = np.flatnonzero(r.random(n) < base.density)
    src += [u] * out.size + inc.tolist()
    dst += out.tolist() + [u] * inc.size
    if r.random() < base.density:
        src.append(u)
        dst.append(u)
    owner = np.append(arena.owner, int(r.integers(0, 2)))
    priority = np.append(arena.priority, int(r.integers(0, base.max_priority + 1)))
    return Arena(owner, priority, src, dst), ApexCertificate(u, cls_name)


class Instance(NamedTuple):
    arena: Arena
    witness: object = None


def generate(spec: GenSpec, **options) -> Instance:
    """Instance of ``spec.cls`` with its witness (decomposition or certificate).

    Composite classes split ``n`` between their parts; ``options`` are passed
    to the class generator (for example ``blocks`` for block cacti).
    """
    c, s = spec.cls, spec
    if c == "random":
        return Instance(gen_random(s))
    if c == "edgeless":
        return Instance(gen_edgeless(s))
    if c == "single-player":
        return Instance(gen_single_player(s, options.get("owner")))
    if c == "weak-tournament":
        return Instance(gen_weak_tournament(s))
    if c == "half-join":
        return Instance(*gen_half_join(s, options.get("single_owner"), options.get("class_kind", "weak-tournament")))
    r = rng(s.seed, 10)
    if c == "join":
        k = _split(r, s.n)
        kinds = ("edgeless", "weak-tournament", "single-player")
        lk = options.get("left_class") or kinds[int(r.integers(0, 3))]
        rk = options.get("right_class") or kinds[int(r.integers(0, 3))]
        left = replace(s, cls=lk, n=k, seed=int(r.integers(0, 2**63)))
        right = replace(s, cls=rk, n=s.n - k, seed=int(r.integers(0, 2**63)))
        return Instance(*gen_join(left, right, s.seed))
    if c == "g-join":
        k = _split(r, s.n)
        owner = options.get("single_owner")
        owner = Player(int(r.integers(0, 2))) if owner is None else Player(owner)
        single = replace(s, cls="single-player", n=k, seed=int(r.integers(0, 2**63)))
        kind = options.get("class_kind", "weak-tournament")
        # the class side needs at least one vertex owned by the opponent
        for attempt in range(64):
            other = replace(s, cls=kind, n=max(1, s.n - k), seed=int(r.integers(0, 2**63)))
            try:
                return Instance(*gen_g_join(single, other, options.get("m_fraction", 0.5), s.seed + attempt, owner))
            except GenerationError:
                continue
        raise GenerationError("could not place an opponent vertex on the class side")
    if c == "block-cactus":
        blocks = options.get("blocks") or max(1, s.n // 3)
        return Instance(gen_block_cactus(blocks, options.get("kinds", ("clique", "cycle")), s.seed,
                                         max_priority=s.max_priority, density=s.density))
    if c == "add-vertex":
        kind = options.get("base_class", "weak-tournament")
        base = replace(s, cls=kind, n=max(0, s.n - 1), seed=int(r.integers(0, 2**63)))
        return Instance(*gen_add_vertex(base, s.seed))
    raise InputError(f"unknown class tag {c!r}")
