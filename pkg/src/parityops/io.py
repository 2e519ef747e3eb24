"""PGSolver game format and a line-based solution format.

Game files look like::

    parity 1;
    0 1 0 1;
    1 2 1 0 "name";

Each statement is ``<id> <priority> <owner> <succ>,<succ>,... ["name"];``
with owner 0 for Even and 1 for Odd. An empty successor list marks a dead
end; this is an extension of the usual format and ``strict=True`` rejects
it. Ids may be sparse; they are compacted in ascending order and the
originals are kept in ``Arena.ids``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .core import Arena, Regions
from .errors import InputError, PGSolverSyntaxError

_TOKEN = re.compile(
    r'(?P<ws>\s+)|(?P<int>[+-]?\d+)|(?P<str>"(?:[^"\\\n]|\\.)*")|(?P<punct>[;,])|(?P<word>[A-Za-z_]\w*)'
)


def _tokens(text: str):
    line, col_base, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PGSolverSyntaxError(f"unexpected character {text[pos]!r}", line, pos - col_base + 1)
        kind = m.lastgroup
        value = m.group()
        col = pos - col_base + 1
        if kind == "ws":
            nl = value.count("\n")
            if nl == 0 and "\r" in value:
                nl = value.count("\r")
            if nl:
                line += nl
                col_base = pos + max(value.rfind("\n"), value.rfind("\r")) + 1
        else:
            yield kind, value, line, col
        pos = m.end()
    yield "eof", "", line, pos - col_base + 1


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s[1:-1])


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.advance()

    def advance(self):
        self.kind, self.value, self.line, self.col = next(self.toks)

    def fail(self, msg):
        raise PGSolverSyntaxError(msg, self.line, self.col)

    def expect(self, kind, value=None, what=None):
        if self.kind != kind or (value is not None and self.value != value):
            found = self.value or "end of input"
            self.fail(f"expected {what or value or kind}, found {found!r}")
        tok = (self.value, self.line, self.col)
        self.advance()
        return tok

    def integer(self, what):
        value, line, col = self.expect("int", what=what)
        return int(value), line, col


def parse_pgsolver(text: str, *, strict: bool = False) -> Arena:
    """Parse PGSolver text; raises :class:`PGSolverSyntaxError` with line and column."""
    p = _Parser(text)
    if p.kind == "word" and p.value == "parity":
        p.advance()
        p.integer("maximum id")
        p.expect("punct", ";")
    rows = {}
    where = {}
    while p.kind != "eof":
        vid, line, col = p.integer("vertex id")
        if vid < 0:
            raise PGSolverSyntaxError(f"negative vertex id {vid}", line, col)
        if vid in rows:
            raise PGSolverSyntaxError(f"duplicate vertex id {vid}", line, col)
        pri, pl, pc = p.integer("priority")
        if pri < 0:
            raise PGSolverSyntaxError(f"negative priority {pri}", pl, pc)
        owner, ol, oc = p.integer("owner")
        if owner not in (0, 1):
            raise PGSolverSyntaxError(f"owner must be 0 or 1, found {owner}", ol, oc)
        succ = []
        if p.kind == "int":
            while True:
                w, wl, wc = p.integer("successor")
                succ.append((w, wl, wc))
                if p.kind == "punct" and p.value == ",":
                    p.advance()
                    continue
                break
        elif strict:
            p.fail(f"vertex {vid} has no successors (dead ends are rejected in strict mode)")
        name = None
        if p.kind == "str":
            name = _unquote(p.value)
            p.advance()
        p.expect("punct", ";", what="';'")
        rows[vid] = (pri, owner, succ, name)
        where[vid] = (line, col)
    ids = sorted(rows)
    index = {v: i for i, v in enumerate(ids)}
    src, dst = [], []
    for v in ids:
        for w, wl, wc in rows[v][2]:
            if w not in index:
                raise PGSolverSyntaxError(f"successor {w} of vertex {v} is not declared", wl, wc)
            src.append(index[v])
            dst.append(index[w])
    names = [rows[v][3] for v in ids]
    return Arena([rows[v][1] for v in ids], [rows[v][0] for v in ids], src, dst,
                 names=names, ids=ids)


def write_pgsolver(arena: Arena) -> str:
    """Canonical text: header, ascending vertices and successors, ``\\n`` endings."""
    n = arena.n
    if n == 0:
        return ""
    ext = arena.ids or tuple(range(n))
    out = [f"parity {max(ext)};"]
    for v in range(n):
        succ = ",".join(str(ext[w]) for w in sorted(arena.successors(v).tolist(), key=lambda w: ext[w]))
        line = f"{ext[v]} {int(arena.priority[v])} {int(arena.owner[v])} {succ}"
        if arena.names is not None and arena.names[v] is not None:
            line += " " + _quote(arena.names[v])
        out.append(line + ";")
    return "\n".join(out) + "\n"


def read_game(path, *, strict: bool = False) -> Arena:
    with open(path, encoding="utf-8") as fh:
        return parse_pgsolver(fh.read(), strict=strict)


@dataclass
class SolutionFile:
    """Winner (0 even, 1 odd) and optional strategy successor per vertex id."""

    winner: dict = field(default_factory=dict)
    strategy: dict = field(default_factory=dict)

    def to_regions(self, arena: Arena) -> Regions:
        """Map external ids through ``arena.ids`` and build Regions."""
        ext = arena.ids or tuple(range(arena.n))
        index = {v: i for i, v in enumerate(ext)}
        w = np.full(arena.n, -1, dtype=np.int8)
        strat = np.full(arena.n, -1, dtype=np.int64)
        for v, p in self.winner.items():
            if v not in index:
                raise InputError(f"solution mentions unknown vertex {v}")
            w[index[v]] = p
        for v, s in self.strategy.items():
            if s not in index:
                raise InputError(f"strategy of {v} points to unknown vertex {s}")
            strat[index[v]] = index[s]
        return Regions(w, strat)

    def validate(self, arena: Arena):
        """Strategy entries only on vertices owned by their winner."""
        ext = arena.ids or tuple(range(arena.n))
        index = {v: i for i, v in enumerate(ext)}
        for v in self.strategy:
            if v in index and int(arena.owner[index[v]]) != self.winner[v]:
                raise InputError(f"vertex {v} has a strategy but is not owned by its winner")


def write_solution(regions: Regions, arena: Arena | None = None) -> str:
    """``<id> <winner> [<successor>]`` per covered vertex, ascending.

    A successor is written where the strategy has one, which by convention
    is exactly the vertices owned by their winner.
    """
    ext = arena.ids if arena is not None and arena.ids else None
    name = (lambda v: ext[v]) if ext else (lambda v: v)
    lines = []
    strat = regions.strategy
    for v in np.flatnonzero(regions.winner >= 0).tolist():
        line = f"{name(v)} {int(regions.winner[v])}"
        if strat is not None and strat[v] >= 0:
            line += f" {name(int(strat[v]))}"
        lines.append(line)
    return "".join(x + "\n" for x in lines)


def parse_solution(text: str) -> SolutionFile:
    out = SolutionFile()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3) or not all(re.fullmatch(r"\d+", x) for x in parts):
            raise PGSolverSyntaxError(f"malformed solution line {raw!r}", lineno, 1)
        v, p = int(parts[0]), int(parts[1])
        if p not in (0, 1):
            raise PGSolverSyntaxError(f"winner must be 0 or 1, found {p}", lineno, len(parts[0]) + 2)
        if v in out.winner:
            raise PGSolverSyntaxError(f"duplicate vertex id {v}", lineno, 1)
        out.winner[v] = p
        if len(parts) == 3:
            out.strategy[v] = int(parts[2])
    return out
