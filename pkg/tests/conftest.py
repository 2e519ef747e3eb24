import numpy as np
import pytest
from hypothesis import strategies as st

from parityops import Arena, GenSpec, gen_random, solve_zielonka


def arena(spec, arcs=(), names=None):
    """``spec`` is a list of (owner, priority); arcs are (u, w) pairs."""
    owners = [o for o, _ in spec]
    pris = [p for _, p in spec]
    src = [u for u, _ in arcs]
    dst = [w for _, w in arcs]
    return Arena(owners, pris, src, dst, names=names)


E, O = 0, 1
G_EMPTY = arena([])
G_LOOP = arena([(E, 0)], [(0, 0)])
G_DEAD = arena([(E, 0)])
G_CYC2 = arena([(E, 1), (O, 2)], [(0, 1), (1, 0)])
G_CYC2B = arena([(E, 1), (O, 3)], [(0, 1), (1, 0)])
G_SP = arena([(O, 1), (O, 2)], [(0, 1), (1, 0)])  # a=0, b=1
# v=0 (even, 1), a=1 (odd, 2), b=2 (odd, 3)
G_PASTE = arena([(E, 1), (O, 2), (O, 3)], [(0, 1), (1, 0), (0, 2), (2, 0)])
# v0, v1 as in G_CYC2; u=2 (odd, 5)
G_APEX = arena([(E, 1), (O, 2), (O, 5)], [(0, 1), (1, 0), (2, 0), (1, 2)])


@pytest.fixture
def fixtures():
    return dict(G_EMPTY=G_EMPTY, G_LOOP=G_LOOP, G_DEAD=G_DEAD, G_CYC2=G_CYC2, G_CYC2B=G_CYC2B,
                G_SP=G_SP, G_PASTE=G_PASTE, G_APEX=G_APEX)


# acceptance criterion number -> (passed, title, detail), filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  AC{number:<2} {title}: {detail}")


def oracle(g):
    return solve_zielonka(g).regions


def random_corpus(count, max_n=8, max_priority=6, densities=(0.2, 0.5, 0.9), seed0=0):
    """Seeded random games cycling through sizes 1..max_n and the densities."""
    out = []
    for i in range(count):
        n = 1 + i % max_n
        d = densities[(i // max_n) % len(densities)]
        out.append(gen_random(GenSpec("random", n, max_priority, d, seed0 + i)))
    return out


@st.composite
def arenas(draw, max_n=7, max_priority=6, allow_empty=True):
    n = draw(st.integers(0 if allow_empty else 1, max_n))
    owners = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    pris = draw(st.lists(st.integers(0, max_priority), min_size=n, max_size=n))
    pairs = [(u, w) for u in range(n) for w in range(n)]
    arcs = draw(st.lists(st.sampled_from(pairs), max_size=3 * n * n, unique=True)) if pairs else []
    return Arena(owners, pris, [u for u, _ in arcs], [w for _, w in arcs])


def sets(regions):
    return regions.even, regions.odd


def mask_of(n, vs):
    m = np.zeros(n, dtype=bool)
    m[list(vs)] = True
    return m
