"""Backend selection for the hot graph kernels.

The compiled extension is preferred; the pure-Python mirror is used when it
cannot be imported or when ``PARITYOPS_BACKEND=python`` is set. Both expose
``prepare``, ``alive_outdeg``, ``remove``, ``attract``, ``single_player``,
``profiles`` and ``blocks``.
"""
import contextlib
import os

import numpy as np

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled


def _initial():
    wanted = os.environ.get("PARITYOPS_BACKEND", "").strip().lower()
    if wanted:
        if wanted not in BACKENDS:
            raise ImportError(f"PARITYOPS_BACKEND={wanted!r} is not available; have {sorted(BACKENDS)}")
        return BACKENDS[wanted]
    return _compiled if _compiled is not None else _pykernels


_impl = _initial()


def backend_name():
    return _impl.NAME


def available():
    return sorted(BACKENDS)


def set_backend(name):
    global _impl
    try:
        _impl = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; have {sorted(BACKENDS)}") from None


@contextlib.contextmanager
def use_backend(name):
    previous = _impl.NAME
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def prepared(arena):
    """Backend-specific arrays for ``arena``, cached on the arena."""
    cache = arena._prepared
    prep = cache.get(_impl.NAME)
    if prep is None:
        prep = cache[_impl.NAME] = _impl.prepare(arena)
    return prep


def alive_outdeg(arena, alive):
    return _impl.alive_outdeg(prepared(arena), alive)


def remove(arena, alive, outdeg, removed):
    return _impl.remove(prepared(arena), alive, outdeg, removed)


def attract(arena, alive, outdeg, player, target):
    return _impl.attract(prepared(arena), alive, outdeg, int(player), target)


def single_player(arena, alive, parity):
    return _impl.single_player(prepared(arena), alive, int(parity))


def profiles(choices, degree, owner, loop_pri):
    """Exhaustive positional-profile outcomes (see ``_pykernels.profiles``)."""
    impl = _impl if owner.shape[0] <= 16 else _pykernels
    return impl.profiles(choices, degree, owner, loop_pri)


def blocks(ptr, nbr, eid, roots):
    """Biconnected blocks of an undirected CSR graph, canonically ordered.

    Returns ``(comp, bptr, bverts)``: component id per vertex (-1 if not a
    root's reach), and blocks as CSR slices of ``bverts``. Blocks are sorted
    by smallest vertex and each block's vertices ascend.
    """
    comp, bptr, verts = _impl.blocks(ptr, nbr, eid, roots)
    nb = bptr.size - 1
    if nb == 0:
        return comp, bptr, verts
    sizes = np.diff(bptr)
    bid = np.repeat(np.arange(nb), sizes)
    order = np.lexsort((verts, bid))
    verts = verts[order]
    first = verts[bptr[:-1]]
    rank = np.argsort(first, kind="stable")
    new_sizes = sizes[rank]
    new_ptr = np.zeros(nb + 1, dtype=np.int64)
    np.cumsum(new_sizes, out=new_ptr[1:])
    starts = np.repeat(bptr[:-1][rank] - new_ptr[:-1], new_sizes)
    return comp, new_ptr, verts[starts + np.arange(verts.size)]
