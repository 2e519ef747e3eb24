"""Pure-Python graph kernels.

Mirror of ``_kernels.pyx``: same signatures, same traversal order, same
tie-breaking, so both backends return identical arrays. Used when the
compiled extension is missing or ``PARITYOPS_BACKEND=python`` is set.

Every kernel takes the object returned by :func:`prepare` plus per-call
numpy arrays (``alive``/``target`` as uint8, ``outdeg`` as int64) and
returns numpy arrays.
"""
import itertools

import numpy as np

NAME = "python"


def prepare(arena):
    return (
        arena.succ_ptr.tolist(),
        arena.succ_idx.tolist(),
        arena.pred_ptr.tolist(),
        arena.pred_idx.tolist(),
        arena.owner.tolist(),
        arena.priority.tolist(),
    )


def alive_outdeg(prep, alive):
    sp, si = prep[0], prep[1]
    live = alive.tolist()
    n = len(live)
    out = [0] * n
    for v in range(n):
        if live[v]:
            c = 0
            for k in range(sp[v], sp[v + 1]):
                if live[si[k]]:
                    c += 1
            out[v] = c
    return np.array(out, dtype=np.int64)


def remove(prep, alive, outdeg, removed):
    """Kill ``removed & alive`` in place and fix the alive out-degrees."""
    pp, pi = prep[2], prep[3]
    gone = np.flatnonzero(removed & alive).tolist()
    if not gone:
        return 0
    alive[gone] = 0
    live = alive.tolist()
    dec = {}
    for v in gone:
        for k in range(pp[v], pp[v + 1]):
            u = pi[k]
            if live[u]:
                dec[u] = dec.get(u, 0) + 1
    if dec:
        idx = list(dec)
        outdeg[idx] -= np.array([dec[u] for u in idx], dtype=np.int64)
    return len(gone)


def attract(prep, alive, outdeg, player, target):
    """Least fixpoint attractor with first-discovered strategy edges.

    Returns ``(attracted, strategy, touches)``; ``touches`` counts the
    alive arcs examined while propagating.
    """
    pp, pi, owner = prep[2], prep[3], prep[4]
    live = alive.tolist()
    tgt = target.tolist()
    count = outdeg.tolist()
    n = len(live)
    attracted = [0] * n
    strategy = [-1] * n
    queue = []
    for v in range(n):
        if live[v] and tgt[v]:
            attracted[v] = 1
            queue.append(v)
    # opponent dead ends: all (zero) successors are attracted
    for v in range(n):
        if live[v] and not attracted[v] and owner[v] != player and count[v] == 0:
            attracted[v] = 1
            queue.append(v)
    touches = 0
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for k in range(pp[v], pp[v + 1]):
            u = pi[k]
            if not live[u]:
                continue
            touches += 1
            if attracted[u]:
                continue
            if owner[u] == player:
                attracted[u] = 1
                strategy[u] = v
                queue.append(u)
            else:
                count[u] -= 1
                if count[u] == 0:
                    attracted[u] = 1
                    queue.append(u)
    return (
        np.array(attracted, dtype=np.uint8),
        np.array(strategy, dtype=np.int64),
        touches,
    )


def _scc(sp, si, sub, n):
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if not sub[root] or index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = True
        work = [[root, sp[root]]]
        while work:
            frame = work[-1]
            v, k = frame
            end = sp[v + 1]
            descended = False
            while k < end:
                w = si[k]
                k += 1
                if not sub[w]:
                    continue
                if index[w] == -1:
                    frame[1] = k
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = True
                    work.append([w, sp[w]])
                    descended = True
                    break
                if onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comps


def single_player(prep, alive, parity):
    """Solve the game on ``alive`` for a player controlling every vertex.

    ``parity`` is 0 when that player wins on even maxima. Returns
    ``(win, strategy)``: the vertices from which the player can reach a
    cycle whose maximum priority has the right parity, and a positional
    strategy realising it.
    """
    sp, si, pp, pi, _, pri = prep
    sub = alive.tolist()
    live = list(sub)
    n = len(sub)
    core = [-1] * n
    top = [0] * n
    ncores = 0
    while True:
        comps = _scc(sp, si, sub, n)
        if not comps:
            break
        for comp in comps:
            if len(comp) == 1:
                v = comp[0]
                loop = False
                for k in range(sp[v], sp[v + 1]):
                    if si[k] == v:
                        loop = True
                        break
                if not loop:
                    sub[v] = 0
                    continue
            k_max = max(pri[v] for v in comp)
            if k_max % 2 == parity:
                for v in comp:
                    core[v] = ncores
                    top[v] = 1 if pri[v] == k_max else 0
                    sub[v] = 0
                ncores += 1
            else:
                for v in comp:
                    if pri[v] == k_max:
                        sub[v] = 0

    strategy = [-1] * n
    reached = [0] * n
    queue = []
    for v in range(n):
        if core[v] >= 0 and top[v]:
            reached[v] = 1
            queue.append(v)
            for k in range(sp[v], sp[v + 1]):
                if core[si[k]] == core[v]:
                    strategy[v] = si[k]
                    break
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for k in range(pp[v], pp[v + 1]):
            u = pi[k]
            if core[u] == core[v] and not reached[u]:
                reached[u] = 1
                strategy[u] = v
                queue.append(u)

    win = [1 if core[v] >= 0 else 0 for v in range(n)]
    queue = [v for v in range(n) if win[v]]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for k in range(pp[v], pp[v + 1]):
            u = pi[k]
            if live[u] and not win[u]:
                win[u] = 1
                strategy[u] = v
                queue.append(u)
    return np.array(win, dtype=np.uint8), np.array(strategy, dtype=np.int64)


def profiles(choices, degree, owner, loop_pri):
    """Vectorised enumeration of positional profiles; same contract as the compiled kernel.

    For every profile the play from each start is a lasso. ``pos`` lands on
    the loop after ``2**steps >= k - 1`` applications and the loop maximum
    is a window maximum of width ``k`` grown by doubling.
    """
    choices = np.asarray(choices, dtype=np.int64)
    degree = np.asarray(degree, dtype=np.int64)
    k = int(owner.shape[0])
    even_v = [j for j in range(k) if owner[j] == 0]
    odd_v = [j for j in range(k) if owner[j] == 1]

    def table(vs):
        if not vs:
            return np.zeros((1, 0), dtype=np.int64)
        return np.array(list(itertools.product(*[choices[j, :degree[j]] for j in vs])), dtype=np.int64)

    even_tab, odd_tab = table(even_v), table(odd_v)
    n_even, n_odd = even_tab.shape[0], odd_tab.shape[0]
    steps = max(1, (k - 1).bit_length())
    chunk = max(1, 2_000_000 // max(1, n_odd * k))
    even_any = np.zeros(k, dtype=bool)
    odd_forall = np.ones((n_odd, k), dtype=bool)
    for lo in range(0, n_even, chunk):
        sig = even_tab[lo:lo + chunk]
        f = np.empty((sig.shape[0], n_odd, k), dtype=np.int64)
        if even_v:
            f[:, :, even_v] = sig[:, None, :]
        if odd_v:
            f[:, :, odd_v] = odd_tab[None, :, :]
        pos = f
        for _ in range(steps):
            pos = np.take_along_axis(pos, pos, axis=2)
        mx = np.broadcast_to(loop_pri, f.shape)
        jump = f
        span = 1
        while span < k:
            mx = np.maximum(mx, np.take_along_axis(mx, jump, axis=2))
            jump = np.take_along_axis(jump, jump, axis=2)
            span *= 2
        even_wins = np.take_along_axis(mx, pos, axis=2) % 2 == 0
        even_any |= even_wins.all(axis=1).any(axis=0)
        odd_forall &= (~even_wins).all(axis=0)
    return even_any, odd_forall.any(axis=0)


def blocks(ptr, nbr, eid, roots):
    """Iterative lowpoint DFS; returns (component id, block ptr, block vertices)."""
    ptr, nbr, eid = ptr.tolist(), nbr.tolist(), eid.tolist()
    n = len(ptr) - 1
    comp = [-1] * n
    disc = [-1] * n
    low = [0] * n
    mark = [-1] * n
    out: list = []
    bptr = [0]
    clock = ncomp = 0
    for root in roots.tolist():
        if disc[root] >= 0:
            continue
        comp[root] = ncomp
        disc[root] = low[root] = clock
        clock += 1
        if ptr[root] == ptr[root + 1]:
            out.append(root)
            bptr.append(len(out))
            ncomp += 1
            continue
        edges: list = []
        stack = [[root, -1, ptr[root]]]
        while stack:
            frame = stack[-1]
            v, pe, k = frame
            if k < ptr[v + 1]:
                frame[2] = k + 1
                w, e = nbr[k], eid[k]
                if e == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    comp[w] = ncomp
                    edges.append((v, w))
                    stack.append([w, e, ptr[w]])
                elif disc[w] < disc[v]:
                    edges.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                nb = len(bptr) - 1
                while True:
                    x, y = edges.pop()
                    for z in (x, y):
                        if mark[z] != nb:
                            mark[z] = nb
                            out.append(z)
                    if x == u and y == v:
                        break
                bptr.append(len(out))
        ncomp += 1
    return np.array(comp, dtype=np.int64), np.array(bptr, dtype=np.int64), np.array(out, dtype=np.int64)
