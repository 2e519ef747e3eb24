# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled graph kernels. Behaviour is pinned to ``_pykernels``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8

NAME = "compiled"


def prepare(arena):
    return (
        np.ascontiguousarray(arena.succ_ptr, dtype=np.int64),
        np.ascontiguousarray(arena.succ_idx, dtype=np.int64),
        np.ascontiguousarray(arena.pred_ptr, dtype=np.int64),
        np.ascontiguousarray(arena.pred_idx, dtype=np.int64),
        np.ascontiguousarray(arena.owner, dtype=np.uint8),
        np.ascontiguousarray(arena.priority, dtype=np.int64),
    )


def alive_outdeg(prep, u8[::1] alive):
    cdef const i64[::1] sp = prep[0]
    cdef const i64[::1] si = prep[1]
    cdef Py_ssize_t n = alive.shape[0]
    out_arr = np.zeros(n, dtype=np.int64)
    cdef i64[::1] out = out_arr
    cdef Py_ssize_t v
    cdef i64 k, c
    for v in range(n):
        if alive[v]:
            c = 0
            for k in range(sp[v], sp[v + 1]):
                if alive[si[k]]:
                    c += 1
            out[v] = c
    return out_arr


def remove(prep, u8[::1] alive, i64[::1] outdeg, u8[::1] removed):
    cdef const i64[::1] pp = prep[2]
    cdef const i64[::1] pi = prep[3]
    cdef Py_ssize_t n = alive.shape[0]
    cdef Py_ssize_t v, m = 0
    cdef i64 k, u
    gone_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] gone = gone_arr
    for v in range(n):
        if removed[v] and alive[v]:
            alive[v] = 0
            gone[m] = v
            m += 1
    for v in range(m):
        for k in range(pp[gone[v]], pp[gone[v] + 1]):
            u = pi[k]
            if alive[u]:
                outdeg[u] -= 1
    return m


def attract(prep, u8[::1] alive, i64[::1] outdeg, int player, u8[::1] target):
    cdef const i64[::1] pp = prep[2]
    cdef const i64[::1] pi = prep[3]
    cdef const u8[::1] owner = prep[4]
    cdef Py_ssize_t n = alive.shape[0]
    attracted_arr = np.zeros(n, dtype=np.uint8)
    strategy_arr = np.full(n, -1, dtype=np.int64)
    count_arr = np.array(outdeg, dtype=np.int64, copy=True)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef u8[::1] attracted = attracted_arr
    cdef i64[::1] strategy = strategy_arr
    cdef i64[::1] count = count_arr
    cdef i64[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, v
    cdef i64 k, u, w
    cdef i64 touches = 0
    for v in range(n):
        if alive[v] and target[v]:
            attracted[v] = 1
            queue[tail] = v
            tail += 1
    for v in range(n):
        if alive[v] and not attracted[v] and owner[v] != player and count[v] == 0:
            attracted[v] = 1
            queue[tail] = v
            tail += 1
    while head < tail:
        w = queue[head]
        head += 1
        for k in range(pp[w], pp[w + 1]):
            u = pi[k]
            if not alive[u]:
                continue
            touches += 1
            if attracted[u]:
                continue
            if owner[u] == player:
                attracted[u] = 1
                strategy[u] = w
                queue[tail] = u
                tail += 1
            else:
                count[u] -= 1
                if count[u] == 0:
                    attracted[u] = 1
                    queue[tail] = u
                    tail += 1
    return attracted_arr, strategy_arr, touches


cdef Py_ssize_t _scc(const i64[::1] sp, const i64[::1] si, u8[::1] sub,
                     i64[::1] index, i64[::1] low, u8[::1] onstack,
                     i64[::1] stack, i64[::1] work_v, i64[::1] work_k,
                     i64[::1] comp_of, i64[::1] order, i64[::1] comp_start):
    """Tarjan over ``sub``; fills ``order`` with vertices grouped by
    component (``comp_start`` delimits groups). Returns component count."""
    cdef Py_ssize_t n = sub.shape[0]
    cdef Py_ssize_t root, sp_top = 0, wp, ncomp = 0, filled = 0
    cdef i64 counter = 0, v, k, end, w, u
    cdef bint descended
    for root in range(n):
        index[root] = -1
        onstack[root] = 0
    for root in range(n):
        if not sub[root] or index[root] != -1:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp_top] = root
        sp_top += 1
        onstack[root] = 1
        wp = 0
        work_v[0] = root
        work_k[0] = sp[root]
        wp = 1
        while wp > 0:
            v = work_v[wp - 1]
            k = work_k[wp - 1]
            end = sp[v + 1]
            descended = False
            while k < end:
                w = si[k]
                k += 1
                if not sub[w]:
                    continue
                if index[w] == -1:
                    work_k[wp - 1] = k
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp_top] = w
                    sp_top += 1
                    onstack[w] = 1
                    work_v[wp] = w
                    work_k[wp] = sp[w]
                    wp += 1
                    descended = True
                    break
                if onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            wp -= 1
            if low[v] == index[v]:
                comp_start[ncomp] = filled
                while True:
                    sp_top -= 1
                    w = stack[sp_top]
                    onstack[w] = 0
                    comp_of[w] = ncomp
                    order[filled] = w
                    filled += 1
                    if w == v:
                        break
                ncomp += 1
            if wp > 0:
                u = work_v[wp - 1]
                if low[v] < low[u]:
                    low[u] = low[v]
    comp_start[ncomp] = filled
    return ncomp


def single_player(prep, u8[::1] alive, int parity):
    cdef const i64[::1] sp = prep[0]
    cdef const i64[::1] si = prep[1]
    cdef const i64[::1] pp = prep[2]
    cdef const i64[::1] pi = prep[3]
    cdef const i64[::1] pri = prep[5]
    cdef Py_ssize_t n = alive.shape[0]
    sub_arr = np.array(alive, dtype=np.uint8, copy=True)
    cdef u8[::1] sub = sub_arr
    core_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] core = core_arr
    top_arr = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] top = top_arr
    cdef i64[::1] index = np.empty(n, dtype=np.int64)
    cdef i64[::1] low = np.empty(n, dtype=np.int64)
    cdef u8[::1] onstack = np.zeros(n, dtype=np.uint8)
    cdef i64[::1] stack = np.empty(n, dtype=np.int64)
    cdef i64[::1] work_v = np.empty(n + 1, dtype=np.int64)
    cdef i64[::1] work_k = np.empty(n + 1, dtype=np.int64)
    cdef i64[::1] comp_of = np.empty(n, dtype=np.int64)
    cdef i64[::1] order = np.empty(n, dtype=np.int64)
    cdef i64[::1] comp_start = np.empty(n + 1, dtype=np.int64)
    cdef Py_ssize_t ncomp, c, j, head, tail, v
    cdef i64 ncores = 0, k, kmax, w, u
    cdef bint loop
    while True:
        ncomp = _scc(sp, si, sub, index, low, onstack, stack, work_v, work_k,
                     comp_of, order, comp_start)
        if ncomp == 0:
            break
        for c in range(ncomp):
            if comp_start[c + 1] - comp_start[c] == 1:
                w = order[comp_start[c]]
                loop = False
                for k in range(sp[w], sp[w + 1]):
                    if si[k] == w:
                        loop = True
                        break
                if not loop:
                    sub[w] = 0
                    continue
            kmax = -1
            for j in range(comp_start[c], comp_start[c + 1]):
                if pri[order[j]] > kmax:
                    kmax = pri[order[j]]
            if kmax % 2 == parity:
                for j in range(comp_start[c], comp_start[c + 1]):
                    w = order[j]
                    core[w] = ncores
                    top[w] = 1 if pri[w] == kmax else 0
                    sub[w] = 0
                ncores += 1
            else:
                for j in range(comp_start[c], comp_start[c + 1]):
                    w = order[j]
                    if pri[w] == kmax:
                        sub[w] = 0

    strategy_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] strategy = strategy_arr
    cdef u8[::1] reached = np.zeros(n, dtype=np.uint8)
    cdef i64[::1] queue = np.empty(n, dtype=np.int64)
    head = 0
    tail = 0
    for v in range(n):
        if core[v] >= 0 and top[v]:
            reached[v] = 1
            queue[tail] = v
            tail += 1
            for k in range(sp[v], sp[v + 1]):
                if core[si[k]] == core[v]:
                    strategy[v] = si[k]
                    break
    while head < tail:
        w = queue[head]
        head += 1
        for k in range(pp[w], pp[w + 1]):
            u = pi[k]
            if core[u] == core[w] and not reached[u]:
                reached[u] = 1
                strategy[u] = w
                queue[tail] = u
                tail += 1

    win_arr = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] win = win_arr
    head = 0
    tail = 0
    for v in range(n):
        if core[v] >= 0:
            win[v] = 1
            queue[tail] = v
            tail += 1
    while head < tail:
        w = queue[head]
        head += 1
        for k in range(pp[w], pp[w + 1]):
            u = pi[k]
            if alive[u] and not win[u]:
                win[u] = 1
                strategy[u] = w
                queue[tail] = u
                tail += 1
    return win_arr, strategy_arr


def profiles(i64[:, ::1] choices, i64[::1] degree, u8[::1] owner, i64[::1] loop_pri):
    """Outcome of every positional profile on a small game (at most 16 vertices).

    ``choices[j, :degree[j]]`` are the local successors of vertex ``j``.
    Returns ``(even, odd)`` masks: even has a strategy beating every odd
    strategy, and odd has one beating every even strategy.
    """
    cdef Py_ssize_t k = owner.shape[0]
    if k > 16:
        raise ValueError("compiled profile enumeration supports at most 16 vertices")
    cdef i64 ev[16]
    cdef i64 od[16]
    cdef i64 digit[16]
    cdef i64 succ[16]
    cdef i64 res[16]
    cdef i64 mark[16]
    cdef i64 where[16]
    cdef i64 path[16]
    cdef Py_ssize_t ne = 0, no = 0, j, s, L, q, t
    cdef i64 n_odd = 1, ti, stamp = 0, cur, r, m
    for j in range(k):
        succ[j] = choices[j, 0]
        digit[j] = 0
        mark[j] = -1
        if owner[j] == 0:
            ev[ne] = j
            ne += 1
        else:
            od[no] = j
            no += 1
            n_odd *= degree[j]
    odd_forall_arr = np.full(n_odd, 0xFFFF, dtype=np.uint16)
    cdef cnp.uint16_t[::1] odd_forall = odd_forall_arr
    cdef unsigned int even_any = 0, and_even, bits
    while True:
        and_even = 0xFFFF
        for q in range(no):
            j = od[q]
            digit[j] = 0
            succ[j] = choices[j, 0]
        for ti in range(n_odd):
            for j in range(k):
                res[j] = -1
            for s in range(k):
                if res[s] >= 0:
                    continue
                stamp += 1
                L = 0
                cur = s
                while res[cur] < 0 and mark[cur] != stamp:
                    mark[cur] = stamp
                    where[cur] = L
                    path[L] = cur
                    L += 1
                    cur = succ[cur]
                if res[cur] >= 0:
                    r = res[cur]
                else:
                    m = loop_pri[cur]
                    for t in range(where[cur], L):
                        if loop_pri[path[t]] > m:
                            m = loop_pri[path[t]]
                    r = m & 1
                for t in range(L):
                    res[path[t]] = r
            bits = 0
            for j in range(k):
                if res[j] == 0:
                    bits |= 1u << j
            and_even &= bits
            odd_forall[ti] &= ~bits
            # next odd profile
            q = 0
            while q < no:
                j = od[q]
                digit[j] += 1
                if digit[j] < degree[j]:
                    succ[j] = choices[j, digit[j]]
                    break
                digit[j] = 0
                succ[j] = choices[j, 0]
                q += 1
        even_any |= and_even
        q = 0
        while q < ne:
            j = ev[q]
            digit[j] += 1
            if digit[j] < degree[j]:
                succ[j] = choices[j, digit[j]]
                break
            digit[j] = 0
            succ[j] = choices[j, 0]
            q += 1
        if q == ne:
            break
    cdef unsigned int odd_any = 0
    for ti in range(n_odd):
        odd_any |= odd_forall[ti]
    return (np.array([(even_any >> j) & 1 for j in range(k)], dtype=bool),
            np.array([(odd_any >> j) & 1 for j in range(k)], dtype=bool))


def blocks(i64[::1] ptr, i64[::1] nbr, i64[::1] eid, i64[::1] roots):
    """Iterative lowpoint DFS; returns (component id, block ptr, block vertices)."""
    cdef Py_ssize_t n = ptr.shape[0] - 1
    cdef Py_ssize_t m2 = nbr.shape[0]
    comp_arr = np.full(n, -1, dtype=np.int64)
    disc_arr = np.full(n, -1, dtype=np.int64)
    low_arr = np.zeros(n, dtype=np.int64)
    mark_arr = np.full(n, -1, dtype=np.int64)
    sv_arr = np.empty(n, dtype=np.int64)
    spe_arr = np.empty(n, dtype=np.int64)
    sk_arr = np.empty(n, dtype=np.int64)
    eu_arr = np.empty(m2 // 2 + 1, dtype=np.int64)
    ew_arr = np.empty(m2 // 2 + 1, dtype=np.int64)
    out_arr = np.empty(m2 + n, dtype=np.int64)
    bptr_arr = np.zeros(n + 1, dtype=np.int64)
    cdef i64[::1] comp = comp_arr, disc = disc_arr, low = low_arr, mark = mark_arr
    cdef i64[::1] sv = sv_arr, spe = spe_arr, sk = sk_arr, eu = eu_arr, ew = ew_arr
    cdef i64[::1] out = out_arr, bptr = bptr_arr
    cdef Py_ssize_t r, top, etop = 0, nout = 0, nb = 0, ncomp = 0
    cdef i64 root, v, pe, k, w, e, u, x, y, clock = 0
    for r in range(roots.shape[0]):
        root = roots[r]
        if disc[root] >= 0:
            continue
        comp[root] = ncomp
        disc[root] = clock
        low[root] = clock
        clock += 1
        if ptr[root] == ptr[root + 1]:
            out[nout] = root
            nout += 1
            nb += 1
            bptr[nb] = nout
            ncomp += 1
            continue
        top = 0
        sv[0] = root
        spe[0] = -1
        sk[0] = ptr[root]
        while top >= 0:
            v = sv[top]
            pe = spe[top]
            k = sk[top]
            if k < ptr[v + 1]:
                sk[top] = k + 1
                w = nbr[k]
                e = eid[k]
                if e == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = clock
                    low[w] = clock
                    clock += 1
                    comp[w] = ncomp
                    eu[etop] = v
                    ew[etop] = w
                    etop += 1
                    top += 1
                    sv[top] = w
                    spe[top] = e
                    sk[top] = ptr[w]
                elif disc[w] < disc[v]:
                    eu[etop] = v
                    ew[etop] = w
                    etop += 1
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            top -= 1
            if top < 0:
                break
            u = sv[top]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                while True:
                    etop -= 1
                    x = eu[etop]
                    y = ew[etop]
                    if mark[x] != nb:
                        mark[x] = nb
                        out[nout] = x
                        nout += 1
                    if mark[y] != nb:
                        mark[y] = nb
                        out[nout] = y
                        nout += 1
                    if x == u and y == v:
                        break
                nb += 1
                bptr[nb] = nout
        ncomp += 1
    return comp_arr, bptr_arr[:nb + 1].copy(), out_arr[:nout].copy()
