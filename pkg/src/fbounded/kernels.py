"""Hot loops: ordered-pair enumeration, edge-subset enumeration, blossom matching.

Each enumeration kernel has a numba implementation (``*_numba``) and a
vectorized numpy implementation (``*_numpy``). The unsuffixed names are
bound to one of them by :mod:`fbounded._jit`. The matching kernel is written
in the numba subset and simply runs as Python when the JIT is off.

Pair codes: vertex ``v`` has base-3 digit ``(code // 3**v) % 3`` with
0 = R, 1 = S, 2 = T.
"""
from __future__ import annotations

import numpy as np

from ._jit import HAS_NUMBA, njit

ROLE_R, ROLE_S, ROLE_T = 0, 1, 2

_CHUNK = 1 << 16


# ---------------------------------------------------------------- pair kernels

@njit
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit
def _eval_pair(a, n, eu, ev, f, parent, acc):
    """Return (deficiency, schrijver bound, edges inside T) for assignment ``a``."""
    f_s = 0
    f_t = 0
    for v in range(n):
        parent[v] = v
        acc[v] = 0
        if a[v] == ROLE_S:
            f_s += f[v]
        elif a[v] == ROLE_T:
            f_t += f[v]
        else:
            acc[v] = f[v]
    d_t = 0
    t_edges = 0
    for j in range(eu.shape[0]):
        u = eu[j]
        v = ev[j]
        au = a[u]
        av = a[v]
        if au == ROLE_S or av == ROLE_S:
            continue
        if au == ROLE_T and av == ROLE_T:
            d_t += 2
            t_edges += 1
        elif au == ROLE_R and av == ROLE_R:
            ru = _find(parent, u)
            rv = _find(parent, v)
            if ru < rv:
                parent[rv] = ru
            elif rv < ru:
                parent[ru] = rv
        elif au == ROLE_R:
            d_t += 1
            acc[u] += 1
        else:
            d_t += 1
            acc[v] += 1
    for v in range(n):
        if a[v] == ROLE_R:
            r = _find(parent, v)
            if r != v:
                acc[r] += acc[v]
    q = 0
    half = 0
    for v in range(n):
        if a[v] == ROLE_R and parent[v] == v:
            q += acc[v] & 1
            half += acc[v] // 2
    return f_t - f_s - d_t + q, f_s + t_edges + half, t_edges


@njit
def _advance(a):
    i = 0
    while i < a.shape[0]:
        a[i] += 1
        if a[i] < 3:
            return
        a[i] = 0
        i += 1


@njit
def pair_table_numba(n, eu, ev, f):
    total = 3 ** n
    deficiency = np.empty(total, dtype=np.int64)
    schrijver = np.empty(total, dtype=np.int64)
    t_edges = np.empty(total, dtype=np.int64)
    a = np.zeros(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    acc = np.empty(n, dtype=np.int64)
    for code in range(total):
        d, s, t = _eval_pair(a, n, eu, ev, f, parent, acc)
        deficiency[code] = d
        schrijver[code] = s
        t_edges[code] = t
        _advance(a)
    return deficiency, schrijver, t_edges


@njit
def scan_pairs_numba(n, eu, ev, f):
    """One pass over all pairs without storing a table.

    Returns ``(best_code, best_deficiency, min_schrijver, identity_failures,
    parity_failures)``; ``best_code`` is the first maximizer in counter order.
    """
    total = 3 ** n
    f_total = 0
    for v in range(n):
        f_total += f[v]
    a = np.zeros(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    acc = np.empty(n, dtype=np.int64)
    best_code = 0
    best = -(1 << 62)
    min_schrijver = 1 << 62
    identity_failures = 0
    parity_failures = 0
    for code in range(total):
        d, s, _ = _eval_pair(a, n, eu, ev, f, parent, acc)
        if d > best:
            best = d
            best_code = code
        if s < min_schrijver:
            min_schrijver = s
        if 2 * s + d != f_total:
            identity_failures += 1
        if (f_total - d) % 2 != 0:
            parity_failures += 1
        _advance(a)
    return best_code, best, min_schrijver, identity_failures, parity_failures


def _digits(codes: np.ndarray, n: int) -> np.ndarray:
    powers = 3 ** np.arange(n, dtype=np.int64)
    return (codes[:, None] // powers[None, :]) % 3


def _pair_chunk_numpy(codes, n, eu, ev, f, mult):
    digits = _digits(codes, n)
    in_s = digits == ROLE_S
    in_t = digits == ROLE_T
    in_r = digits == ROLE_R
    f_s = in_s @ f
    f_t = in_t @ f
    t_edges = (in_t[:, eu] & in_t[:, ev]).sum(axis=1)
    d_t = (in_t[:, eu] & ~in_s[:, ev]).sum(axis=1) + (in_t[:, ev] & ~in_s[:, eu]).sum(axis=1)

    # components of G[R] by min-label propagation
    label = np.broadcast_to(np.arange(n, dtype=np.int64), digits.shape).copy()
    r_edge = in_r[:, eu] & in_r[:, ev]
    rows = np.arange(len(codes))
    while True:
        changed = False
        for j in range(eu.shape[0]):
            sel = rows[r_edge[:, j]]
            if sel.size == 0:
                continue
            lu = label[sel, eu[j]]
            lv = label[sel, ev[j]]
            low = np.minimum(lu, lv)
            if np.any(lu != lv):
                changed = True
                label[sel, eu[j]] = low
                label[sel, ev[j]] = low
        if not changed:
            break

    weight = np.where(in_r, f[None, :] + in_t.astype(np.int64) @ mult, 0)
    q = np.zeros(len(codes), dtype=np.int64)
    half = np.zeros(len(codes), dtype=np.int64)
    for root in range(n):
        is_root = in_r[:, root] & (label[:, root] == root)
        comp = np.where(label == root, weight, 0).sum(axis=1)
        q += is_root & (comp % 2 == 1)
        half += np.where(is_root, comp // 2, 0)
    deficiency = f_t - f_s - d_t + q
    schrijver = f_s + t_edges + half
    return deficiency, schrijver, t_edges


def pair_table_numpy(n, eu, ev, f):
    total = 3 ** n
    mult = np.zeros((n, n), dtype=np.int64)
    np.add.at(mult, (eu, ev), 1)
    np.add.at(mult, (ev, eu), 1)
    out = [np.empty(total, dtype=np.int64) for _ in range(3)]
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        for dst, src in zip(out, _pair_chunk_numpy(codes, n, eu, ev, f, mult)):
            dst[start:start + len(codes)] = src
    return tuple(out)


def scan_pairs_numpy(n, eu, ev, f):
    total = 3 ** n
    f_total = int(f.sum())
    mult = np.zeros((n, n), dtype=np.int64)
    np.add.at(mult, (eu, ev), 1)
    np.add.at(mult, (ev, eu), 1)
    best_code, best = 0, None
    min_schrijver = None
    identity_failures = parity_failures = 0
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        deficiency, schrijver, _ = _pair_chunk_numpy(codes, n, eu, ev, f, mult)
        i = int(np.argmax(deficiency))
        if best is None or deficiency[i] > best:
            best, best_code = int(deficiency[i]), start + i
        low = int(schrijver.min())
        min_schrijver = low if min_schrijver is None else min(min_schrijver, low)
        identity_failures += int(np.count_nonzero(2 * schrijver + deficiency != f_total))
        parity_failures += int(np.count_nonzero((f_total - deficiency) % 2))
    return best_code, best, min_schrijver, identity_failures, parity_failures


# -------------------------------------------------------------- subset kernels

@njit
def best_subset_numba(n, eu, ev, f):
    """Largest edge subset obeying the degree bounds; smallest mask on ties."""
    m = eu.shape[0]
    deg = np.zeros(n, dtype=np.int64)
    best_mask = 0
    best_size = 0
    for mask in range(1 << m):
        size = 0
        x = mask
        while x:
            x &= x - 1
            size += 1
        if size <= best_size:
            continue
        for v in range(n):
            deg[v] = 0
        ok = True
        for j in range(m):
            if (mask >> j) & 1:
                u = eu[j]
                v = ev[j]
                deg[u] += 1
                deg[v] += 1
                if deg[u] > f[u] or deg[v] > f[v]:
                    ok = False
                    break
        if ok:
            best_size = size
            best_mask = mask
    return best_mask, best_size


def best_subset_numpy(n, eu, ev, f):
    m = eu.shape[0]
    inc = np.zeros((m, n), dtype=np.int64)
    inc[np.arange(m), eu] += 1
    inc[np.arange(m), ev] += 1
    shifts = np.arange(m, dtype=np.int64)
    best_mask, best_size = 0, 0
    for start in range(0, 1 << m, _CHUNK):
        masks = np.arange(start, min(1 << m, start + _CHUNK), dtype=np.int64)
        bits = (masks[:, None] >> shifts[None, :]) & 1
        feasible = np.all(bits @ inc <= f[None, :], axis=1)
        sizes = np.where(feasible, bits.sum(axis=1), -1)
        i = int(np.argmax(sizes))
        if sizes[i] > best_size:
            best_size, best_mask = int(sizes[i]), int(masks[i])
    return best_mask, best_size


# ------------------------------------------------------------ blossom matching

@njit
def _lca(a, b, mate, base, parent, mark):
    for i in range(mark.shape[0]):
        mark[i] = False
    while True:
        a = base[a]
        mark[a] = True
        if mate[a] == -1:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if mark[b]:
            return b
        b = parent[mate[b]]


@njit
def _mark_path(v, b, child, mate, base, parent, blossom):
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[mate[v]]] = True
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


@njit
def _find_augmenting(root, n, indptr, indices, mate, base, parent, used, blossom, mark, queue):
    """BFS for an augmenting path from ``root``; returns its free end or -1."""
    for i in range(n):
        used[i] = False
        parent[i] = -1
        base[i] = i
    used[root] = True
    head = 0
    tail = 0
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            to = indices[k]
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # odd cycle: shrink the blossom onto its base
                cur = _lca(v, to, mate, base, parent, mark)
                for i in range(n):
                    blossom[i] = False
                _mark_path(v, cur, to, mate, base, parent, blossom)
                _mark_path(to, cur, v, mate, base, parent, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue[tail] = i
                            tail += 1
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to
                w = mate[to]
                used[w] = True
                queue[tail] = w
                tail += 1
    return -1


@njit
def blossom_matching(n, indptr, indices):
    """Maximum cardinality matching; ``mate[v] == -1`` marks exposed vertices."""
    mate = np.full(n, -1, dtype=np.int64)
    for v in range(n):
        if mate[v] == -1:
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if mate[u] == -1:
                    mate[u] = v
                    mate[v] = u
                    break
    base = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    used = np.empty(n, dtype=np.bool_)
    blossom = np.empty(n, dtype=np.bool_)
    mark = np.empty(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    for root in range(n):
        if mate[root] != -1:
            continue
        v = _find_augmenting(root, n, indptr, indices, mate, base, parent, used, blossom, mark, queue)
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt
    return mate


if HAS_NUMBA:
    pair_table = pair_table_numba
    scan_pairs = scan_pairs_numba
    best_subset = best_subset_numba
else:
    pair_table = pair_table_numpy
    scan_pairs = scan_pairs_numpy
    best_subset = best_subset_numpy
