"""Compiled flood-fill and search kernels over Lehmer ranks.

States are ranks in ``[0, n!)``; the queue holds ranks and each pop unranks
into a scratch buffer.  Ranks here agree exactly with ``perm.rank``.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.typed import Dict


def factorials(n: int) -> np.ndarray:
    f = np.ones(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        f[i] = f[i - 1] * i
    return f


def popcounts(n: int) -> np.ndarray:
    size = 1 << n
    pc = np.zeros(size, dtype=np.int64)
    for i in range(1, size):
        pc[i] = pc[i >> 1] + (i & 1)
    return pc


@njit(cache=True)
def _rank(p, n, fact, pop):
    r = 0
    seen = 0
    for i in range(n):
        x = p[i]
        r += (x - pop[seen & ((1 << x) - 1)]) * fact[n - 1 - i]
        seen |= 1 << x
    return r


@njit(cache=True)
def _unrank(r, n, fact, out, free):
    for i in range(n):
        free[i] = i
    cnt = n
    for i in range(n):
        f = fact[n - 1 - i]
        d = r // f
        r -= d * f
        out[i] = free[d]
        for k in range(d, cnt - 1):
            free[k] = free[k + 1]
        cnt -= 1


@njit(cache=True)
def _grow(queue, head, size):
    bigger = np.empty(queue.shape[0] * 2, dtype=np.int64)
    cap = queue.shape[0]
    for i in range(size):
        bigger[i] = queue[(head + i) % cap]
    return bigger


@njit(cache=True)
def component_histogram(n, ea, eb, yadj, total):
    """Map component size -> multiplicity for FS(X, Y)."""
    fact = np.ones(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    pop = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, 1 << n):
        pop[i] = pop[i >> 1] + (i & 1)
    visited = np.zeros((total + 7) // 8, dtype=np.uint8)
    hist = Dict.empty(key_type=types.int64, value_type=types.int64)
    queue = np.empty(min(total, 1 << 16), dtype=np.int64)
    p = np.empty(n, dtype=np.int64)
    free = np.empty(n, dtype=np.int64)
    m = ea.shape[0]
    for start in range(total):
        if visited[start >> 3] & (1 << (start & 7)):
            continue
        visited[start >> 3] |= 1 << (start & 7)
        head = 0
        size = 1
        queue[0] = start
        comp = 0
        while size > 0:
            cap = queue.shape[0]
            r = queue[head]
            head = (head + 1) % cap
            size -= 1
            comp += 1
            _unrank(r, n, fact, p, free)
            for k in range(m):
                a = ea[k]
                c = eb[k]
                if yadj[p[a], p[c]]:
                    t = p[a]
                    p[a] = p[c]
                    p[c] = t
                    s = _rank(p, n, fact, pop)
                    p[c] = p[a]
                    p[a] = t
                    if not visited[s >> 3] & (1 << (s & 7)):
                        visited[s >> 3] |= 1 << (s & 7)
                        if size == queue.shape[0]:
                            queue = _grow(queue, head, size)
                            head = 0
                        queue[(head + size) % queue.shape[0]] = s
                        size += 1
        if comp in hist:
            hist[comp] += 1
        else:
            hist[comp] = 1
    return hist


@njit(cache=True)
def component_labels(n, ea, eb, yadj, total):
    """Component index for every rank, numbered in order of least rank."""
    fact = np.ones(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    pop = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, 1 << n):
        pop[i] = pop[i >> 1] + (i & 1)
    labels = np.full(total, -1, dtype=np.int32)
    queue = np.empty(total, dtype=np.int64)
    p = np.empty(n, dtype=np.int64)
    free = np.empty(n, dtype=np.int64)
    m = ea.shape[0]
    count = 0
    for start in range(total):
        if labels[start] >= 0:
            continue
        labels[start] = count
        head = 0
        tail = 1
        queue[0] = start
        while head < tail:
            r = queue[head]
            head += 1
            _unrank(r, n, fact, p, free)
            for k in range(m):
                a = ea[k]
                c = eb[k]
                if yadj[p[a], p[c]]:
                    t = p[a]
                    p[a] = p[c]
                    p[c] = t
                    s = _rank(p, n, fact, pop)
                    p[c] = p[a]
                    p[a] = t
                    if labels[s] < 0:
                        labels[s] = count
                        queue[tail] = s
                        tail += 1
        count += 1
    return labels


@njit(cache=True)
def _expand(frontier, parents, others, n, ea, eb, yadj, fact, pop, p, free):
    nxt = []
    m = ea.shape[0]
    for r in frontier:
        _unrank(r, n, fact, p, free)
        for k in range(m):
            a = ea[k]
            c = eb[k]
            if yadj[p[a], p[c]]:
                t = p[a]
                p[a] = p[c]
                p[c] = t
                s = _rank(p, n, fact, pop)
                p[c] = p[a]
                p[a] = t
                if s not in parents:
                    parents[s] = r
                    if s in others:
                        return nxt, s
                    nxt.append(s)
    return nxt, -1


@njit(cache=True)
def bidirectional_path(n, ea, eb, yadj, start, target):
    """Rank path from ``start`` to ``target`` (inclusive), or empty if unreachable.

    Also returns the number of states visited.
    """
    fact = np.ones(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    pop = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, 1 << n):
        pop[i] = pop[i >> 1] + (i & 1)
    p = np.empty(n, dtype=np.int64)
    free = np.empty(n, dtype=np.int64)
    pa = Dict.empty(key_type=types.int64, value_type=types.int64)
    pb = Dict.empty(key_type=types.int64, value_type=types.int64)
    pa[start] = -1
    pb[target] = -1
    if start == target:
        return np.array([start], dtype=np.int64), 1
    fa = [start]
    fb = [target]
    meet = -1
    while len(fa) > 0 and len(fb) > 0:
        if len(fa) <= len(fb):
            fa, meet = _expand(fa, pa, pb, n, ea, eb, yadj, fact, pop, p, free)
        else:
            fb, meet = _expand(fb, pb, pa, n, ea, eb, yadj, fact, pop, p, free)
        if meet >= 0:
            break
    visited = len(pa) + len(pb)
    if meet < 0:
        return np.empty(0, dtype=np.int64), visited
    left = []
    r = meet
    while r != -1:
        left.append(r)
        r = pa[r]
    out = np.empty(0, dtype=np.int64)
    right = []
    r = pb[meet]
    while r != -1:
        right.append(r)
        r = pb[r]
    out = np.empty(len(left) + len(right), dtype=np.int64)
    k = 0
    for i in range(len(left) - 1, -1, -1):
        out[k] = left[i]
        k += 1
    for x in right:
        out[k] = x
        k += 1
    return out, visited
