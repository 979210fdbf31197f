"""Numba-jitted enumeration kernels.

One scalar pass over a contiguous mask range. Each mask is decoded into
bit-vector adjacency rows and columns, run through the cheap in/out-degree
filter, then the strong-connectivity and criticality tests. Compiled
lazily on first call; cache=True persists the machine code on disk.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _sc_masked(rows, cols, n, active):
    # one active vertex (or none) counts as strongly connected
    if active & (active - 1) == 0:
        return True
    start_v = 0
    for v in range(n):
        if (active >> v) & 1:
            start_v = v
            break
    start_bit = 1 << start_v
    visited = start_bit
    frontier = start_bit
    while frontier != 0:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= rows[v]
        nxt &= active & ~visited
        visited |= nxt
        frontier = nxt
    if visited != active:
        return False
    visited = start_bit
    frontier = start_bit
    while frontier != 0:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= cols[v]
        nxt &= active & ~visited
        visited |= nxt
        frontier = nxt
    return visited == active


@njit(cache=True)
def _classify_one(mask, n, rows, cols):
    # 0: not strongly connected, 1: strongly connected, 2: vertex-critical
    for v in range(n):
        cols[v] = 0
    bit = 0
    degree_ok = True
    for u in range(n):
        row = 0
        for v in range(n):
            if v == u:
                continue
            if (mask >> bit) & 1:
                row |= 1 << v
                cols[v] |= 1 << u
            bit += 1
        rows[u] = row
        if row == 0:
            degree_ok = False
    if degree_ok:
        for v in range(n):
            if cols[v] == 0:
                degree_ok = False
                break
    # zero in/out degree cannot be strongly connected at n >= 2, so the
    # filter rejects nothing it should keep
    if not degree_ok:
        return 0
    full = (1 << n) - 1
    if not _sc_masked(rows, cols, n, full):
        return 0
    if n == 2:
        return 2  # the double arc: critical by the order-2 convention
    for z in range(n):
        if _sc_masked(rows, cols, n, full ^ (1 << z)):
            return 1
    return 2


@njit(cache=True)
def _search_chunk(n, start, count, enforce_schwarz):
    rows = np.zeros(n, dtype=np.int64)
    cols = np.zeros(n, dtype=np.int64)
    cap = n * (n - 1) // 2
    max_e = -1
    witness = -1
    attain = 0
    crit_total = 0
    sc_total = 0
    viol = -1
    for i in range(count):
        mask = start + i
        flag = _classify_one(mask, n, rows, cols)
        if flag == 0:
            continue
        sc_total += 1
        if flag != 2:
            continue
        crit_total += 1
        e = 0
        m = mask
        while m != 0:
            m &= m - 1
            e += 1
        if enforce_schwarz and e > cap and viol < 0:
            viol = mask
        if e > max_e:
            max_e = e
            witness = mask
            attain = 1
        elif e == max_e:
            attain += 1
    return max_e, witness, attain, crit_total, sc_total, viol


@njit(cache=True)
def _classify_chunk(n, start, count):
    rows = np.zeros(n, dtype=np.int64)
    cols = np.zeros(n, dtype=np.int64)
    out = np.empty(count, dtype=np.uint8)
    for i in range(count):
        out[i] = _classify_one(start + i, n, rows, cols)
    return out


def search_chunk(n, start, count, enforce_schwarz):
    res = _search_chunk(n, start, count, enforce_schwarz)
    return tuple(int(x) for x in res)


def classify_chunk(n, start, count):
    return _classify_chunk(n, start, count)
