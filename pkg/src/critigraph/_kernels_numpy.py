"""Vectorised numpy fallback for the enumeration kernels.

Masks are processed in blocks: each block becomes a (B, n, n) boolean
adjacency stack, reachability closures are boolean matrix powers (uint8
matmul, overflow-safe for n <= 7), and criticality is the conjunction of
per-deletion non-connectivity. Reductions replicate the scalar kernel's
ascending-mask tie-breaks exactly.
"""

import numpy as np

NAME = "numpy"

_BLOCK = 1 << 16


def _adjacency(n, masks):
    b = masks.shape[0]
    adj = np.zeros((b, n, n), dtype=bool)
    bit = 0
    for u in range(n):
        for v in range(n):
            if v == u:
                continue
            adj[:, u, v] = (masks >> bit) & 1 != 0
            bit += 1
    return adj


def _closure(adj):
    n = adj.shape[1]
    reach = adj | np.eye(n, dtype=bool)
    # squaring m times covers paths of length up to 2**m; need n-1
    for _ in range(max(0, (n - 2).bit_length())):
        u8 = reach.astype(np.uint8)
        reach = (u8 @ u8) > 0
    return reach


def _classify_block(n, masks):
    flags = np.zeros(masks.shape[0], dtype=np.uint8)
    adj = _adjacency(n, masks)
    cand = adj.any(axis=2).all(axis=1) & adj.any(axis=1).all(axis=1)
    if not bool(cand.any()):
        return flags
    sub = adj[cand]
    sc = _closure(sub).all(axis=(1, 2))
    if n == 2:
        crit = sc.copy()  # the double arc: critical by the order-2 convention
    else:
        crit = sc.copy()
        for z in range(n):
            if not bool(crit.any()):
                break
            deleted = sub.copy()
            deleted[:, z, :] = False
            deleted[:, :, z] = False
            reach = _closure(deleted)
            reach[:, z, :] = True
            reach[:, :, z] = True
            crit &= ~reach.all(axis=(1, 2))
    local = np.zeros(sub.shape[0], dtype=np.uint8)
    local[sc] = 1
    local[crit] = 2
    flags[np.nonzero(cand)[0]] = local
    return flags


def classify_chunk(n, start, count):
    out = np.empty(count, dtype=np.uint8)
    done = 0
    while done < count:
        step = min(_BLOCK, count - done)
        masks = np.arange(start + done, start + done + step, dtype=np.int64)
        out[done:done + step] = _classify_block(n, masks)
        done += step
    return out


def search_chunk(n, start, count, enforce_schwarz):
    cap = n * (n - 1) // 2
    max_e = -1
    witness = -1
    attain = 0
    crit_total = 0
    sc_total = 0
    viol = -1
    done = 0
    while done < count:
        step = min(_BLOCK, count - done)
        masks = np.arange(start + done, start + done + step, dtype=np.int64)
        flags = _classify_block(n, masks)
        sc_total += int((flags >= 1).sum())
        crit_masks = masks[flags == 2]
        crit_total += int(crit_masks.shape[0])
        if crit_masks.shape[0]:
            counts = np.bitwise_count(crit_masks).astype(np.int64)
            if enforce_schwarz and viol < 0:
                over = crit_masks[counts > cap]
                if over.shape[0]:
                    viol = int(over.min())
            block_max = int(counts.max())
            at_max = crit_masks[counts == block_max]
            if block_max > max_e:
                max_e = block_max
                witness = int(at_max.min())
                attain = int(at_max.shape[0])
            elif block_max == max_e:
                # earlier block already holds the smaller witness mask
                attain += int(at_max.shape[0])
        done += step
    return max_e, witness, attain, crit_total, sc_total, viol
