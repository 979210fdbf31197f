"""Exhaustive labeled-digraph enumeration and verification sweeps.

The search space for order n is every loop-free adjacency matrix: one bit
per off-diagonal cell, 2^(n(n-1)) masks. Bit 0 is cell (0,1), then (0,2),
..., then (1,0), (1,2), ... in row-major order skipping the diagonal.

Scans are split into chunks by high-order mask prefix. Chunks are
independent pure tasks; the reducer merges them in index order
(max-then-smallest-witness, counts summed), so results do not depend on
worker count or chunk size. Enumeration is over labeled graphs: the
maximum edge count is isomorphism-invariant, so canonicalization would buy
nothing here.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .criticality import (
    all_chordless_cycles,
    check_assertion1,
    check_assertion2,
    check_lemma2,
    find_removable_vertex,
    s,
    schwarz_bound,
)
from .digraph import Digraph, is_strongly_connected, remove_vertices
from .errors import (
    CapacityError,
    DomainError,
    InvariantError,
    ValidationError,
)

MAX_DECODE_ORDER = 7       # 2^(n(n-1)) <= 2^42: decode/encode stay replayable
MAX_SEARCH_ORDER = 6       # n=6 is 2^30 graphs, opt-in; n=7 is off the desk
MAX_SWEEP_ORDER = 5
CHECKPOINT_HEADER = "critigraph-checkpoint v1"


def space_bits(n: int) -> int:
    return n * (n - 1)


@dataclass(frozen=True)
class MaskCursor:
    """Position in the labeled search space for order n."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"order must be non-negative, got {self.n}")
        if self.n > MAX_DECODE_ORDER:
            raise CapacityError(
                f"mask cursors cover orders up to {MAX_DECODE_ORDER}, got {self.n}"
            )
        if not 0 <= self.mask < 1 << space_bits(self.n):
            raise DomainError(
                f"mask {self.mask} outside [0, 2^{space_bits(self.n)}) for "
                f"n={self.n}"
            )


def decode(cursor: MaskCursor) -> Digraph:
    """Digraph for a mask; inverse of encode."""
    n = cursor.n
    mask = cursor.mask
    rows = []
    bit = 0
    for u in range(n):
        row = 0
        for v in range(n):
            if v == u:
                continue
            if mask >> bit & 1:
                row |= 1 << v
            bit += 1
        rows.append(row)
    return Digraph(n, tuple(rows))


def encode(d: Digraph) -> MaskCursor:
    """Mask for a digraph; inverse of decode."""
    if d.order > MAX_DECODE_ORDER:
        raise CapacityError(
            f"mask cursors cover orders up to {MAX_DECODE_ORDER}, got {d.order}"
        )
    mask = 0
    bit = 0
    for u in range(d.order):
        for v in range(d.order):
            if v == u:
                continue
            if d.rows[u] >> v & 1:
                mask |= 1 << bit
            bit += 1
    return MaskCursor(d.order, mask)


@dataclass(frozen=True)
class ChunkResult:
    """Partial reduction over one mask range, kept for determinism audits."""

    index: int
    max_edges: int          # -1 when the chunk holds no critical graph
    attain_count: int
    witness_mask: int       # -1 when max_edges is -1
    critical_count: int


@dataclass(frozen=True)
class SearchReport:
    n: int
    max_edges: int
    witness: Digraph
    attain_count: int
    graphs_scanned: int
    critical_count: int
    elapsed: int            # milliseconds; integers only, everywhere
    chunk_results: tuple[ChunkResult, ...]


@dataclass(frozen=True)
class Violation:
    mask: int
    details: str


@dataclass(frozen=True)
class VerificationReport:
    property_name: str
    n: int
    instances_checked: int
    precondition_skips: int
    violations: tuple[Violation, ...]
    elapsed: int            # milliseconds


def default_chunk_bits(n: int) -> int:
    """Top-of-mask prefix width: 16 bits at n=6, fewer when the space is small.

    Aims at chunks of at least 2^12 masks so per-chunk overhead stays noise.
    """
    return min(16, max(space_bits(n) - 12, 0))


def _enforce_schwarz(n: int) -> bool:
    # the order-2 double arc is critical by convention and exceeds C(2,2)
    return 3 <= n <= 5


def _chunk_task(args):
    n, index, start, count, enforce = args
    return index, _kernels.search_chunk(n, start, count, enforce)


def _parse_checkpoint_line(parts):
    index = int(parts[0])
    max_e = int(parts[1])
    attain = int(parts[2])
    witness = -1 if parts[3] == "-" else int(parts[3])
    crit = int(parts[4])
    if (max_e < 0) != (witness < 0):
        raise ValueError("witness/max mismatch")
    return index, (max_e, witness, attain, crit)


def _load_checkpoint(path, n: int, chunk_bits: int) -> dict[int, tuple]:
    """Completed chunks from an existing checkpoint file.

    A trailing line that does not parse is treated as a torn write from an
    interrupted run and ignored; corruption anywhere else is an error.
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        return {}
    expected = f"{CHECKPOINT_HEADER} n={n} chunkbits={chunk_bits}"
    if lines[0] != expected:
        raise ValidationError(
            f"checkpoint header mismatch: got {lines[0]!r}, expected {expected!r}"
        )
    done: dict[int, tuple] = {}
    chunk_count = 1 << chunk_bits
    for pos, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        try:
            if len(parts) != 5:
                raise ValueError("field count")
            index, res = _parse_checkpoint_line(parts)
            if not 0 <= index < chunk_count:
                raise ValueError("chunk index range")
        except ValueError as exc:
            if pos == len(lines):
                break  # torn final line from an interrupted run
            raise ValidationError(
                f"corrupt checkpoint line {pos}: {line!r} ({exc})"
            ) from exc
        if index in done:
            raise ValidationError(f"duplicate chunk {index} in checkpoint")
        done[index] = res
    return done


def _checkpoint_line(index: int, res: tuple) -> str:
    max_e, witness, attain, crit = res
    wit = "-" if witness < 0 else str(witness)
    return f"{index} {max_e} {attain} {wit} {crit}\n"


def max_critical_edges(
    n: int,
    *,
    jobs: int = 1,
    chunk_bits: Optional[int] = None,
    checkpoint: Optional[str] = None,
    long_run: bool = False,
) -> SearchReport:
    """Exact maximum edge count over all vertex-critical digraphs on n vertices.

    Scans every labeled loop-free digraph: cheap degree filter, strong
    connectivity, then the n per-vertex deletions with early exit. Returns
    the maximum, the smallest-mask witness, and how many labeled graphs
    attain it. The result is independent of jobs and chunk_bits.
    """
    if not 2 <= n <= MAX_SEARCH_ORDER:
        raise CapacityError(
            f"search supports 2 <= n <= {MAX_SEARCH_ORDER}, got {n}"
        )
    if n == MAX_SEARCH_ORDER and not long_run:
        raise CapacityError(
            f"n={n} scans 2^{space_bits(n)} graphs; pass long_run=True "
            "(CLI: --long-run) to opt in"
        )
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    bits = space_bits(n)
    cb = default_chunk_bits(n) if chunk_bits is None else chunk_bits
    if not 0 <= cb <= min(bits, 20):
        raise DomainError(
            f"chunk_bits must lie in [0, {min(bits, 20)}] for n={n}, got {cb}"
        )
    started = time.perf_counter()
    chunk_count = 1 << cb
    chunk_size = 1 << (bits - cb)
    enforce = _enforce_schwarz(n)

    done: dict[int, tuple] = {}
    ckpt_fh = None
    if checkpoint is not None:
        if os.path.exists(checkpoint):
            done = _load_checkpoint(checkpoint, n, cb)
        # rewrite from the parsed state: drops any torn trailing line so a
        # later resume never sees a corrupt file
        ckpt_fh = open(checkpoint, "w", encoding="ascii")
        ckpt_fh.write(f"{CHECKPOINT_HEADER} n={n} chunkbits={cb}\n")
        for index in sorted(done):
            ckpt_fh.write(_checkpoint_line(index, done[index]))
        ckpt_fh.flush()

    pending = [i for i in range(chunk_count) if i not in done]
    tasks = [(n, i, i * chunk_size, chunk_size, enforce) for i in pending]

    def consume(results) -> None:
        for index, res in results:
            max_e, witness, attain, crit, _sc, viol = res
            if viol >= 0:
                raise InvariantError(
                    f"critical digraph mask {viol} at n={n} exceeds the "
                    f"C(n,2) = {schwarz_bound(n)} edge cap"
                )
            done[index] = (max_e, witness, attain, crit)
            if ckpt_fh is not None:
                ckpt_fh.write(_checkpoint_line(index, done[index]))
                ckpt_fh.flush()

    try:
        if jobs == 1 or len(tasks) <= 1:
            consume(map(_chunk_task, tasks))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                consume(
                    pool.map(
                        _chunk_task,
                        tasks,
                        chunksize=max(1, len(tasks) // (jobs * 4)),
                    )
                )
    finally:
        if ckpt_fh is not None:
            ckpt_fh.close()

    max_e = -1
    witness = -1
    attain = 0
    crit_total = 0
    chunks = []
    for index in range(chunk_count):
        c_max, c_wit, c_att, c_crit = done[index]
        chunks.append(ChunkResult(index, c_max, c_att, c_wit, c_crit))
        crit_total += c_crit
        if c_max > max_e:
            max_e, witness, attain = c_max, c_wit, c_att
        elif c_max == max_e and c_max >= 0:
            attain += c_att
            # ascending index order keeps the smallest witness
    if max_e < 0:
        raise InvariantError(f"no critical digraph found at n={n}")
    elapsed = int((time.perf_counter() - started) * 1000)
    return SearchReport(
        n=n,
        max_edges=max_e,
        witness=decode(MaskCursor(n, witness)),
        attain_count=attain,
        graphs_scanned=chunk_count * chunk_size,
        critical_count=crit_total,
        elapsed=elapsed,
        chunk_results=tuple(chunks),
    )


def _classified_flags(n: int) -> np.ndarray:
    total = 1 << space_bits(n)
    out = np.empty(total, dtype=np.uint8)
    step = 1 << 16
    done = 0
    while done < total:
        cnt = min(step, total - done)
        out[done:done + cnt] = _kernels.classify_chunk(n, done, cnt)
        done += cnt
    return out


def _guard_sweep(n: int, low: int = 2) -> None:
    if not low <= n <= MAX_SWEEP_ORDER:
        raise CapacityError(
            f"exhaustive sweeps support {low} <= n <= {MAX_SWEEP_ORDER}, got {n}"
        )


def strongly_connected_masks(n: int) -> list[int]:
    """Masks of every labeled strongly connected digraph on n vertices."""
    _guard_sweep(n)
    flags = _classified_flags(n)
    return np.nonzero(flags >= 1)[0].tolist()


def critical_masks(n: int) -> list[int]:
    """Masks of every labeled vertex-critical digraph on n vertices."""
    _guard_sweep(n)
    flags = _classified_flags(n)
    return np.nonzero(flags == 2)[0].tolist()


def count_strongly_connected(n: int) -> int:
    """Number of labeled strongly connected loop-free digraphs on n vertices."""
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    if n <= 1:
        return 1  # the lone graph of order <= 1 is strongly connected
    return len(strongly_connected_masks(n))


def verify_lemma1_exhaustive(n: int) -> VerificationReport:
    """Exercise the removable-vertex procedure on every qualifying instance.

    For every strongly connected digraph and every vertex of degree >= n,
    run find_removable_vertex and confirm, by actually deleting the answer,
    that the remainder is strongly connected. Pairs with degree < n are
    counted as precondition skips.
    """
    _guard_sweep(n)
    started = time.perf_counter()
    instances = 0
    skips = 0
    violations = []
    for mask in strongly_connected_masks(n):
        d = decode(MaskCursor(n, mask))
        degs = [0] * n
        for u in range(n):
            row = d.rows[u]
            degs[u] += row.bit_count()
            while row:
                low = row & -row
                degs[low.bit_length() - 1] += 1
                row ^= low
        for v in range(n):
            if degs[v] < n:
                skips += 1
                continue
            instances += 1
            try:
                z = find_removable_vertex(d, v)
            except InvariantError as exc:
                violations.append(Violation(mask, f"v={v}: {exc}"))
                continue
            remainder, _ = remove_vertices(d, 1 << z)
            if z == v or not is_strongly_connected(remainder):
                violations.append(
                    Violation(mask, f"v={v}: returned z={z} fails recheck")
                )
    elapsed = int((time.perf_counter() - started) * 1000)
    return VerificationReport(
        "lemma1", n, instances, skips, tuple(violations), elapsed
    )


def verify_lemma2_exhaustive(n: int) -> VerificationReport:
    """Degree bounds on every chordless cycle of every critical digraph.

    Spanning chordless cycles are outside the statement and counted as
    precondition skips.
    """
    _guard_sweep(n, low=4)
    started = time.perf_counter()
    instances = 0
    skips = 0
    violations = []
    for mask in critical_masks(n):
        d = decode(MaskCursor(n, mask))
        for cyc in all_chordless_cycles(d):
            if len(cyc) == n:
                skips += 1
                continue
            instances += 1
            rep = check_lemma2(d, cyc)
            if not rep.passed:
                violations.append(
                    Violation(
                        mask,
                        f"cycle={cyc}: degrees={rep.degrees} bound={rep.bound} "
                        f"strict_count={rep.strict_count}",
                    )
                )
    elapsed = int((time.perf_counter() - started) * 1000)
    return VerificationReport(
        "lemma2", n, instances, skips, tuple(violations), elapsed
    )


def verify_assertions_exhaustive(
    n: int,
) -> tuple[VerificationReport, VerificationReport]:
    """Sweep both contraction inequalities over all qualifying (D, C) pairs.

    The first report covers the edge-count drop bound (with the contracted
    degree bound) on every pair with n >= k+2. The second covers the cycle
    degree-sum bound on the sub-population whose cycle complement is
    strongly connected; its instances_checked and precondition_skips fields
    are exactly the two population sizes.
    """
    _guard_sweep(n, low=4)
    started = time.perf_counter()
    inst1 = skip1 = inst2 = skip2 = 0
    viol1 = []
    viol2 = []
    for mask in critical_masks(n):
        d = decode(MaskCursor(n, mask))
        for cyc in all_chordless_cycles(d):
            k = len(cyc)
            if k == n or n < k + 2:
                skip1 += 1
                continue
            inst1 += 1
            rep = check_assertion1(d, cyc)
            if not rep.assertion1_pass:
                viol1.append(
                    Violation(
                        mask,
                        f"cycle={cyc}: drop={rep.edge_count_D - rep.edge_count_J}"
                        f" > bound={rep.assertion1_bound}",
                    )
                )
            if not rep.eq1_pass:
                viol1.append(
                    Violation(
                        mask,
                        f"cycle={cyc}: d_J_c={rep.d_J_c} > bound={rep.eq1_bound}",
                    )
                )
            try:
                rep2 = check_assertion2(d, cyc)
            except DomainError:
                skip2 += 1  # cycle complement not strongly connected
                continue
            inst2 += 1
            if not rep2.assertion2_pass:
                viol2.append(
                    Violation(
                        mask,
                        f"cycle={cyc}: degree_sum={rep2.cycle_degree_sum}"
                        f" > bound={rep2.assertion2_bound}",
                    )
                )
    elapsed = int((time.perf_counter() - started) * 1000)
    return (
        VerificationReport("assertion1", n, inst1, skip1, tuple(viol1), elapsed),
        VerificationReport("assertion2", n, inst2, skip2, tuple(viol2), elapsed),
    )


def verify_schwarz_exhaustive(n: int) -> VerificationReport:
    """Every critical digraph carries at most C(n,2) edges (n >= 3).

    The order-2 double arc is exempt: it is critical only by convention and
    C(2,2) = 1 would condemn it.
    """
    _guard_sweep(n, low=3)
    started = time.perf_counter()
    cap = schwarz_bound(n)
    instances = 0
    violations = []
    for mask in critical_masks(n):
        instances += 1
        e = int(mask).bit_count()
        if e > cap:
            violations.append(Violation(mask, f"{e} edges > C(n,2) = {cap}"))
    elapsed = int((time.perf_counter() - started) * 1000)
    return VerificationReport(
        "schwarz", n, instances, 0, tuple(violations), elapsed
    )


def verify_theorem_exhaustive(
    n: int,
    *,
    jobs: int = 1,
    chunk_bits: Optional[int] = None,
    checkpoint: Optional[str] = None,
    long_run: bool = False,
) -> VerificationReport:
    """Search the whole space and compare the maximum against s(n) (n >= 4)."""
    if not 4 <= n <= MAX_SEARCH_ORDER:
        raise DomainError(
            f"the extremal formula applies for 4 <= n <= {MAX_SEARCH_ORDER} "
            f"here, got {n}"
        )
    report = max_critical_edges(
        n, jobs=jobs, chunk_bits=chunk_bits, checkpoint=checkpoint,
        long_run=long_run,
    )
    violations = []
    if report.max_edges != s(n):
        violations.append(
            Violation(
                encode(report.witness).mask,
                f"max_edges={report.max_edges} != s({n})={s(n)}",
            )
        )
    return VerificationReport(
        "theorem",
        n,
        report.graphs_scanned,
        0,
        tuple(violations),
        report.elapsed,
    )
