"""Bit-vector digraphs on up to 64 vertices.

Vertices are ints 0..n-1. Row v of ``rows`` packs the out-neighbour set of v
into a single int (bit u set means the edge v->u exists), so one adjacency
row fits a machine word for every representable graph. Vertex sets are plain
ints used as bitmasks.

All operations are pure: a Digraph is never mutated, mutating operations
return new values, and everything here is safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BoundsError, CapacityError, DomainError, LoopEdgeError

MAX_VERTICES = 64

# A vertex set is an int bitmask; only bits < order of the associated
# digraph may be set.
VertexSet = int


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    out = 0
    for v in vertices:
        if v < 0:
            raise BoundsError(f"negative vertex id {v}")
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Digraph:
    """Loop-free simple digraph; ``rows[v]`` is the out-neighbour bitmask."""

    order: int
    rows: tuple[int, ...]

    def __repr__(self) -> str:
        return f"Digraph(order={self.order}, edges={edge_count(self)})"


@dataclass(frozen=True)
class ContractionResult:
    """A contracted digraph plus the old-id -> new-id mapping.

    Every member of the contracted set maps to ``merged_vertex``; the mapping
    restricted to the survivors is injective and order-preserving.
    """

    graph: Digraph
    merged_vertex: int
    old_to_new: tuple[int, ...]


def _check_vertex(d: Digraph, v: int) -> None:
    if not 0 <= v < d.order:
        raise BoundsError(f"vertex {v} out of range for order {d.order}")


def _check_set(d: Digraph, a: VertexSet) -> None:
    if a < 0 or a >> d.order:
        raise BoundsError(f"vertex set {a:#x} has bits outside 0..{d.order - 1}")


def new_digraph(n: int) -> Digraph:
    """Edgeless digraph on n vertices."""
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds the {MAX_VERTICES}-vertex capacity")
    return Digraph(n, (0,) * n)


def add_edge(d: Digraph, u: int, v: int) -> Digraph:
    """Return d with the directed edge (u, v) added; idempotent."""
    _check_vertex(d, u)
    _check_vertex(d, v)
    if u == v:
        raise LoopEdgeError(f"loop ({u}, {v}) rejected: digraphs here are loop-free")
    if d.rows[u] >> v & 1:
        return d
    rows = list(d.rows)
    rows[u] |= 1 << v
    return Digraph(d.order, tuple(rows))


def digraph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph from an edge iterable (convenience constructor)."""
    d = new_digraph(n)
    rows = list(d.rows)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BoundsError(f"edge ({u}, {v}) out of range for order {n}")
        if u == v:
            raise LoopEdgeError(f"loop ({u}, {v}) rejected: digraphs here are loop-free")
        rows[u] |= 1 << v
    return Digraph(n, tuple(rows))


def edges(d: Digraph) -> list[tuple[int, int]]:
    """All directed edges, sorted by (u, v)."""
    return [(u, v) for u in range(d.order) for v in bits_of(d.rows[u])]


def out_set(d: Digraph, v: int) -> VertexSet:
    _check_vertex(d, v)
    return d.rows[v]


def in_set(d: Digraph, v: int) -> VertexSet:
    _check_vertex(d, v)
    bit = 1 << v
    acc = 0
    for u in range(d.order):
        if d.rows[u] & bit:
            acc |= 1 << u
    return acc


def degree(d: Digraph, v: int) -> int:
    """In-degree plus out-degree; a double-arc partner contributes 2."""
    return (out_set(d, v)).bit_count() + (in_set(d, v)).bit_count()


def edge_count(d: Digraph) -> int:
    return sum(row.bit_count() for row in d.rows)


def _in_rows(rows: tuple[int, ...] | list[int], n: int) -> list[int]:
    """Column masks: entry v collects the in-neighbours of v."""
    cols = [0] * n
    for u in range(n):
        row = rows[u]
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= 1 << u
            row ^= low
    return cols


def _sc_masked(rows, cols, active: int) -> bool:
    """Strong connectivity of the subgraph induced by the ``active`` mask.

    Zero or one active vertex counts as strongly connected.
    """
    if active & (active - 1) == 0:
        return True
    start = active & -active
    # forward sweep from the lowest active vertex
    visited = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= active & ~visited
        visited |= nxt
        frontier = nxt
    if visited != active:
        return False
    # backward sweep over the column masks
    visited = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= cols[low.bit_length() - 1]
            f ^= low
        nxt &= active & ~visited
        visited |= nxt
        frontier = nxt
    return visited == active


def is_strongly_connected(d: Digraph) -> bool:
    """Exact decision; orders 0 and 1 are strongly connected by convention."""
    if d.order <= 1:
        return True
    cols = _in_rows(d.rows, d.order)
    return _sc_masked(d.rows, cols, (1 << d.order) - 1)


def reachable_set(d: Digraph, v: int) -> VertexSet:
    """All vertices reachable from v by directed paths, including v."""
    _check_vertex(d, v)
    visited = 1 << v
    frontier = visited
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= d.rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~visited
        visited |= nxt
        frontier = nxt
    return visited


def remove_vertices(d: Digraph, a: VertexSet) -> tuple[Digraph, tuple[int, ...]]:
    """Delete the vertices in ``a`` and compact the survivors.

    Returns the new graph and an old-id -> new-id tuple; removed ids map
    to -1. Surviving ids keep their relative order.
    """
    _check_set(d, a)
    n = d.order
    old_to_new = [-1] * n
    nxt = 0
    for old in range(n):
        if not a >> old & 1:
            old_to_new[old] = nxt
            nxt += 1
    rows = [0] * nxt
    for old in range(n):
        new = old_to_new[old]
        if new < 0:
            continue
        row = d.rows[old] & ~a
        packed = 0
        while row:
            low = row & -row
            packed |= 1 << old_to_new[low.bit_length() - 1]
            row ^= low
        rows[new] = packed
    return Digraph(nxt, tuple(rows)), tuple(old_to_new)


def _contract_rows(rows, n: int, a: int):
    """Contraction on raw rows; returns (new_rows, new_n, merged, old_to_new)."""
    rep = (a & -a).bit_length() - 1  # merged vertex sits at min(A)'s slot
    old_to_new = [-1] * n
    nxt = 0
    merged = -1
    for old in range(n):
        if old == rep:
            merged = nxt
            old_to_new[old] = nxt
            nxt += 1
        elif a >> old & 1:
            continue
        else:
            old_to_new[old] = nxt
            nxt += 1
    for old in range(n):
        if a >> old & 1:
            old_to_new[old] = merged
    new_rows = [0] * nxt
    merged_out = 0
    merged_in = 0
    for old in range(n):
        row = rows[old]
        if a >> old & 1:
            merged_out |= row & ~a
            continue
        new = old_to_new[old]
        packed = 0
        rest = row & ~a
        while rest:
            low = rest & -rest
            packed |= 1 << old_to_new[low.bit_length() - 1]
            rest ^= low
        if row & a:
            merged_in |= 1 << old
        new_rows[new] = packed
    out_packed = 0
    while merged_out:
        low = merged_out & -merged_out
        out_packed |= 1 << old_to_new[low.bit_length() - 1]
        merged_out ^= low
    new_rows[merged] = out_packed
    while merged_in:
        low = merged_in & -merged_in
        new_rows[old_to_new[low.bit_length() - 1]] |= 1 << merged
        merged_in ^= low
    return new_rows, nxt, merged, old_to_new


def contract(d: Digraph, a: VertexSet) -> ContractionResult:
    """Merge the vertex set ``a`` into one vertex.

    The merged vertex's out/in-neighbourhoods are the unions of the members'
    neighbourhoods outside ``a``; edges internal to ``a`` are discarded, so
    the merged vertex never carries a loop.
    """
    _check_set(d, a)
    if a == 0:
        raise DomainError("cannot contract the empty vertex set")
    new_rows, new_n, merged, old_to_new = _contract_rows(d.rows, d.order, a)
    return ContractionResult(
        Digraph(new_n, tuple(new_rows)), merged, tuple(old_to_new)
    )
