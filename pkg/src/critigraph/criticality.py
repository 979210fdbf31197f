"""Vertex-critical strongly connected digraphs.

A strongly connected digraph is vertex-critical when deleting any single
vertex destroys strong connectivity. This module holds the machinery
specific to that notion: the extremal edge-count formula and construction,
chordless-cycle search, the constructive removable-vertex procedure, and
the degree-bound checkers used by the exhaustive sweeps.

Convention: criticality is defined for order >= 2 only. At order 2 the
double arc counts as critical even though deleting either vertex leaves
the (trivially strongly connected) single vertex; without this convention
there would be no critical 2-vertex graph at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .digraph import (
    Digraph,
    _contract_rows,
    _in_rows,
    _sc_masked,
    add_edge,
    contract,
    degree,
    edge_count,
    new_digraph,
)
from .errors import CapacityError, DomainError, InvariantError

ALL_CYCLES_MAX_ORDER = 8  # all_chordless_cycles is a sweep helper, not a general tool

Cycle = tuple[int, ...]


def s(n: int) -> int:
    """Extremal edge count C(n,2) - n + 4 for order n."""
    if n < 2:
        raise DomainError(f"s(n) requires n >= 2, got {n}")
    return comb(n, 2) - n + 4


def _require_order2(d: Digraph) -> None:
    if d.order < 2:
        raise DomainError(f"criticality is undefined for order {d.order} (< 2)")


def is_vertex_critical(d: Digraph) -> bool:
    _require_order2(d)
    n = d.order
    cols = _in_rows(d.rows, n)
    full = (1 << n) - 1
    if not _sc_masked(d.rows, cols, full):
        return False
    if n == 2:
        return True  # order-2 convention, see module docstring
    for z in range(n):
        if _sc_masked(d.rows, cols, full ^ (1 << z)):
            return False
    return True


def non_critical_witness(d: Digraph) -> Optional[int]:
    """Smallest z whose deletion keeps the graph strongly connected.

    Returns None exactly when the graph is vertex-critical. Requires a
    strongly connected input of order >= 2.
    """
    _require_order2(d)
    n = d.order
    cols = _in_rows(d.rows, n)
    full = (1 << n) - 1
    if not _sc_masked(d.rows, cols, full):
        raise DomainError("non_critical_witness requires a strongly connected graph")
    if n == 2:
        return None
    for z in range(n):
        if _sc_masked(d.rows, cols, full ^ (1 << z)):
            return z
    return None


def extremal_digraph(n: int) -> Digraph:
    """The n-cycle plus all back edges (i, j) for 2 <= j < i <= n-1 plus (1, 0).

    Vertex-critical with exactly s(n) edges. Vertices here are 0-based; a
    1-based description of the same graph shifts every id up by one.
    """
    if n < 4:
        raise DomainError(f"extremal_digraph requires n >= 4, got {n}")
    d = new_digraph(n)
    for i in range(n):
        d = add_edge(d, i, (i + 1) % n)
    for i in range(3, n):
        for j in range(2, i):
            d = add_edge(d, i, j)
    d = add_edge(d, 1, 0)
    assert edge_count(d) == s(n)
    return d


def _require_cycle(d: Digraph, c: Sequence[int]) -> Cycle:
    cyc = tuple(c)
    k = len(cyc)
    if k < 2:
        raise DomainError(f"a cycle needs at least 2 vertices, got {k}")
    if len(set(cyc)) != k:
        raise DomainError(f"cycle vertices must be distinct: {cyc}")
    for v in cyc:
        if not 0 <= v < d.order:
            raise DomainError(f"cycle vertex {v} out of range for order {d.order}")
    for i in range(k):
        u, v = cyc[i], cyc[(i + 1) % k]
        if not d.rows[u] >> v & 1:
            raise DomainError(f"({u}, {v}) is not an edge, sequence is not a cycle")
    return cyc


def is_chordless(d: Digraph, c: Sequence[int]) -> bool:
    """True iff no edge of d joins two cycle vertices besides the k cycle edges.

    Both chord directions count; a 2-cycle is always chordless.
    """
    cyc = _require_cycle(d, c)
    k = len(cyc)
    members = 0
    for v in cyc:
        members |= 1 << v
    cycle_edges = {(cyc[i], cyc[(i + 1) % k]) for i in range(k)}
    for u in cyc:
        row = d.rows[u] & members
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            if (u, v) not in cycle_edges:
                return False
    return True


def _girth(d: Digraph) -> int:
    """Length of a shortest directed cycle; caller guarantees one exists."""
    n = d.order
    cols = _in_rows(d.rows, n)
    best = n + 1
    for start in range(n):
        # BFS levels from start; an edge u->start closes a cycle of
        # length dist(u)+1
        dist = [-1] * n
        dist[start] = 0
        frontier = 1 << start
        seen = frontier
        level = 0
        while frontier and level + 1 < best:
            level += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= d.rows[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            f = nxt
            while f:
                low = f & -f
                dist[low.bit_length() - 1] = level
                f ^= low
            frontier = nxt
        back = cols[start]
        while back:
            low = back & -back
            u = low.bit_length() - 1
            back ^= low
            if dist[u] > 0 and dist[u] + 1 < best:
                best = dist[u] + 1
    return best


def _dist_to_root(d: Digraph, root: int, allowed: int) -> list[int]:
    """Shortest-path distance to root inside the allowed vertex mask (-1: none)."""
    n = d.order
    cols = _in_rows(d.rows, n)
    dist = [-1] * n
    dist[root] = 0
    visited = 1 << root
    frontier = visited
    level = 0
    while frontier:
        level += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= cols[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~visited
        visited |= nxt
        f = nxt
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = level
            f ^= low
        frontier = nxt
    return dist


def find_chordless_cycle(d: Digraph) -> Cycle:
    """A shortest directed cycle, hence chordless.

    Tie-break: the lexicographically smallest vertex sequence whose first
    entry is the smallest vertex on the cycle. A double arc is a valid
    2-cycle.
    """
    if d.order < 2:
        raise DomainError(f"order {d.order} < 2 has no directed cycle")
    cols = _in_rows(d.rows, d.order)
    if not _sc_masked(d.rows, cols, (1 << d.order) - 1):
        raise DomainError("find_chordless_cycle requires a strongly connected graph")
    girth = _girth(d)
    n = d.order
    for root in range(n):
        allowed = ((1 << n) - 1) & ~((1 << root) - 1)  # vertices >= root only
        dist = _dist_to_root(d, root, allowed)
        path = [root]

        def extend(onpath: int) -> Optional[Cycle]:
            depth = len(path)
            last = path[-1]
            if depth == girth:
                return tuple(path) if d.rows[last] >> root & 1 else None
            row = d.rows[last] & allowed & ~onpath
            while row:
                low = row & -row
                w = low.bit_length() - 1
                row ^= low
                # prune on the static distance back to the root
                if dist[w] < 0 or dist[w] > girth - depth:
                    continue
                path.append(w)
                found = extend(onpath | low)
                path.pop()
                if found is not None:
                    return found
            return None

        hit = extend(1 << root)
        if hit is not None:
            return hit
    raise InvariantError(f"girth {girth} reported but no cycle found: {d!r}")


def all_chordless_cycles(d: Digraph) -> list[Cycle]:
    """Every chordless directed cycle, once per rotation class.

    Canonical rotation starts at the smallest vertex; results are sorted by
    (length, sequence). Guarded to small orders: this exists for exhaustive
    verification, not for general graphs.
    """
    if d.order > ALL_CYCLES_MAX_ORDER:
        raise CapacityError(
            f"all_chordless_cycles is capped at order {ALL_CYCLES_MAX_ORDER}, "
            f"got {d.order}"
        )
    n = d.order
    found: list[Cycle] = []
    path: list[int] = []

    def walk(root: int, onpath: int) -> None:
        last = path[-1]
        row = d.rows[last]
        while row:
            low = row & -row
            w = low.bit_length() - 1
            row ^= low
            if w == root and len(path) >= 2:
                found.append(tuple(path))
            elif w > root and not onpath >> w & 1:
                path.append(w)
                walk(root, onpath | low)
                path.pop()

    for root in range(n):
        path = [root]
        walk(root, 1 << root)
    chordless = [c for c in found if is_chordless(d, c)]
    chordless.sort(key=lambda c: (len(c), c))
    return chordless


def _find_removable(rows, cols, n: int, v: int) -> int:
    """Recursive search for z != v with the z-deleted graph strongly connected.

    Precondition (checked by the public wrapper): the graph is strongly
    connected and degree(v) >= n. Each level runtime-verifies its result.
    """
    if n == 2:
        return 1 - v
    partners = rows[v] & cols[v]
    if partners == 0:
        raise InvariantError(
            f"degree(v) >= n yet no double arc at v={v}: rows={rows!r}"
        )
    u = (partners & -partners).bit_length() - 1
    full = (1 << n) - 1
    if _sc_masked(rows, cols, full ^ (1 << u)):
        z = u
    else:
        crows, cn, merged, old_to_new = _contract_rows(rows, n, (1 << u) | (1 << v))
        ccols = _in_rows(crows, cn)
        wdeg = crows[merged].bit_count() + ccols[merged].bit_count()
        if wdeg < cn:
            raise InvariantError(
                f"contracted vertex degree {wdeg} < {cn} after shrinking "
                f"{{{u}, {v}}}: rows={rows!r}"
            )
        zc = _find_removable(crows, ccols, cn, merged)
        z = -1
        for old in range(n):
            if old != u and old != v and old_to_new[old] == zc:
                z = old
                break
        if z < 0:
            raise InvariantError(
                f"no preimage for contracted vertex {zc}: rows={rows!r}"
            )
    if z == v or not _sc_masked(rows, cols, full ^ (1 << z)):
        raise InvariantError(
            f"candidate z={z} fails the postcondition for v={v}: rows={rows!r}"
        )
    return z


def find_removable_vertex(d: Digraph, v: int) -> int:
    """Some z != v whose deletion keeps the graph strongly connected.

    Requires a strongly connected graph of order n >= 2 with degree(v) >= n.
    The procedure follows the double-arc contraction recursion: take the
    smallest u forming a double arc with v; if deleting u works, done;
    otherwise shrink {u, v} and recurse on the merged vertex, mapping the
    answer back. The postcondition is verified before returning.
    """
    n = d.order
    if not 0 <= v < n:
        raise DomainError(f"vertex {v} out of range for order {n}")
    if n < 2:
        raise DomainError(f"find_removable_vertex requires order >= 2, got {n}")
    cols = _in_rows(d.rows, n)
    if not _sc_masked(d.rows, cols, (1 << n) - 1):
        raise DomainError("find_removable_vertex requires a strongly connected graph")
    deg = d.rows[v].bit_count() + cols[v].bit_count()
    if deg < n:
        raise DomainError(f"degree({v}) = {deg} < n = {n}")
    return _find_removable(list(d.rows), cols, n, v)


@dataclass(frozen=True)
class Lemma2Report:
    """Degree bound n-k+2 over the vertices of a chordless cycle."""

    cycle_size: int
    degrees: tuple[int, ...]
    bound: int
    strict_count: int
    passed: bool


@dataclass(frozen=True)
class AssertionReport:
    """Edge-count and degree-sum inequalities around a contracted cycle.

    ``s_n_k1`` abbreviates s(n-k+1). Pass flags are None for inequalities
    the producing checker did not evaluate.
    """

    k: int
    edge_count_D: int
    edge_count_J: int
    s_n: int
    s_n_k1: int
    d_J_c: int
    external_edge_count: int
    cycle_degree_sum: int
    assertion1_bound: int
    eq1_bound: int
    assertion2_bound: int
    assertion1_pass: Optional[bool]
    eq1_pass: Optional[bool]
    assertion2_pass: Optional[bool]


def _checker_preamble(d: Digraph, c: Sequence[int], need_room: bool) -> Cycle:
    if not is_vertex_critical(d):
        raise DomainError("checker precondition failed: graph is not vertex-critical")
    cyc = _require_cycle(d, c)
    if not is_chordless(d, cyc):
        raise DomainError("checker precondition failed: cycle has a chord")
    if len(cyc) == d.order:
        raise DomainError(
            "checker precondition failed: cycle covers every vertex"
        )
    if need_room and d.order < len(cyc) + 2:
        raise DomainError(
            f"checker precondition failed: need n >= k+2, got n={d.order} "
            f"k={len(cyc)}"
        )
    return cyc


def check_lemma2(d: Digraph, c: Sequence[int]) -> Lemma2Report:
    """Degrees on a chordless non-spanning cycle of a critical graph.

    Passes iff every cycle vertex has degree <= n-k+2 and at least two are
    strictly below the bound.
    """
    cyc = _checker_preamble(d, c, need_room=False)
    n, k = d.order, len(cyc)
    bound = n - k + 2
    degs = tuple(degree(d, v) for v in cyc)
    strict = sum(1 for g in degs if g < bound)
    passed = all(g <= bound for g in degs) and strict >= 2
    return Lemma2Report(k, degs, bound, strict, passed)


def _assertion_numbers(d: Digraph, cyc: Cycle):
    n, k = d.order, len(cyc)
    members = 0
    for v in cyc:
        members |= 1 << v
    res = contract(d, members)
    j = res.graph
    c_vertex = res.merged_vertex
    e_d = edge_count(d)
    e_j = edge_count(j)
    d_j_c = degree(j, c_vertex)
    external = 0
    for u in range(n):
        if members >> u & 1:
            continue
        external += (d.rows[u] & ~members).bit_count()
    cycle_degree_sum = sum(degree(d, v) for v in cyc)
    return n, k, e_d, e_j, d_j_c, external, cycle_degree_sum


def check_assertion1(d: Digraph, c: Sequence[int]) -> AssertionReport:
    """Contract the cycle and compare the edge-count drop against s bounds.

    Checks |E(D)| - |E(J)| <= s(n) - s(n-k+1) and the contracted vertex's
    degree bound d_J(c) <= n - k.
    """
    cyc = _checker_preamble(d, c, need_room=True)
    n, k, e_d, e_j, d_j_c, external, deg_sum = _assertion_numbers(d, cyc)
    a1_bound = s(n) - s(n - k + 1)
    eq1_bound = n - k
    a2_bound = (n - 1) * k - n + 4
    return AssertionReport(
        k=k,
        edge_count_D=e_d,
        edge_count_J=e_j,
        s_n=s(n),
        s_n_k1=s(n - k + 1),
        d_J_c=d_j_c,
        external_edge_count=external,
        cycle_degree_sum=deg_sum,
        assertion1_bound=a1_bound,
        eq1_bound=eq1_bound,
        assertion2_bound=a2_bound,
        assertion1_pass=e_d - e_j <= a1_bound,
        eq1_pass=d_j_c <= eq1_bound,
        assertion2_pass=None,
    )


def check_assertion2(d: Digraph, c: Sequence[int]) -> AssertionReport:
    """Cycle degree sum against (n-1)k - n + 4.

    Additional precondition, decided here from the graph rather than
    assumed: the graph minus the cycle vertices must be strongly connected
    (the contraction is then not critical).
    """
    cyc = _checker_preamble(d, c, need_room=True)
    members = 0
    for v in cyc:
        members |= 1 << v
    rest = ((1 << d.order) - 1) & ~members
    cols = _in_rows(d.rows, d.order)
    if not _sc_masked(d.rows, cols, rest):
        raise DomainError(
            "checker precondition failed: graph minus the cycle is not "
            "strongly connected"
        )
    n, k, e_d, e_j, d_j_c, external, deg_sum = _assertion_numbers(d, cyc)
    a2_bound = (n - 1) * k - n + 4
    return AssertionReport(
        k=k,
        edge_count_D=e_d,
        edge_count_J=e_j,
        s_n=s(n),
        s_n_k1=s(n - k + 1),
        d_J_c=d_j_c,
        external_edge_count=external,
        cycle_degree_sum=deg_sum,
        assertion1_bound=s(n) - s(n - k + 1),
        eq1_bound=n - k,
        assertion2_bound=a2_bound,
        assertion1_pass=None,
        eq1_pass=None,
        assertion2_pass=deg_sum <= a2_bound,
    )


def schwarz_bound(n: int) -> int:
    """Edge-count cap C(n,2) that every critical graph must respect (n >= 3)."""
    if n < 3:
        raise DomainError(f"the C(n,2) bound is meaningful for n >= 3, got {n}")
    return comb(n, 2)


def check_schwarz(d: Digraph) -> bool:
    """True iff the graph is not a counterexample to the C(n,2) cap.

    Vacuously true for non-critical graphs; order must be >= 3 (the order-2
    double arc is critical by convention and exceeds C(2,2) = 1, so the cap
    starts at 3).
    """
    if d.order < 3:
        raise DomainError(f"check_schwarz requires order >= 3, got {d.order}")
    if not is_vertex_critical(d):
        return True
    return edge_count(d) <= schwarz_bound(d.order)
