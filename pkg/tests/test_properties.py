"""Property-based and exhaustive invariant tests.

Exhaustive passes cover every labeled digraph at tiny orders; hypothesis
covers randomized larger instances of the same invariants.
"""

from hypothesis import given, settings
from hypothesis import strategies as st

import critigraph as cg

from conftest import all_digraphs, decode_mask, digraphs, sc_digraphs


@given(digraphs(max_order=16))
def test_degree_identities(d):
    n = d.order
    degs = [cg.degree(d, v) for v in range(n)]
    assert sum(cg.out_set(d, v).bit_count() for v in range(n)) == cg.edge_count(d)
    assert sum(degs) == 2 * cg.edge_count(d)
    assert all(g <= 2 * (n - 1) for g in degs)


@given(digraphs(max_order=7))
def test_encode_decode_round_trip(d):
    assert cg.decode(cg.encode(d)) == d


@given(digraphs(max_order=32))
def test_edge_list_round_trip(d):
    assert cg.parse_edge_list(cg.serialize_edge_list(d)) == d


@given(sc_digraphs(max_order=32), st.data())
@settings(max_examples=60)
def test_contract_preserves_strong_connectivity(d, data):
    a = data.draw(st.integers(1, (1 << d.order) - 1))
    res = cg.contract(d, a)
    assert cg.is_strongly_connected(res.graph)


def test_contract_preserves_strong_connectivity_exhaustive_n4():
    for n in (2, 3, 4):
        for mask, d in all_digraphs(n):
            if not cg.is_strongly_connected(d):
                continue
            for a in range(1, 1 << n):
                assert cg.is_strongly_connected(cg.contract(d, a).graph), (
                    n, mask, a,
                )


@given(digraphs(min_order=2, max_order=10), st.data())
@settings(max_examples=120)
def test_remove_and_contract_commute_with_relabeling(d, data):
    n = d.order
    a = data.draw(st.integers(1, (1 << n) - 1))
    others = ((1 << n) - 1) & ~a
    remove = data.draw(st.integers(0, (1 << n) - 1)) & others

    # contract first, then remove the image of the removal set
    res = cg.contract(d, a)
    removed_new = 0
    for old in cg.bits_of(remove):
        removed_new |= 1 << res.old_to_new[old]
    left, _ = cg.remove_vertices(res.graph, removed_new)

    # remove first, then contract the image of the contraction set
    shrunk, mapping = cg.remove_vertices(d, remove)
    a_new = 0
    for old in cg.bits_of(a):
        a_new |= 1 << mapping[old]
    right = cg.contract(shrunk, a_new).graph

    assert left == right


def test_criticality_caps_degree_exhaustive():
    # no vertex of a critical graph may reach degree n, otherwise some
    # deletion would be survivable
    for n in (3, 4, 5):
        for mask in cg.critical_masks(n):
            d = decode_mask(n, mask)
            assert all(cg.degree(d, v) <= n - 1 for v in range(n)), (n, mask)


def test_shortest_cycle_is_chordless_exhaustive():
    for n in (2, 3, 4):
        for mask, d in all_digraphs(n):
            if not cg.is_strongly_connected(d):
                continue
            got = cg.find_chordless_cycle(d)
            assert cg.is_chordless(d, got)
            candidates = cg.all_chordless_cycles(d)
            shortest = min(len(c) for c in candidates)
            assert len(got) == shortest
            assert got == min(c for c in candidates if len(c) == shortest)


@given(st.integers(5, 6), st.data())
@settings(max_examples=40, deadline=None)
def test_shortest_cycle_is_chordless_sampled(n, data):
    mask = data.draw(st.integers(0, (1 << n * (n - 1)) - 1))
    d = decode_mask(n, mask)
    if not cg.is_strongly_connected(d):
        return
    got = cg.find_chordless_cycle(d)
    assert cg.is_chordless(d, got)
    candidates = cg.all_chordless_cycles(d)
    shortest = min(len(c) for c in candidates)
    assert len(got) == shortest
    assert got == min(c for c in candidates if len(c) == shortest)


@given(sc_digraphs(min_order=2, max_order=10))
@settings(max_examples=80)
def test_removable_vertex_on_qualifying_random_graphs(d):
    n = d.order
    for v in range(n):
        if cg.degree(d, v) < n:
            continue
        z = cg.find_removable_vertex(d, v)
        got, _ = cg.remove_vertices(d, 1 << z)
        assert z != v
        assert cg.is_strongly_connected(got)


def test_all_chordless_cycles_exhaustive_consistency():
    # each reported cycle is chordless and rotation-canonical; every double
    # arc shows up as a 2-cycle
    for mask, d in all_digraphs(3):
        cycles = cg.all_chordless_cycles(d)
        assert len(set(cycles)) == len(cycles)
        for c in cycles:
            assert c[0] == min(c)
            assert cg.is_chordless(d, c)
        for u in range(3):
            for v in range(u + 1, 3):
                if d.rows[u] >> v & 1 and d.rows[v] >> u & 1:
                    assert (u, v) in cycles
