"""Shared helpers and hypothesis strategies."""

from hypothesis import strategies as st

import critigraph as cg


def decode_mask(n: int, mask: int) -> cg.Digraph:
    return cg.decode(cg.MaskCursor(n, mask))


def all_digraphs(n: int):
    """Every labeled loop-free digraph on n vertices."""
    for mask in range(1 << n * (n - 1)):
        yield mask, decode_mask(n, mask)


def set_bits(mask: int) -> set[int]:
    return set(cg.bits_of(mask))


@st.composite
def digraphs(draw, min_order: int = 0, max_order: int = 12) -> cg.Digraph:
    """Random digraph built row by row; scales to large orders."""
    n = draw(st.integers(min_order, max_order))
    rows = tuple(
        draw(st.integers(0, (1 << n) - 1)) & ~(1 << v) for v in range(n)
    )
    return cg.Digraph(n, rows)


@st.composite
def sc_digraphs(draw, min_order: int = 2, max_order: int = 12) -> cg.Digraph:
    """Random strongly connected digraph: a spanning cycle plus extra edges."""
    n = draw(st.integers(min_order, max_order))
    perm = draw(st.permutations(range(n)))
    rows = [0] * n
    for i in range(n):
        rows[perm[i]] |= 1 << perm[(i + 1) % n]
    for v in range(n):
        rows[v] |= draw(st.integers(0, (1 << n) - 1)) & ~(1 << v)
    return cg.Digraph(n, tuple(rows))
