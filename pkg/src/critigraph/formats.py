"""File formats and report documents.

Edge-list format: the first content line is the order n, every further
content line is a directed edge "u v", and '#' starts a comment anywhere
on a line. The canonical serialization sorts edges by (u, v), so
serialize(parse(serialize(d))) is byte-stable.

Report documents are JSON with a fixed key order and exact integers only
(timings are integer milliseconds and can be omitted entirely), so two
runs over the same inputs render byte-identical documents.
"""

from __future__ import annotations

import json
from typing import Optional

from .criticality import AssertionReport, Lemma2Report
from .digraph import Digraph, edges, new_digraph
from .enumeration import (
    MAX_DECODE_ORDER,
    SearchReport,
    VerificationReport,
    encode,
)
from .errors import ParseError, ValidationError


def parse_edge_list(text: str) -> Digraph:
    """Parse the edge-list format into a digraph.

    Malformed lines raise ParseError naming the line; loops, out-of-range
    endpoints and duplicate edges raise ValidationError.
    """
    order: Optional[int] = None
    rows: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 1:
                raise ParseError(
                    f"line {lineno}: expected the vertex count, got {raw!r}"
                )
            try:
                order = int(parts[0])
            except ValueError:
                raise ParseError(
                    f"line {lineno}: vertex count is not an integer: {raw!r}"
                ) from None
            rows = list(new_digraph(order).rows)
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(
                f"line {lineno}: endpoints are not integers: {raw!r}"
            ) from None
        if u == v:
            raise ValidationError(f"line {lineno}: loop ({u}, {v}) not allowed")
        if not (0 <= u < order and 0 <= v < order):
            raise ValidationError(
                f"line {lineno}: edge ({u}, {v}) out of range for order {order}"
            )
        if rows[u] >> v & 1:
            raise ValidationError(f"line {lineno}: duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
    if order is None:
        raise ParseError("empty input: no vertex-count line")
    return Digraph(order, tuple(rows))


def serialize_edge_list(d: Digraph) -> str:
    lines = [str(d.order)]
    lines.extend(f"{u} {v}" for u, v in edges(d))
    return "\n".join(lines) + "\n"


def serialize_matrix(d: Digraph) -> str:
    out = []
    for u in range(d.order):
        row = d.rows[u]
        out.append("".join("1" if row >> v & 1 else "0" for v in range(d.order)))
    return "\n".join(out) + "\n" if out else ""


def serialize_dot(d: Digraph) -> str:
    lines = ["digraph {"]
    for v in range(d.order):
        lines.append(f"  {v};")
    for u, v in edges(d):
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_document(d: Digraph) -> dict:
    doc: dict = {"n": d.order}
    if d.order <= MAX_DECODE_ORDER:
        doc["mask"] = encode(d).mask
    doc["edges"] = [[u, v] for u, v in edges(d)]
    return doc


def _render_document(doc: dict) -> str:
    """Two-level pretty print: one top-level key per line, compact leaves.

    Keeps large reports (one line per chunk or violation) instead of one
    line per integer, while staying plain JSON.
    """
    parts = []
    for key, value in doc.items():
        if isinstance(value, list):
            if not value:
                rendered = "[]"
            else:
                inner = ",\n".join("    " + json.dumps(item) for item in value)
                rendered = "[\n" + inner + "\n  ]"
        else:
            rendered = json.dumps(value)
        parts.append(f'  "{key}": {rendered}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def render_search_report(report: SearchReport, include_timing: bool = True) -> str:
    doc: dict = {
        "report": "search",
        "n": report.n,
        "max_edges": report.max_edges,
        "witness": digraph_document(report.witness),
        "attain_count": report.attain_count,
        "graphs_scanned": report.graphs_scanned,
        "critical_count": report.critical_count,
    }
    if include_timing:
        doc["elapsed"] = report.elapsed
    doc["chunk_results"] = [
        {
            "chunk": c.index,
            "max_edges": c.max_edges,
            "attain_count": c.attain_count,
            "witness_mask": None if c.witness_mask < 0 else c.witness_mask,
            "critical_count": c.critical_count,
        }
        for c in report.chunk_results
    ]
    return _render_document(doc)


def render_verification_report(
    report: VerificationReport, include_timing: bool = True
) -> str:
    doc: dict = {
        "report": "verification",
        "property": report.property_name,
        "n": report.n,
        "instances_checked": report.instances_checked,
        "precondition_skips": report.precondition_skips,
        "violations": [
            {"mask": v.mask, "details": v.details} for v in report.violations
        ],
    }
    if include_timing:
        doc["elapsed"] = report.elapsed
    return _render_document(doc)


def render_lemma2_report(report: Lemma2Report) -> str:
    doc = {
        "report": "lemma2",
        "cycle_size": report.cycle_size,
        "degrees": list(report.degrees),
        "bound": report.bound,
        "strict_count": report.strict_count,
        "pass": report.passed,
    }
    return _render_document(doc)


def render_assertion_report(report: AssertionReport) -> str:
    doc = {
        "report": "assertion",
        "k": report.k,
        "edge_count_D": report.edge_count_D,
        "edge_count_J": report.edge_count_J,
        "s_n": report.s_n,
        "s_n_k1": report.s_n_k1,
        "d_J_c": report.d_J_c,
        "external_edge_count": report.external_edge_count,
        "cycle_degree_sum": report.cycle_degree_sum,
        "assertion1_bound": report.assertion1_bound,
        "eq1_bound": report.eq1_bound,
        "assertion2_bound": report.assertion2_bound,
        "assertion1_pass": report.assertion1_pass,
        "eq1_pass": report.eq1_pass,
        "assertion2_pass": report.assertion2_pass,
    }
    return _render_document(doc)


def parse_report(text: str) -> dict:
    """Load a rendered report document; integers round-trip exactly."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or "report" not in doc:
        raise ValidationError("not a report document")
    return doc


__all__ = [
    "parse_edge_list",
    "serialize_edge_list",
    "serialize_matrix",
    "serialize_dot",
    "digraph_document",
    "render_search_report",
    "render_verification_report",
    "render_lemma2_report",
    "render_assertion_report",
    "parse_report",
]
