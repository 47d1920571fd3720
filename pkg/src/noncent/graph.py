"""Non-centralizer graphs as explicit complete multipartite structures.

Parts are the equal-centralizer classes; two vertices are adjacent exactly
when they sit in different parts, so edges stay implicit and are generated
on demand by the exporters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FiniteGroup, TooLarge
from .analysis import BetaPartition, beta_partition

__all__ = [
    "UnknownFormat",
    "NonCentralizerGraph",
    "build_graph",
    "degree_sequence",
    "oracle_graph",
    "export",
]

ORACLE_CAP = 256


class UnknownFormat(ValueError):
    """Unrecognized export format name."""


@dataclass(frozen=True)
class NonCentralizerGraph:
    """Complete multipartite graph on (a subset of) the group's elements.

    Vertices keep their group element indices.  induced=True means the center
    part was removed (the graph on G minus Z(G)).
    """

    labels: tuple[str, ...]
    parts: tuple[tuple[int, ...], ...]
    induced: bool

    @property
    def vertex_count(self) -> int:
        return sum(len(p) for p in self.parts)

    def vertices(self) -> list[int]:
        return sorted(v for p in self.parts for v in p)

    def part_of(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def edges(self):
        """Yield edges (u, v) with u < v, ascending; quadratic, export-scale."""
        part_of = self.part_of()
        verts = self.vertices()
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if part_of[u] != part_of[v]:
                    yield (u, v)

    def edge_count(self) -> int:
        n = self.vertex_count
        return (n * n - sum(len(p) ** 2 for p in self.parts)) // 2


def build_graph(g: FiniteGroup, induced: bool = False,
                part: BetaPartition | None = None) -> NonCentralizerGraph:
    """Materialize the (induced) non-centralizer graph of g."""
    if part is None:
        part = beta_partition(g)
    classes = part.classes[1:] if induced else part.classes
    return NonCentralizerGraph(labels=g.labels, parts=tuple(classes), induced=induced)


def degree_sequence(graph: NonCentralizerGraph) -> list[int]:
    """Sorted degree multiset, computed from part sizes alone."""
    n = graph.vertex_count
    return sorted(n - len(p) for p in graph.parts for _ in p)


def oracle_graph(g: FiniteGroup, induced: bool = False) -> set[tuple[int, int]]:
    """Edge set built the slow way: compare centralizer member-sets pairwise.

    Independent of the partition machinery; used to cross-check build_graph.
    """
    if g.order > ORACLE_CAP:
        raise TooLarge(f"oracle capped at order {ORACLE_CAP}")
    comm = g.commuting_matrix()
    cents = [frozenset(int(i) for i in comm[x].nonzero()[0]) for x in range(g.order)]
    if induced:
        verts = [x for x in range(g.order) if len(cents[x]) != g.order]
    else:
        verts = list(range(g.order))
    edges = set()
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if cents[u] != cents[v]:
                edges.add((u, v))
    return edges


def export(graph: NonCentralizerGraph, fmt: str) -> str:
    """Serialize deterministically as dot, edge-list, or parts-json."""
    if fmt == "dot":
        return _export_dot(graph)
    if fmt == "edge-list":
        return "".join(f"{u} {v}\n" for u, v in graph.edges())
    if fmt == "parts-json":
        payload = {"parts": [list(p) for p in graph.parts], "induced": graph.induced}
        return json.dumps(payload, separators=(", ", ": ")) + "\n"
    raise UnknownFormat(f"unknown export format: {fmt!r}")


def _export_dot(graph: NonCentralizerGraph) -> str:
    lines = ["graph noncentralizer {"]
    for i, p in enumerate(graph.parts):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="part {i}";')
        for v in p:
            lines.append(f'    n{v} [label="{graph.labels[v]}"];')
        lines.append("  }")
    for u, v in graph.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
