"""The finite bundle hierarchy of m x n pencils: enumeration, cover graph, exports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

import networkx as nx

from .closure import bundle_closure_contains
from .partitions import Partition
from .structure import BundleSignature, PencilStructure, signature


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def _segre_multisets(weight: int, min_index: int = 0, pool: tuple | None = None):
    """Multisets of non-empty partitions with total ``weight``."""
    if pool is None:
        pool = tuple(p for k in range(1, weight + 1) for p in partitions_of(k))
    if weight == 0:
        yield ()
        return
    for i in range(min_index, len(pool)):
        p = pool[i]
        if p.weight <= weight:
            for rest in _segre_multisets(weight - p.weight, i, pool):
                yield (p,) + rest


def _index_multisets(count: int, budget: int):
    """Multisets of ``count`` non-negative integers with sum <= budget."""
    for combo in combinations_with_replacement(range(budget + 1), count):
        if sum(combo) <= budget:
            yield combo


def enumerate_bundles(m: int, n: int) -> list[BundleSignature]:
    """Every bundle signature of m x n pencils, each once, in canonical order."""
    if m < 0 or n < 0:
        raise ValueError("sizes must be non-negative")
    out = set()
    for rho in range(min(m, n) + 1):
        for right in _index_multisets(n - rho, rho):
            for left in _index_multisets(m - rho, rho - sum(right)):
                delta = rho - sum(right) - sum(left)
                pool = tuple(p for k in range(1, delta + 1) for p in partitions_of(k))
                for segres in _segre_multisets(delta, 0, pool):
                    out.add(BundleSignature(m, n, segres, right, left))
    return sorted(out, key=str)


def c_jor(s: PencilStructure | BundleSignature) -> int:
    """Codimension of the Jordan structure: sum over eigenvalues of S_1 + 3 S_2 + 5 S_3 + ..."""
    segres = s.segre if isinstance(s, BundleSignature) else [seg for _, seg in s.eig]
    return sum((2 * i + 1) * part for seg in segres for i, part in enumerate(seg))


@dataclass
class HierarchyNode:
    id: str
    signature: BundleSignature
    c_jor: int
    eig_count: int


@dataclass
class HierarchyGraph:
    size: tuple[int, int]
    nodes: list[HierarchyNode] = field(default_factory=list)
    edges: list[tuple[str, str]] = field(default_factory=list)

    def node(self, node_id: str) -> HierarchyNode:
        for nd in self.nodes:
            if nd.id == node_id:
                return nd
        raise KeyError(node_id)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(nd.id for nd in self.nodes)
        g.add_edges_from(self.edges)
        return g


def inclusion_order(sigs: list[BundleSignature]) -> nx.DiGraph:
    """Strict inclusion: edge a -> b when closure B(b) is properly inside closure B(a)."""
    g = nx.DiGraph()
    ids = [str(s) for s in sigs]
    g.add_nodes_from(ids)
    for a, sa in zip(ids, sigs):
        for b, sb in zip(ids, sigs):
            if a != b and bundle_closure_contains(sa, sb)[0]:
                g.add_edge(a, b)
    return g


def hasse(m: int, n: int) -> HierarchyGraph:
    sigs = enumerate_bundles(m, n)
    order = inclusion_order(sigs)
    if not nx.is_directed_acyclic_graph(order):
        raise RuntimeError(f"bundle inclusion on {m}x{n} is not antisymmetric")
    cover = nx.transitive_reduction(order)
    nodes = [HierarchyNode(str(s), s, c_jor(s), s.eig_count) for s in sigs]
    return HierarchyGraph((m, n), nodes, sorted(cover.edges()))


def export_dot(g: HierarchyGraph) -> str:
    m, n = g.size
    index = {nd.id: i for i, nd in enumerate(g.nodes)}
    lines = [f'digraph "bundles_{m}x{n}" {{', "  rankdir=TB;", "  node [shape=box];"]
    for i, nd in enumerate(g.nodes):
        label = f"{nd.id}\\nc_jor={nd.c_jor}".replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    for a, b in g.edges:
        lines.append(f"  n{index[a]} -> n{index[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: HierarchyGraph) -> str:
    doc = {
        "size": list(g.size),
        "nodes": [
            {"id": nd.id, "signature": str(nd.signature), "c_jor": nd.c_jor, "eig_count": nd.eig_count}
            for nd in g.nodes
        ],
        "edges": [{"from": a, "to": b} for a, b in g.edges],
    }
    return json.dumps(doc, indent=2) + "\n"


__all__ = [
    "HierarchyGraph",
    "HierarchyNode",
    "c_jor",
    "enumerate_bundles",
    "export_dot",
    "export_json",
    "hasse",
    "inclusion_order",
    "partitions_of",
    "signature",
]
