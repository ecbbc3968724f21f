"""Stallings foldings for finitely generated subgroups of free groups."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import DomainError
from .words import Word, free_reduce


@dataclass
class SubgroupGraph:
    vertices: set
    edges: set  # (source, positive letter, target)
    base: int = 0

    @property
    def rank(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    def outgoing(self):
        out = defaultdict(dict)
        inc = defaultdict(dict)
        for s, lab, t in self.edges:
            out[s][lab] = t
            inc[t][lab] = s
        return out, inc

    def is_folded(self) -> bool:
        seen_out, seen_in = set(), set()
        for s, lab, t in self.edges:
            if (s, lab) in seen_out or (t, lab) in seen_in:
                return False
            seen_out.add((s, lab))
            seen_in.add((t, lab))
        return True


def _petals(gens):
    vertices, edges = {0}, set()
    fresh = 1
    for w in gens:
        w = free_reduce(w)
        if not w:
            continue
        cur = 0
        for i, l in enumerate(w):
            nxt = 0 if i == len(w) - 1 else fresh
            if nxt:
                vertices.add(nxt)
                fresh += 1
            if l.exponent > 0:
                edges.add((cur, l, nxt))
            else:
                edges.add((nxt, l.inverse(), cur))
            cur = nxt
    return vertices, edges


def fold(graph: SubgroupGraph) -> SubgroupGraph:
    vertices, edges, base = set(graph.vertices), set(graph.edges), graph.base
    while True:
        clash = None
        first_out, first_in = {}, {}
        for s, lab, t in edges:
            prev = first_out.setdefault((s, lab), t)
            if prev != t:
                clash = (prev, t)
                break
            prev = first_in.setdefault((t, lab), s)
            if prev != s:
                clash = (prev, s)
                break
        if clash is None:
            return SubgroupGraph(vertices, edges, base)
        keep, drop = sorted(clash)
        edges = {(keep if s == drop else s, lab, keep if t == drop else t) for s, lab, t in edges}
        vertices.discard(drop)
        if base == drop:
            base = keep


def core(graph: SubgroupGraph) -> SubgroupGraph:
    """Prune hanging trees (never the base vertex)."""
    vertices, edges = set(graph.vertices), set(graph.edges)
    while True:
        degree = defaultdict(int)
        for s, _, t in edges:
            degree[s] += 1
            degree[t] += 1
        leaves = {v for v in vertices if v != graph.base and degree[v] <= 1}
        if not leaves:
            return SubgroupGraph(vertices, edges, graph.base)
        vertices -= leaves
        edges = {e for e in edges if e[0] not in leaves and e[2] not in leaves}


def subgroup_graph(gens) -> SubgroupGraph:
    vertices, edges = _petals(gens)
    return core(fold(SubgroupGraph(vertices, edges, 0)))


def stallings_rank(ambient, gens):
    """Rank of the subgroup of a free group generated by ``gens``, with its core graph."""
    if getattr(ambient, "kind", None) != "free":
        raise DomainError(f"Stallings folding needs a free ambient group, got {ambient.name}")
    graph = subgroup_graph([Word(g) for g in gens])
    return graph.rank, graph


def subgroup_membership(graph: SubgroupGraph, w) -> bool:
    out, inc = graph.outgoing()
    v = graph.base
    for l in free_reduce(w):
        step = out[v] if l.exponent > 0 else inc[v]
        v = step.get(l.positive())
        if v is None:
            return False
    return v == graph.base
