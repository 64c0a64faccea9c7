"""Multigraphs with an ordered edge list, their spanning subgraphs, and a
small named catalog.

Edges are ordered pairs of vertex indices stored in a fixed global order; that
order is load-bearing (differential signs depend on edge positions), so
nothing here ever re-sorts it.  Loops and parallel edges are allowed
everywhere.  Subgraph states are bit sets over edge indices, with component
structure computed by union-find and component ids numbered by first vertex
occurrence.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .errors import CapacityError, ParseError

DEFAULT_EDGE_CAP = 24
HARD_EDGE_CAP = 63
# Fixed seed for every randomized edge-order invariance check in the package.
PERMUTATION_SEED = 1729


class UnionFind:
    """Union-find with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple
    name: str = ""

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for i, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError("edge %d = (%d, %d) out of range for %d vertices"
                                 % (i, a, b, self.vertex_count))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        d = 0
        for a, b in self.edges:
            d += (a == v) + (b == v)  # a loop counts twice
        return d


@dataclass(frozen=True)
class SubgraphState:
    """A spanning subgraph: all vertices, a subset of the edges.

    edge_set is a bit set over edge indices (a Python int, so capacity is
    unbounded; the enumeration cap elsewhere keeps it under 64 in practice).
    component_partition maps each vertex to a component id; ids are assigned
    in order of first vertex occurrence, so the tuple is canonical.
    """
    edge_set: int
    component_partition: tuple
    component_count: int
    edge_count: int

    def component_representatives(self) -> list:
        """First vertex of each component, indexed by component id."""
        reps = [-1] * self.component_count
        for v, c in enumerate(self.component_partition):
            if reps[c] < 0:
                reps[c] = v
        return reps


def _as_mask(g: Multigraph, edge_set: Union[int, Iterable[int]]) -> int:
    if isinstance(edge_set, int):
        mask = edge_set
    else:
        mask = 0
        for i in edge_set:
            mask |= 1 << i
    if mask >> g.edge_count:
        raise ValueError("edge_set references edges beyond index %d" % (g.edge_count - 1))
    return mask


def components(g: Multigraph, edge_set: Union[int, Iterable[int]]) -> SubgraphState:
    """Component structure of the spanning subgraph with the given edges."""
    mask = _as_mask(g, edge_set)
    uf = UnionFind(g.vertex_count)
    count = 0
    for i, (a, b) in enumerate(g.edges):
        if mask >> i & 1:
            count += 1
            uf.union(a, b)
    ids = {}
    partition = []
    for v in range(g.vertex_count):
        root = uf.find(v)
        if root not in ids:
            ids[root] = len(ids)
        partition.append(ids[root])
    return SubgraphState(mask, tuple(partition), len(ids), count)


def transfer_component_labels(src_reps, dst_partition, labels, merge):
    """Push per-component labels through a partition coarsening.

    src_reps[c] is a representative element of source component c;
    dst_partition maps elements to destination component ids.  Components
    that collide in the destination have their labels combined with merge(a, b);
    merge returning None kills the whole transfer (the caller drops the term).
    Returns labels indexed by destination component id, or None.
    """
    out = {}
    for cid, rep in enumerate(src_reps):
        dst = dst_partition[rep]
        if dst in out:
            merged = merge(out[dst], labels[cid])
            if merged is None:
                return None
            out[dst] = merged
        else:
            out[dst] = labels[cid]
    return [out[i] for i in range(len(out))]


def edge_cap() -> int:
    """Enumeration cap: GPC_MAX_EDGES if set, else 24; never above 63."""
    raw = os.environ.get("GPC_MAX_EDGES")
    if raw is None:
        return DEFAULT_EDGE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise CapacityError("GPC_MAX_EDGES must be an integer, got %r" % raw)
    if not (1 <= value <= HARD_EDGE_CAP):
        raise CapacityError("GPC_MAX_EDGES must be in 1..%d, got %d"
                            % (HARD_EDGE_CAP, value))
    return value


def enumerate_states(g: Multigraph, cap: int = None) -> Iterator[SubgraphState]:
    """All 2^e spanning subgraph states, in increasing bit-set order."""
    limit = edge_cap() if cap is None else min(cap, HARD_EDGE_CAP)
    if g.edge_count > limit:
        raise CapacityError("graph has %d edges, enumeration cap is %d"
                            % (g.edge_count, limit))
    for mask in range(1 << g.edge_count):
        yield components(g, mask)


def reduce(g: Multigraph, edge: int, mode: str) -> Multigraph:
    """Delete or contract one edge.

    Contraction identifies the endpoints (keeping the smaller index) and
    shifts higher vertex indices down; contracting a loop is deletion.  The
    relative order of the surviving edges is preserved in both modes, and
    parallel edges created by contraction are kept.
    """
    if not (0 <= edge < g.edge_count):
        raise ValueError("no edge %d in graph with %d edges" % (edge, g.edge_count))
    if mode not in ("delete", "contract"):
        raise ValueError("mode must be 'delete' or 'contract', got %r" % mode)
    a, b = g.edges[edge]
    rest = g.edges[:edge] + g.edges[edge + 1:]
    if mode == "delete" or a == b:
        return Multigraph(g.vertex_count, rest, g.name)
    lo, hi = min(a, b), max(a, b)

    def relabel(v):
        if v == hi:
            return lo
        return v - 1 if v > hi else v

    return Multigraph(g.vertex_count - 1,
                      tuple((relabel(x), relabel(y)) for x, y in rest),
                      g.name)


def apply_edge_permutation(g: Multigraph, perm: Iterable[int]) -> Multigraph:
    """Reorder the edge list: new edge i is old edge perm[i]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.edge_count)):
        raise ValueError("not a permutation of 0..%d: %r" % (g.edge_count - 1, perm))
    return Multigraph(g.vertex_count, tuple(g.edges[p] for p in perm), g.name)


def seeded_edge_permutations(g: Multigraph, count: int = 5,
                             seed: int = PERMUTATION_SEED) -> list:
    """Fixed pseudorandom edge permutations for invariance checks."""
    rng = random.Random(seed)
    perms = []
    for _ in range(count):
        p = list(range(g.edge_count))
        rng.shuffle(p)
        perms.append(p)
    return perms


# -- text format -------------------------------------------------------------

def parse_graph(text: str, name: str = "") -> Multigraph:
    """Parse the line-oriented graph format.

    Grammar: optional '# ...' comment lines and blank lines anywhere; exactly
    one 'vertices N' line, which must precede every edge; 'edge A B' lines
    with 0 <= A, B < N.  Errors carry the offending line number.
    """
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "vertices":
            if vertex_count is not None:
                raise ParseError("line %d: duplicate vertices line" % lineno)
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError("line %d: expected 'vertices N'" % lineno)
            vertex_count = int(fields[1])
        elif fields[0] == "edge":
            if vertex_count is None:
                raise ParseError("line %d: edge before vertices line" % lineno)
            if len(fields) != 3:
                raise ParseError("line %d: expected 'edge A B'" % lineno)
            try:
                a, b = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("line %d: edge endpoints must be integers" % lineno)
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise ParseError("line %d: endpoint out of range 0..%d"
                                 % (lineno, vertex_count - 1))
            edges.append((a, b))
        else:
            raise ParseError("line %d: unknown directive %r" % (lineno, fields[0]))
    if vertex_count is None:
        raise ParseError("missing vertices line")
    return Multigraph(vertex_count, tuple(edges), name)


def format_graph(g: Multigraph) -> str:
    lines = []
    if g.name:
        lines.append("# %s" % g.name)
    lines.append("vertices %d" % g.vertex_count)
    lines.extend("edge %d %d" % e for e in g.edges)
    return "\n".join(lines) + "\n"


# -- catalog -----------------------------------------------------------------

def catalog(spec: str) -> Multigraph:
    """Named construction: path:k, cycle:k, complete:k, theta, loop.

    path:k is the k-edge path on k+1 vertices (path:0 is a single bare
    vertex); cycle:1 is a loop and cycle:2 a doubled edge; complete:k lists
    edges lexicographically; theta is two vertices joined by three parallel
    edges.
    """
    fields = spec.split(":")
    kind = fields[0]
    if kind == "theta" and len(fields) == 1:
        return Multigraph(2, ((0, 1), (0, 1), (0, 1)), "theta")
    if kind == "loop" and len(fields) == 1:
        return Multigraph(1, ((0, 0),), "loop")
    if kind in ("path", "cycle", "complete") and len(fields) == 2 and fields[1].isdigit():
        k = int(fields[1])
        if kind == "path":
            return Multigraph(k + 1, tuple((i, i + 1) for i in range(k)), spec)
        if kind == "cycle":
            if k < 1:
                raise ValueError("cycle:k needs k >= 1")
            return Multigraph(k, tuple((i, (i + 1) % k) for i in range(k)), spec)
        if k < 1:
            raise ValueError("complete:k needs k >= 1")
        return Multigraph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)),
                          spec)
    raise ValueError("unknown catalog spec %r" % spec)


def catalog_specs(max_edges: int = 6, max_vertices: int = None) -> list:
    """The standard small-graph battery used by the verification suites."""
    specs = ["path:%d" % k for k in range(1, 7)]
    specs += ["cycle:%d" % k for k in range(2, 7)]
    specs += ["complete:4", "theta", "loop"]
    out = []
    for s in specs:
        g = catalog(s)
        if g.edge_count > max_edges:
            continue
        if max_vertices is not None and g.vertex_count > max_vertices:
            continue
        out.append(s)
    return out
