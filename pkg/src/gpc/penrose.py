"""Penrose-style polynomials of cubic graphs with a perfect matching.

A matched cubic graph is stored combinatorially: half-edges grouped into
ordered vertex triples and into edge pairs, plus a list of matching edge
indices.  Each matching edge has two legs at either end (the end vertex's two
non-matching half-edges, in vertex-triple order).  A state resolves every
matching edge as one of

    PARALLEL  arcs u1-v1, u2-v2
    CROSSED   arcs u1-v2, u2-v1
    NODE0 / NODE1  crossed arcs whose strands are additionally fused into a
                   single component at the site

Loops are the closed strands obtained by alternating edge halves and arcs;
components additionally identify the loops through each nodal site.  The
polynomial sum_S (-1)^{n(S)} 2^{n(S)} lambda^{c(S)} over the three unlabeled
resolutions counts, at lambda = n, the edge n-colorings that are proper around
every matching edge.  The chain complex grades enhanced states (components
labeled unit/x) by j = #x, with degree n(S); the differential turns one
PARALLEL site into NODE0 or one CROSSED site into NODE1, and its sign counts
the non-nodal sites strictly before the one operated on.  The two-variable
refinement weights NODE0 sites with v and NODE1 sites with w and labels them
unit/y and unit/z, giving the triple grading (i, j, k) = (#x, #y, #z).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .complexes import ComplexBuilder, GradedComplex, homology
from .errors import (BudgetError, CapacityError, ParseError,
                     TheoryViolationError, ValidationError)
from .graphs import Multigraph, UnionFind, transfer_component_labels
from .poly import MultiPoly, power_table
from .chromatic import UNIT, X, _merge_x_labels

PARALLEL, CROSSED, NODE0, NODE1 = 0, 1, 2, 3
RESOLUTION_NAMES = ("parallel", "crossed", "node0", "node1")
MAX_MATCHING = 20


@dataclass(frozen=True)
class MatchedCubicGraph:
    halfedge_count: int
    vertices: tuple   # ordered triples of half-edge ids
    edges: tuple      # pairs of half-edge ids
    matching: tuple   # edge indices forming a perfect matching
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices",
                           tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "matching", tuple(self.matching))
        seen_v: dict = {}
        for vi, triple in enumerate(self.vertices):
            if len(triple) != 3:
                raise ValidationError("vertex %d has %d half-edges, need 3"
                                      % (vi, len(triple)))
            for h in triple:
                if not (0 <= h < self.halfedge_count):
                    raise ValidationError("vertex %d lists unknown half-edge %d"
                                          % (vi, h))
                if h in seen_v:
                    raise ValidationError("half-edge %d appears at vertices %d and %d"
                                          % (h, seen_v[h], vi))
                seen_v[h] = vi
        seen_e: dict = {}
        for ei, pair in enumerate(self.edges):
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ValidationError("edge %d must pair two distinct half-edges" % ei)
            for h in pair:
                if not (0 <= h < self.halfedge_count):
                    raise ValidationError("edge %d lists unknown half-edge %d" % (ei, h))
                if h in seen_e:
                    raise ValidationError("half-edge %d appears in edges %d and %d"
                                          % (h, seen_e[h], ei))
                seen_e[h] = ei
        for h in range(self.halfedge_count):
            if h not in seen_v:
                raise ValidationError("half-edge %d belongs to no vertex" % h)
            if h not in seen_e:
                raise ValidationError("half-edge %d belongs to no edge" % h)
        cover = [0] * len(self.vertices)
        for ei in self.matching:
            if not (0 <= ei < len(self.edges)):
                raise ValidationError("matching lists unknown edge %d" % ei)
            for h in self.edges[ei]:
                cover[seen_v[h]] += 1
        for vi, c in enumerate(cover):
            if c != 1:
                raise ValidationError("matching covers vertex %d %d times" % (vi, c))

    @cached_property
    def vertex_of(self) -> tuple:
        out = [-1] * self.halfedge_count
        for vi, triple in enumerate(self.vertices):
            for h in triple:
                out[h] = vi
        return tuple(out)

    @cached_property
    def is_matching_halfedge(self) -> tuple:
        out = [False] * self.halfedge_count
        for ei in self.matching:
            for h in self.edges[ei]:
                out[h] = True
        return tuple(out)

    @cached_property
    def legs(self) -> tuple:
        """Per matching position: ((u1, u2), (v1, v2)) in vertex-triple order."""
        out = []
        for ei in self.matching:
            ends = []
            for h in self.edges[ei]:
                triple = self.vertices[self.vertex_of[h]]
                ends.append(tuple(x for x in triple if x != h))
            out.append(tuple(ends))
        return tuple(out)

    @property
    def matching_size(self) -> int:
        return len(self.matching)

    def free_edges(self) -> list:
        """Non-matching edge indices, ascending."""
        taken = set(self.matching)
        return [i for i in range(len(self.edges)) if i not in taken]

    def to_json_obj(self) -> dict:
        return {"halfedges": self.halfedge_count,
                "vertices": [list(v) for v in self.vertices],
                "edges": [list(e) for e in self.edges],
                "matching": list(self.matching)}


def parse_matched_graph(text: str, name: str = "") -> MatchedCubicGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("matched graph is not valid JSON: %s" % exc)
    for key in ("halfedges", "vertices", "edges", "matching"):
        if key not in obj:
            raise ParseError("matched graph JSON is missing %r" % key)
    try:
        return MatchedCubicGraph(int(obj["halfedges"]), obj["vertices"],
                                 obj["edges"], obj["matching"], name)
    except (TypeError, ValueError) as exc:
        raise ParseError("malformed matched graph JSON: %s" % exc)


def cubic_from_multigraph(g: Multigraph, matching, name: str = "") -> MatchedCubicGraph:
    """Half-edge structure of a 3-regular multigraph.

    Edge i owns half-edges 2i (at its first endpoint) and 2i+1; vertex
    triples list half-edges in ascending edge order.
    """
    triples = [[] for _ in range(g.vertex_count)]
    edges = []
    for i, (a, b) in enumerate(g.edges):
        triples[a].append(2 * i)
        triples[b].append(2 * i + 1)
        edges.append((2 * i, 2 * i + 1))
    return MatchedCubicGraph(2 * g.edge_count, tuple(tuple(t) for t in triples),
                             tuple(edges), tuple(matching), name or g.name)


def matched_catalog(spec: str) -> MatchedCubicGraph:
    """Named matched cubic graphs: theta, k4, triangle-blowup, theta2."""
    if spec == "theta":
        return cubic_from_multigraph(
            Multigraph(2, ((0, 1), (0, 1), (0, 1))), (0,), "theta")
    if spec == "k4":
        g = Multigraph(4, ((0, 1), (2, 3), (0, 2), (0, 3), (1, 2), (1, 3)))
        return cubic_from_multigraph(g, (0, 1), "k4")
    if spec == "triangle-blowup":
        # Each triangle vertex becomes a doubled edge (a 2-cycle); the original
        # triangle edges survive as the matching.
        g = Multigraph(6, ((0, 2), (3, 4), (1, 5),
                           (0, 1), (0, 1), (2, 3), (2, 3), (4, 5), (4, 5)))
        return cubic_from_multigraph(g, (0, 1, 2), "triangle-blowup")
    if spec == "theta2":
        g = Multigraph(4, ((0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)))
        return cubic_from_multigraph(g, (0, 3), "theta2")
    raise ValueError("unknown matched catalog spec %r" % spec)


def swap_legs(g: MatchedCubicGraph, position: int, end: int) -> MatchedCubicGraph:
    """Exchange the two legs at one end of one matching edge."""
    if not (0 <= position < g.matching_size):
        raise ValueError("no matching position %d" % position)
    if end not in (0, 1):
        raise ValueError("end must be 0 or 1")
    anchor = g.edges[g.matching[position]][end]
    vi = g.vertex_of[anchor]
    triple = g.vertices[vi]
    others = [h for h in triple if h != anchor]
    swapped = tuple(h if h == anchor else (others[1] if h == others[0] else others[0])
                    for h in triple)
    vertices = list(g.vertices)
    vertices[vi] = swapped
    return MatchedCubicGraph(g.halfedge_count, tuple(vertices), g.edges,
                             g.matching, g.name)


# -- states -------------------------------------------------------------------

@dataclass(frozen=True)
class PenroseState:
    """One full resolution of the matching, traced out.

    loop_of / component_of map each half-edge to a loop / component id
    (-1 on matching half-edges, which are consumed by the resolution); ids
    are canonical by first half-edge occurrence.
    """
    resolutions: tuple
    loop_of: tuple
    component_of: tuple
    loop_count: int
    component_count: int

    @property
    def nodal_count(self) -> int:
        return sum(1 for r in self.resolutions if r >= NODE0)

    @property
    def node0_count(self) -> int:
        return sum(1 for r in self.resolutions if r == NODE0)

    @property
    def node1_count(self) -> int:
        return sum(1 for r in self.resolutions if r == NODE1)

    def component_representatives(self) -> list:
        reps = [-1] * self.component_count
        for h, c in enumerate(self.component_of):
            if c >= 0 and reps[c] < 0:
                reps[c] = h
        return reps


def _canonical_ids(g: MatchedCubicGraph, uf: UnionFind):
    ids: dict = {}
    out = []
    for h in range(g.halfedge_count):
        if g.is_matching_halfedge[h]:
            out.append(-1)
            continue
        root = uf.find(h)
        if root not in ids:
            ids[root] = len(ids)
        out.append(ids[root])
    return tuple(out), len(ids)


def trace_components(g: MatchedCubicGraph, resolutions) -> PenroseState:
    """Loops and components of one resolution vector."""
    resolutions = tuple(resolutions)
    if len(resolutions) != g.matching_size:
        raise ValueError("expected %d resolutions, got %d"
                         % (g.matching_size, len(resolutions)))
    loops = UnionFind(g.halfedge_count)
    for ei in g.free_edges():
        a, b = g.edges[ei]
        loops.union(a, b)
    for pos, r in enumerate(resolutions):
        (u1, u2), (v1, v2) = g.legs[pos]
        if r == PARALLEL:
            loops.union(u1, v1)
            loops.union(u2, v2)
        elif r in (CROSSED, NODE0, NODE1):
            loops.union(u1, v2)
            loops.union(u2, v1)
        else:
            raise ValueError("unknown resolution %r at position %d" % (r, pos))
    comps = UnionFind(g.halfedge_count)
    comps.parent = list(loops.parent)
    comps.rank = list(loops.rank)
    for pos, r in enumerate(resolutions):
        if r >= NODE0:
            (u1, u2), _ = g.legs[pos]
            comps.union(u1, u2)
    loop_of, loop_count = _canonical_ids(g, loops)
    component_of, component_count = _canonical_ids(g, comps)
    return PenroseState(resolutions, loop_of, component_of,
                        loop_count, component_count)


def _check_matching_cap(g: MatchedCubicGraph):
    if g.matching_size > MAX_MATCHING:
        raise CapacityError("matching has %d edges, cap is %d"
                            % (g.matching_size, MAX_MATCHING))


def _all_states(g: MatchedCubicGraph) -> dict:
    _check_matching_cap(g)
    return {res: trace_components(g, res)
            for res in product(range(4), repeat=g.matching_size)}


# -- polynomials ----------------------------------------------------------------

def penrose_polynomial(g: MatchedCubicGraph) -> MultiPoly:
    """sum_S (-1)^{n(S)} 2^{n(S)} lambda^{c(S)} over unlabeled resolutions."""
    _check_matching_cap(g)
    terms: dict = {}
    for res in product((PARALLEL, CROSSED, NODE0), repeat=g.matching_size):
        st = trace_components(g, res)
        n = st.nodal_count
        key = (st.component_count,)
        terms[key] = terms.get(key, 0) + (-2) ** n
    return MultiPoly(("lambda",), terms)


def penrose_dichromatic_polynomial(g: MatchedCubicGraph) -> MultiPoly:
    """Two-variable refinement: nodal sites weighted v (NODE0) or w (NODE1).

    Equals sum_S (-1)^{n(S)} v^{n0(S)} w^{n1(S)} lambda^{c(S)} over labeled
    states; setting v = w = 1 recovers penrose_polynomial.
    """
    _check_matching_cap(g)
    vw = power_table(-(MultiPoly.var("v") + MultiPoly.var("w")), g.matching_size)
    lam = power_table(MultiPoly.var("lambda"),
                      2 + 2 * len(g.edges))
    total = MultiPoly.const(0)
    for res in product((PARALLEL, CROSSED, NODE0), repeat=g.matching_size):
        st = trace_components(g, res)
        total = total + vw[st.nodal_count] * lam[st.component_count]
    return total


def coloring_count_oracle(g: MatchedCubicGraph, colors: int,
                          budget: int = 10 ** 8) -> int:
    """Count colorings of the non-matching edges that are proper at every
    matching edge: the two leg colors differ at each end and the ends carry
    the same color pair."""
    free = g.free_edges()
    total = colors ** len(free)
    if total > budget:
        raise BudgetError("%d^%d edge colorings exceed budget %d"
                          % (colors, len(free), budget))
    edge_of = {}
    for ei in free:
        for h in g.edges[ei]:
            edge_of[h] = ei
    slot = {ei: i for i, ei in enumerate(free)}
    count = 0
    for assign in product(range(colors), repeat=len(free)):
        ok = True
        for (u1, u2), (v1, v2) in g.legs:
            a = assign[slot[edge_of[u1]]]
            b = assign[slot[edge_of[u2]]]
            c = assign[slot[edge_of[v1]]]
            d = assign[slot[edge_of[v2]]]
            if a == b or c == d or {a, b} != {c, d}:
                ok = False
                break
        if ok:
            count += 1
    return count


# -- complexes ------------------------------------------------------------------

def _site_sign(resolutions, position) -> int:
    before = sum(1 for r in resolutions[:position] if r < NODE0)
    return -1 if before & 1 else 1


def build_penrose_complex(g: MatchedCubicGraph) -> GradedComplex:
    """Enhanced states (components labeled unit/x) graded by j = #x.

    Degree is the nodal count; the differential resolves one PARALLEL site to
    NODE0 or one CROSSED site to NODE1, so each labeled source has one target
    per non-nodal site.
    """
    states = _all_states(g)
    builder = ComplexBuilder(grading_arity=1)
    for res in sorted(states):
        st = states[res]
        for labels in product((UNIT, X), repeat=st.component_count):
            builder.add_generator((res, labels), st.nodal_count, (sum(labels),))
    for res in sorted(states):
        st = states[res]
        reps = st.component_representatives()
        label_choices = list(product((UNIT, X), repeat=st.component_count))
        for pos, r in enumerate(res):
            if r >= NODE0:
                continue
            dst_res = res[:pos] + (NODE0 if r == PARALLEL else NODE1,) + res[pos + 1:]
            dst = states[dst_res]
            sign = _site_sign(res, pos)
            for labels in label_choices:
                moved = transfer_component_labels(reps, dst.component_of,
                                                  labels, _merge_x_labels)
                if moved is None:
                    continue
                builder.add_entry((res, labels), (dst_res, tuple(moved)), sign)
    return builder.build()


def build_penrose_dichromatic_complex(g: MatchedCubicGraph) -> GradedComplex:
    """Triple-graded refinement: NODE0 sites labeled unit/y, NODE1 unit/z.

    Grading is (i, j, k) = (#x components, #y sites, #z sites); the
    differential's fresh nodal site is always unit-labeled.
    """
    states = _all_states(g)
    builder = ComplexBuilder(grading_arity=3)

    def site_slots(res):
        n0 = [pos for pos, r in enumerate(res) if r == NODE0]
        n1 = [pos for pos, r in enumerate(res) if r == NODE1]
        return n0, n1

    for res in sorted(states):
        st = states[res]
        n0, n1 = site_slots(res)
        for ylab in product((0, 1), repeat=len(n0)):
            for zlab in product((0, 1), repeat=len(n1)):
                for labels in product((UNIT, X), repeat=st.component_count):
                    builder.add_generator(
                        (res, labels, ylab, zlab), st.nodal_count,
                        (sum(labels), sum(ylab), sum(zlab)))
    for res in sorted(states):
        st = states[res]
        reps = st.component_representatives()
        n0, n1 = site_slots(res)
        label_choices = list(product((UNIT, X), repeat=st.component_count))
        y_choices = list(product((0, 1), repeat=len(n0)))
        z_choices = list(product((0, 1), repeat=len(n1)))
        for pos, r in enumerate(res):
            if r >= NODE0:
                continue
            dst_res = res[:pos] + (NODE0 if r == PARALLEL else NODE1,) + res[pos + 1:]
            dst = states[dst_res]
            sign = _site_sign(res, pos)
            if r == PARALLEL:
                yslot = sum(1 for q in n0 if q < pos)
                zslot = None
            else:
                zslot = sum(1 for q in n1 if q < pos)
                yslot = None
            for ylab in y_choices:
                new_y = (ylab if yslot is None
                         else ylab[:yslot] + (0,) + ylab[yslot:])
                for zlab in z_choices:
                    new_z = (zlab if zslot is None
                             else zlab[:zslot] + (0,) + zlab[zslot:])
                    for labels in label_choices:
                        moved = transfer_component_labels(
                            reps, dst.component_of, labels, _merge_x_labels)
                        if moved is None:
                            continue
                        builder.add_entry(
                            (res, labels, ylab, zlab),
                            (dst_res, tuple(moved), new_y, new_z), sign)
    return builder.build()


# -- reports ---------------------------------------------------------------------

def penrose_homology_report(g: MatchedCubicGraph, jobs: int = 1):
    """(HomologySummary, graded Euler polynomial in q); asserts the graded
    Euler characteristic equals the polynomial at lambda = 1 + q."""
    summary = homology(build_penrose_complex(g), jobs=jobs)
    graded = summary.euler_polynomial(("q",))
    expected = penrose_polynomial(g).substitute("lambda", MultiPoly.var("q") + 1)
    if graded != expected:
        raise TheoryViolationError("graded euler %s != polynomial at 1+q, %s"
                                   % (graded, expected))
    return summary, graded


def penrose_dichromatic_report(g: MatchedCubicGraph, jobs: int = 1):
    """(HomologySummary, Euler polynomial in (q, p, r)); asserts it matches
    the two-variable state sum at lambda=1+q, v=1+p, w=1+r."""
    summary = homology(build_penrose_dichromatic_complex(g), jobs=jobs)
    graded = summary.euler_polynomial(("q", "p", "r"))
    expected = penrose_dichromatic_polynomial(g)
    expected = expected.substitute("lambda", MultiPoly.var("q") + 1)
    expected = expected.substitute("v", MultiPoly.var("p") + 1)
    expected = expected.substitute("w", MultiPoly.var("r") + 1)
    if graded != expected:
        raise TheoryViolationError("triple-graded euler %s != state sum %s"
                                   % (graded, expected))
    return summary, graded
