"""Dichromatic polynomial, its signed two-variable form, the doubly graded
chain complex refining it, and impropriety counts.

Conventions, fixed once here:

  * plain form      Z(v, lambda) = sum_S v^{e(S)} lambda^{c(S)}
  * signed form     Z(q, p)      = sum_S (-1)^{e(S)} (1+p)^{e(S)} (1+q)^{c(S)}

so the two are related by v = -(1+p), lambda = 1+q.  The complex labels each
state's components with unit/x and each of its edges with unit/y; gradings
are (i, j) = (#y edges, #x components), degree is e(S), and the differential
adds one unit-labeled edge.  The signed form equals
sum_{i,j} p^i q^j euler(i, j).

An impropriety level i counts colorings with exactly i monochromatic edges
(loops are always monochromatic).  Substituting v = alpha - 1 into the plain
form expands Z as sum_i alpha^i C^i(lambda); level polynomials also fall out
of homology as C^i(lambda) = (-1)^i sum_j (lambda-1)^j euler(i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .complexes import ComplexBuilder, GradedComplex, HomologySummary, homology
from .errors import BudgetError, TheoryViolationError
from .graphs import Multigraph, enumerate_states, transfer_component_labels
from .poly import MultiPoly, power_table
from .chromatic import UNIT, X, _merge_x_labels, chromatic_poly_dc


def dichromatic_poly(g: Multigraph) -> MultiPoly:
    """Plain two-variable form, exact in (lambda, v)."""
    terms: dict = {}
    for st in enumerate_states(g):
        key = (st.component_count, st.edge_count)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(("lambda", "v"), terms)


def signed_dichromatic(g: Multigraph) -> MultiPoly:
    """Signed form in (q, p); equals the plain form at v=-(1+p), lambda=1+q."""
    counts: dict = {}
    for st in enumerate_states(g):
        key = (st.edge_count, st.component_count)
        counts[key] = counts.get(key, 0) + 1
    top_e = max((k[0] for k in counts), default=0)
    top_c = max((k[1] for k in counts), default=0)
    p_pow = power_table(MultiPoly.var("p") + 1, top_e)
    q_pow = power_table(MultiPoly.var("q") + 1, top_c)
    total = MultiPoly.const(0)
    for (e, c), n in sorted(counts.items()):
        total = total + (-1) ** e * n * p_pow[e] * q_pow[c]
    return total


def build_dichromatic_complex(g: Multigraph) -> GradedComplex:
    """Refined enhanced-state complex graded by (i, j).

    Each generator is (edge bit set, per-edge labels unit/y, per-component
    labels unit/x).  Edge labels are listed for present edges in edge-index
    order; a freshly added edge is always unit, so (i, j) is preserved.
    """
    states = list(enumerate_states(g))
    builder = ComplexBuilder(grading_arity=2)
    for st in states:
        comp_choices = list(product((UNIT, X), repeat=st.component_count))
        for edge_labels in product((0, 1), repeat=st.edge_count):
            i = sum(edge_labels)
            for labels in comp_choices:
                builder.add_generator((st.edge_set, edge_labels, labels),
                                      st.edge_count, (i, sum(labels)))
    for st in states:
        reps = st.component_representatives()
        comp_choices = list(product((UNIT, X), repeat=st.component_count))
        edge_choices = list(product((0, 1), repeat=st.edge_count))
        for e in range(g.edge_count):
            if st.edge_set >> e & 1:
                continue
            below = st.edge_set & ((1 << e) - 1)
            sign = -1 if below.bit_count() & 1 else 1
            slot = below.bit_count()  # position of e among the new edge set
            dst = states[st.edge_set | (1 << e)]
            for edge_labels in edge_choices:
                new_edge_labels = edge_labels[:slot] + (0,) + edge_labels[slot:]
                for labels in comp_choices:
                    moved = transfer_component_labels(
                        reps, dst.component_partition, labels, _merge_x_labels)
                    if moved is None:
                        continue
                    builder.add_entry(
                        (st.edge_set, edge_labels, labels),
                        (dst.edge_set, new_edge_labels, tuple(moved)), sign)
    return builder.build()


def dichromatic_homology_report(g: Multigraph, jobs: int = 1):
    """Homology summary plus the check that its (p, q) Euler polynomial
    reproduces the signed dichromatic form."""
    summary = homology(build_dichromatic_complex(g), jobs=jobs)
    graded = summary.euler_polynomial(("p", "q"))
    expected = signed_dichromatic(g)
    if graded != expected:
        raise TheoryViolationError("graded euler %s != signed dichromatic %s"
                                   % (graded, expected))
    return summary, graded


# -- impropriety -------------------------------------------------------------

@dataclass(frozen=True)
class ImproprietySpectrum:
    """Counts (at a fixed number of colors) or polynomials, per level.

    levels[i] corresponds to colorings with exactly i monochromatic edges;
    the tuple is dense from level 0 to e(G).
    """
    levels: tuple
    colors: int = None

    def __len__(self):
        return len(self.levels)

    def level(self, i: int):
        return self.levels[i]


def impropriety_counts_oracle(g: Multigraph, colors: int,
                              budget: int = 10 ** 8) -> ImproprietySpectrum:
    """Histogram of colorings by monochromatic-edge count, by enumeration."""
    total = colors ** g.vertex_count
    if total > budget:
        raise BudgetError("%d^%d assignments exceed budget %d"
                          % (colors, g.vertex_count, budget))
    hist = [0] * (g.edge_count + 1)
    for assign in product(range(colors), repeat=g.vertex_count):
        bad = sum(1 for a, b in g.edges if assign[a] == assign[b])
        hist[bad] += 1
    return ImproprietySpectrum(tuple(hist), colors)


def impropriety_polys_from_dichromatic(g: Multigraph) -> ImproprietySpectrum:
    """Level polynomials C^i(lambda) from Z(v, lambda) at v = alpha - 1."""
    z = dichromatic_poly(g)
    alpha = z.substitute("v", MultiPoly.var("alpha") - 1)
    groups = alpha.coefficients_in("alpha")
    zero = MultiPoly(("lambda",), {})
    levels = tuple(groups.get(i, zero) for i in range(g.edge_count + 1))
    return ImproprietySpectrum(levels)


def impropriety_from_homology(g: Multigraph, level: int,
                              summary: HomologySummary = None) -> MultiPoly:
    """C^level(lambda) = (-1)^level sum_j (lambda-1)^j euler(level, j).

    Cross-checked against the alpha-expansion; a mismatch would mean the
    doubly graded theorem failed, so it raises rather than returning.
    """
    if summary is None:
        summary = homology(build_dichromatic_complex(g))
    top_j = max((grading[1] for grading in summary.euler), default=0)
    lam_minus_1 = power_table(MultiPoly.var("lambda") - 1, top_j)
    total = MultiPoly.const(0)
    for grading, euler in sorted(summary.euler.items()):
        if grading[0] != level or not euler:
            continue
        total = total + euler * lam_minus_1[grading[1]]
    total = (-1) ** level * total
    expected = impropriety_polys_from_dichromatic(g).level(level)
    if total != expected:
        raise TheoryViolationError(
            "homological impropriety level %d gave %s, alpha-expansion gives %s"
            % (level, total, expected))
    return total
