"""Potts partition functions through three routes that must agree.

With n spin values and x = exp(-beta), the partition function is
Z = sum over assignments of x^{E(sigma)}, E(sigma) counting monochromatic
edges.  Every route here first builds the exact integer polynomial in x and
evaluates it as a float once at the end:

  * brute        direct enumeration of assignments
  * dichromatic  Z(v, lambda) at v = x - 1, lambda = n
  * homology     sum_{i,j} (-1)^i x^i (n-1)^j euler(i, j) from the doubly
                 graded complex

Energy histograms coincide with impropriety counts by definition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import HomologySummary, homology
from .dichromatic import (build_dichromatic_complex, dichromatic_poly,
                          impropriety_counts_oracle)
from .graphs import Multigraph
from .poly import MultiPoly


@dataclass(frozen=True)
class PottsParams:
    spins: int
    beta: float

    def __post_init__(self):
        if self.spins < 1:
            raise ValueError("spins must be at least 1")
        if not (self.beta >= 0):
            raise ValueError("beta must be nonnegative")

    @property
    def x(self) -> float:
        return math.exp(-self.beta)


def energy_histogram(g: Multigraph, spins: int, budget: int = 10 ** 8) -> dict:
    """Map energy -> number of assignments; energies with zero count omitted."""
    spectrum = impropriety_counts_oracle(g, spins, budget=budget)
    return {i: count for i, count in enumerate(spectrum.levels) if count}


def partition_poly_brute(g: Multigraph, spins: int,
                         budget: int = 10 ** 8) -> MultiPoly:
    hist = energy_histogram(g, spins, budget=budget)
    return MultiPoly(("x",), {(i,): count for i, count in hist.items()})


def partition_poly_dichromatic(g: Multigraph, spins: int) -> MultiPoly:
    z = dichromatic_poly(g)
    z = z.substitute("lambda", spins)
    return z.substitute("v", MultiPoly.var("x") - 1)


def partition_poly_homology(g: Multigraph, spins: int,
                            summary: HomologySummary = None) -> MultiPoly:
    if summary is None:
        summary = homology(build_dichromatic_complex(g))
    terms: dict = {}
    for (i, j), euler in summary.euler.items():
        coeff = (-1) ** i * (spins - 1) ** j * euler
        if coeff:
            terms[(i,)] = terms.get((i,), 0) + coeff
    return MultiPoly(("x",), terms)


def _evaluate(poly: MultiPoly, params: PottsParams) -> float:
    return float(poly.evaluate({"x": params.x}))


def potts_brute(g: Multigraph, params: PottsParams, budget: int = 10 ** 8) -> float:
    return _evaluate(partition_poly_brute(g, params.spins, budget=budget), params)


def potts_via_dichromatic(g: Multigraph, params: PottsParams) -> float:
    return _evaluate(partition_poly_dichromatic(g, params.spins), params)


def potts_via_homology(g: Multigraph, params: PottsParams,
                       summary: HomologySummary = None) -> float:
    return _evaluate(partition_poly_homology(g, params.spins, summary), params)


def potts_probability(g: Multigraph, params: PottsParams, assignment) -> float:
    """Boltzmann probability of one spin assignment."""
    assignment = tuple(assignment)
    if len(assignment) != g.vertex_count:
        raise ValueError("assignment has %d spins, graph has %d vertices"
                         % (len(assignment), g.vertex_count))
    if any(not (0 <= s < params.spins) for s in assignment):
        raise ValueError("spin value out of range 0..%d" % (params.spins - 1))
    energy = sum(1 for a, b in g.edges if assignment[a] == assignment[b])
    z = potts_brute(g, params)
    return params.x ** energy / z
