from itertools import product
from math import comb

import pytest

from gpc.complexes import homology
from gpc.dichromatic import (ImproprietySpectrum, build_dichromatic_complex,
                             dichromatic_homology_report, dichromatic_poly,
                             impropriety_counts_oracle,
                             impropriety_from_homology,
                             impropriety_polys_from_dichromatic,
                             signed_dichromatic)
from gpc.errors import BudgetError
from gpc.graphs import catalog, catalog_specs, reduce
from gpc.poly import MultiPoly

LAM = MultiPoly.var("lambda")
V = MultiPoly.var("v")
P = MultiPoly.var("p")
Q = MultiPoly.var("q")


def test_plain_form_frozen():
    assert dichromatic_poly(catalog("path:1")) == LAM ** 2 + V * LAM
    assert dichromatic_poly(catalog("complete:3")) == \
        LAM ** 3 + 3 * V * LAM ** 2 + 3 * V ** 2 * LAM + V ** 3 * LAM
    assert dichromatic_poly(catalog("theta")) == \
        LAM ** 2 + 3 * V * LAM + 3 * V ** 2 * LAM + V ** 3 * LAM
    assert dichromatic_poly(catalog("loop")) == LAM + V * LAM
    assert dichromatic_poly(catalog("path:0")) == LAM


def test_signed_form_frozen():
    assert signed_dichromatic(catalog("path:1")).canonical_text() == \
        "q^2 - q*p + q - p"
    assert signed_dichromatic(catalog("path:1")) == Q ** 2 + Q - P - P * Q


def test_signed_is_plain_substituted():
    for spec in catalog_specs():
        g = catalog(spec)
        sub = dichromatic_poly(g).substitute("v", -(P + 1)).substitute(
            "lambda", Q + 1)
        assert signed_dichromatic(g) == sub, spec


def test_deletion_contraction_recursion():
    # Z(G) = Z(G - e) + v Z(G / e), loops included
    for spec in ("path:3", "cycle:4", "complete:4", "theta", "loop", "cycle:2"):
        g = catalog(spec)
        rhs = dichromatic_poly(reduce(g, 0, "delete")) \
            + V * dichromatic_poly(reduce(g, 0, "contract"))
        assert dichromatic_poly(g) == rhs, spec


def test_signed_specializes_to_chromatic():
    from gpc.chromatic import chromatic_poly_dc
    for spec in catalog_specs():
        g = catalog(spec)
        chrom = chromatic_poly_dc(g).substitute("lambda", Q + 1)
        assert signed_dichromatic(g).substitute("p", 0) == chrom, spec


def test_complex_dimensions_single_edge():
    cx = build_dichromatic_complex(catalog("path:1"))
    dims = {(k, g): cx.dim(k, g)
            for g in cx.gradings() for k in (0, 1) if cx.dim(k, g)}
    assert dims == {
        (0, (0, 0)): 1, (0, (0, 1)): 2, (0, (0, 2)): 1,
        (1, (0, 0)): 1, (1, (0, 1)): 1,
        (1, (1, 0)): 1, (1, (1, 1)): 1,
    }


def test_single_edge_homology_frozen():
    summary, graded = dichromatic_homology_report(catalog("path:1"))
    assert summary.nonzero() == {
        (0, (0, 1)): (1, ()),
        (0, (0, 2)): (1, ()),
        (1, (1, 0)): (1, ()),
        (1, (1, 1)): (1, ()),
    }
    assert summary.euler_of((0, 1)) == 1
    assert summary.euler_of((0, 2)) == 1
    assert summary.euler_of((1, 0)) == -1
    assert summary.euler_of((1, 1)) == -1
    assert summary.euler_of((0, 0)) == 0
    assert graded == Q ** 2 + Q - P - P * Q


def test_graded_euler_identity_catalogwide():
    for spec in catalog_specs():
        g = catalog(spec)
        summary, graded = dichromatic_homology_report(g)
        assert graded == signed_dichromatic(g), spec


# -- impropriety ----------------------------------------------------------------

def test_impropriety_oracle_frozen():
    assert impropriety_counts_oracle(catalog("path:2"), 2).levels == (2, 4, 2)
    assert impropriety_counts_oracle(catalog("complete:3"), 3).levels == \
        (6, 18, 0, 3)
    assert impropriety_counts_oracle(catalog("loop"), 3).levels == (0, 3)
    with pytest.raises(BudgetError):
        impropriety_counts_oracle(catalog("path:4"), 5, budget=100)


def test_alpha_expansion_matches_oracle():
    for spec in ("path:2", "cycle:3", "cycle:4", "theta", "loop", "complete:4"):
        g = catalog(spec)
        spectrum = impropriety_polys_from_dichromatic(g)
        assert len(spectrum) == g.edge_count + 1
        for n in (2, 3, 4):
            oracle = impropriety_counts_oracle(g, n)
            got = tuple(p.evaluate({"lambda": n}) for p in spectrum.levels)
            assert got == oracle.levels, (spec, n)


def test_level_zero_is_chromatic():
    from gpc.chromatic import chromatic_poly_dc
    for spec in ("path:3", "cycle:4", "theta"):
        g = catalog(spec)
        assert impropriety_polys_from_dichromatic(g).level(0) == \
            chromatic_poly_dc(g), spec


def test_path_closed_form():
    # k-edge path: level l counts are binom(k, l) (lambda-1)^{k-l} lambda
    for k in range(1, 5):
        g = catalog("path:%d" % k)
        spectrum = impropriety_polys_from_dichromatic(g)
        for l in range(k + 1):
            expected = comb(k, l) * (LAM - 1) ** (k - l) * LAM
            assert spectrum.level(l) == expected, (k, l)


def test_product_form_matches_alpha_expansion():
    # sum over assignments of alpha^(number of monochromatic edges), taken
    # as an exact polynomial in alpha, equals the alpha-grouped expansion
    alpha = MultiPoly.var("alpha")
    for spec in ("path:2", "cycle:3", "theta"):
        g = catalog(spec)
        for n in (2, 3):
            direct = MultiPoly.const(0)
            for assign in product(range(n), repeat=g.vertex_count):
                bad = sum(1 for a, b in g.edges if assign[a] == assign[b])
                direct = direct + alpha ** bad
            spectrum = impropriety_polys_from_dichromatic(g)
            grouped = sum((spectrum.level(i).evaluate({"lambda": n}) * alpha ** i
                           for i in range(len(spectrum))), MultiPoly.const(0))
            assert direct == grouped, (spec, n)


def test_homological_formula_matches_expansion():
    for spec in ("path:2", "cycle:3", "theta", "loop"):
        g = catalog(spec)
        summary = homology(build_dichromatic_complex(g))
        spectrum = impropriety_polys_from_dichromatic(g)
        for level in range(g.edge_count + 1):
            assert impropriety_from_homology(g, level, summary) == \
                spectrum.level(level), (spec, level)


def test_spectrum_container():
    s = ImproprietySpectrum((1, 2, 3), colors=2)
    assert len(s) == 3
    assert s.level(1) == 2
    assert s.colors == 2
