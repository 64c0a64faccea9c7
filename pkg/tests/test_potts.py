import math
from itertools import product

import pytest

from gpc.complexes import homology
from gpc.dichromatic import build_dichromatic_complex
from gpc.errors import BudgetError
from gpc.graphs import catalog, catalog_specs
from gpc.poly import MultiPoly
from gpc.potts import (PottsParams, energy_histogram, partition_poly_brute,
                       partition_poly_dichromatic, partition_poly_homology,
                       potts_brute, potts_probability, potts_via_dichromatic,
                       potts_via_homology)

X = MultiPoly.var("x")


def test_params():
    p = PottsParams(3, 2.0)
    assert p.x == pytest.approx(math.exp(-2.0))
    assert PottsParams(2, 0.0).x == 1.0
    with pytest.raises(ValueError):
        PottsParams(0, 1.0)
    with pytest.raises(ValueError):
        PottsParams(2, -0.5)


def test_partition_polynomials_frozen():
    assert partition_poly_brute(catalog("path:1"), 2) == 2 * X + 2
    assert partition_poly_brute(catalog("complete:3"), 2) == 2 * X ** 3 + 6 * X
    assert partition_poly_brute(catalog("loop"), 3) == 3 * X
    assert partition_poly_brute(catalog("path:1"), 1) == X
    assert partition_poly_brute(catalog("path:0"), 4) == MultiPoly.const(4)


def test_three_routes_same_polynomial():
    for spec in catalog_specs():
        g = catalog(spec)
        summary = homology(build_dichromatic_complex(g))
        for n in (1, 2, 3, 4):
            brute = partition_poly_brute(g, n)
            assert brute == partition_poly_dichromatic(g, n), (spec, n)
            assert brute == partition_poly_homology(g, n, summary), (spec, n)


def test_three_routes_agree_numerically():
    for spec in ("path:2", "cycle:3", "complete:4", "theta", "loop"):
        g = catalog(spec)
        summary = homology(build_dichromatic_complex(g))
        for n in (2, 3, 4):
            for beta in (0.1, 1.0, 10.0):
                params = PottsParams(n, beta)
                zb = potts_brute(g, params)
                zd = potts_via_dichromatic(g, params)
                zh = potts_via_homology(g, params, summary)
                scale = max(abs(zb), 1e-300)
                assert abs(zb - zd) / scale <= 1e-9, (spec, n, beta)
                assert abs(zb - zh) / scale <= 1e-9, (spec, n, beta)


def test_zero_temperature_counts_proper_colorings():
    from gpc.chromatic import brute_force_proper_colorings
    for spec in catalog_specs():
        g = catalog(spec)
        for n in (1, 2, 3, 4):
            poly = partition_poly_dichromatic(g, n)
            assert poly.evaluate({"x": 0}) == \
                brute_force_proper_colorings(g, n), (spec, n)


def test_infinite_temperature_counts_everything():
    # beta = 0 means x = 1: every assignment has weight 1
    for spec in ("path:2", "cycle:3", "theta", "loop"):
        g = catalog(spec)
        for n in (2, 3):
            poly = partition_poly_dichromatic(g, n)
            assert poly.evaluate({"x": 1}) == n ** g.vertex_count, (spec, n)


def test_energy_histogram_frozen():
    assert energy_histogram(catalog("complete:3"), 2) == {1: 6, 3: 2}
    assert energy_histogram(catalog("path:1"), 2) == {0: 2, 1: 2}
    assert energy_histogram(catalog("loop"), 2) == {1: 2}


def test_probabilities():
    g = catalog("complete:3")
    params = PottsParams(2, 1.0)
    x = params.x
    z = 2 * x ** 3 + 6 * x
    assert potts_probability(g, params, (0, 0, 0)) == pytest.approx(x ** 3 / z)
    assert potts_probability(g, params, (0, 0, 1)) == pytest.approx(x / z)
    total = sum(potts_probability(g, params, a)
                for a in product(range(2), repeat=3))
    assert abs(total - 1.0) <= 1e-12
    with pytest.raises(ValueError):
        potts_probability(g, params, (0, 0))  # wrong length
    with pytest.raises(ValueError):
        potts_probability(g, params, (0, 0, 5))  # spin out of range


def test_brute_budget():
    with pytest.raises(BudgetError):
        potts_brute(catalog("path:3"), PottsParams(4, 1.0), budget=10)
