import json

import pytest

import gpc.penrose as pen
from gpc.errors import BudgetError, CapacityError, ParseError, ValidationError
from gpc.graphs import Multigraph
from gpc.penrose import (CROSSED, NODE0, NODE1, PARALLEL, MatchedCubicGraph,
                         build_penrose_complex, coloring_count_oracle,
                         cubic_from_multigraph, matched_catalog,
                         parse_matched_graph, penrose_dichromatic_polynomial,
                         penrose_dichromatic_report, penrose_homology_report,
                         penrose_polynomial, swap_legs, trace_components)
from gpc.poly import MultiPoly

LAM = MultiPoly.var("lambda")
V, W = MultiPoly.var("v"), MultiPoly.var("w")
Q, P, R = MultiPoly.var("q"), MultiPoly.var("p"), MultiPoly.var("r")


def test_theta_structure():
    g = matched_catalog("theta")
    assert g.halfedge_count == 6
    assert g.vertices == ((0, 2, 4), (1, 3, 5))
    assert g.matching == (0,)
    assert g.free_edges() == [1, 2]
    assert g.legs == (((2, 4), (3, 5)),)


def test_validation_messages():
    with pytest.raises(ValidationError, match="vertex 0 has 2"):
        MatchedCubicGraph(2, ((0, 1),), ((0, 1),), ())
    with pytest.raises(ValidationError, match="appears at vertices"):
        MatchedCubicGraph(6, ((0, 1, 2), (0, 3, 4)),
                          ((0, 1), (2, 3), (4, 5)), (0,))
    with pytest.raises(ValidationError, match="belongs to no vertex"):
        MatchedCubicGraph(7, ((0, 1, 2), (3, 4, 5)),
                          ((0, 1), (2, 3), (4, 5)), (0,))
    with pytest.raises(ValidationError, match="pair two distinct"):
        MatchedCubicGraph(6, ((0, 1, 2), (3, 4, 5)),
                          ((0, 0), (1, 2), (3, 4)), (0,))
    # theta with no matching: both vertices covered zero times
    with pytest.raises(ValidationError, match="covers vertex 0 0 times"):
        MatchedCubicGraph(6, ((0, 2, 4), (1, 3, 5)),
                          ((0, 1), (2, 3), (4, 5)), ())
    with pytest.raises(ValidationError, match="unknown edge"):
        MatchedCubicGraph(6, ((0, 2, 4), (1, 3, 5)),
                          ((0, 1), (2, 3), (4, 5)), (7,))


def test_parse_matched_graph():
    g = matched_catalog("theta")
    text = json.dumps(g.to_json_obj())
    h = parse_matched_graph(text)
    assert h.vertices == g.vertices and h.matching == g.matching
    with pytest.raises(ParseError, match="not valid JSON"):
        parse_matched_graph("{")
    with pytest.raises(ParseError, match="missing 'matching'"):
        parse_matched_graph(json.dumps({"halfedges": 0, "vertices": [],
                                        "edges": []}))


def test_cubic_from_multigraph_requires_cubic():
    with pytest.raises(ValidationError):
        cubic_from_multigraph(Multigraph(2, ((0, 1),)), (0,))


def test_trace_components_theta():
    g = matched_catalog("theta")
    st = trace_components(g, (PARALLEL,))
    assert (st.component_count, st.nodal_count) == (2, 0)
    assert st.loop_count == 2
    st = trace_components(g, (CROSSED,))
    assert (st.component_count, st.nodal_count) == (1, 0)
    st = trace_components(g, (NODE0,))
    assert (st.component_count, st.nodal_count, st.node0_count) == (1, 1, 1)
    st = trace_components(g, (NODE1,))
    assert (st.component_count, st.node1_count) == (1, 1)
    # matching half-edges carry no component id
    assert st.component_of[0] == -1 and st.component_of[1] == -1
    with pytest.raises(ValueError, match="expected 1 resolutions"):
        trace_components(g, (PARALLEL, PARALLEL))
    with pytest.raises(ValueError, match="unknown resolution"):
        trace_components(g, (9,))


def test_nodal_sites_fuse_loops():
    # at a nodal site two distinct strands become one component yet stay
    # two separate loops
    g = matched_catalog("k4")
    st = trace_components(g, (CROSSED, NODE0))
    assert st.loop_count == 2
    assert st.component_count == 1
    # disjoint pieces stay disjoint: theta2 splits as two thetas
    st = trace_components(matched_catalog("theta2"), (NODE0, PARALLEL))
    assert st.loop_count == 3
    assert st.component_count == 3


def test_polynomials_frozen():
    assert penrose_polynomial(matched_catalog("theta")) == LAM ** 2 - LAM
    assert penrose_polynomial(matched_catalog("k4")) == LAM ** 2 - LAM
    assert penrose_polynomial(matched_catalog("triangle-blowup")) == \
        4 * LAM ** 2 - 4 * LAM
    assert penrose_polynomial(matched_catalog("theta2")) == (LAM ** 2 - LAM) ** 2


def test_polynomial_counts_colorings():
    for spec in ("theta", "k4", "triangle-blowup", "theta2"):
        g = matched_catalog(spec)
        poly = penrose_polynomial(g)
        for n in (2, 3, 4):
            assert poly.evaluate({"lambda": n}) == \
                coloring_count_oracle(g, n), (spec, n)


def test_oracle_frozen_counts():
    tb = matched_catalog("triangle-blowup")
    assert [coloring_count_oracle(tb, n) for n in (2, 3, 4)] == [8, 24, 48]
    with pytest.raises(BudgetError):
        coloring_count_oracle(tb, 10, budget=100)


def test_dichromatic_polynomial_frozen():
    g = matched_catalog("theta")
    pd = penrose_dichromatic_polynomial(g)
    assert pd == LAM ** 2 + LAM - V * LAM - W * LAM
    # v = w = 1 recovers the single-variable polynomial
    assert pd.substitute("v", 1).substitute("w", 1) == LAM ** 2 - LAM


def test_homology_frozen():
    summary, graded = penrose_homology_report(matched_catalog("theta"))
    assert summary.nonzero() == {(0, (1,)): (1, ()), (0, (2,)): (1, ())}
    assert graded == Q ** 2 + Q
    summary, graded = penrose_homology_report(matched_catalog("k4"))
    assert summary.nonzero() == {(0, (1,)): (1, ()), (0, (2,)): (1, ())}
    assert graded == Q ** 2 + Q


def test_triple_graded_frozen():
    summary, graded = penrose_dichromatic_report(matched_catalog("theta"))
    assert graded == (Q + 1) * (Q - P - R)
    assert summary.nonzero() == {
        (0, (1, 0, 0)): (1, ()), (0, (2, 0, 0)): (1, ()),
        (1, (0, 0, 1)): (1, ()), (1, (0, 1, 0)): (1, ()),
        (1, (1, 0, 1)): (1, ()), (1, (1, 1, 0)): (1, ()),
    }


def test_graded_euler_identity():
    for spec in ("theta", "k4", "theta2"):
        g = matched_catalog(spec)
        _, graded = penrose_homology_report(g)
        assert graded == penrose_polynomial(g).substitute("lambda", Q + 1), spec


def test_swap_legs():
    g = matched_catalog("k4")
    with pytest.raises(ValueError):
        swap_legs(g, 5, 0)
    with pytest.raises(ValueError):
        swap_legs(g, 0, 2)
    swapped = swap_legs(g, 0, 1)
    assert swapped.vertices != g.vertices
    assert swap_legs(swapped, 0, 1).vertices == g.vertices  # involution
    # every reported quantity is leg-order independent
    assert penrose_polynomial(swapped) == penrose_polynomial(g)
    assert penrose_dichromatic_polynomial(swapped) == \
        penrose_dichromatic_polynomial(g)
    a = penrose_homology_report(g)[0].nonzero()
    b = penrose_homology_report(swapped)[0].nonzero()
    assert sorted(a.items()) == sorted(b.items())


def test_leg_swap_all_positions():
    g = matched_catalog("triangle-blowup")
    base = penrose_polynomial(g)
    for pos in range(g.matching_size):
        for end in (0, 1):
            assert penrose_polynomial(swap_legs(g, pos, end)) == base


def test_matching_cap(monkeypatch):
    monkeypatch.setattr(pen, "MAX_MATCHING", 1)
    with pytest.raises(CapacityError, match="cap is 1"):
        penrose_polynomial(matched_catalog("k4"))


def test_complex_degree_is_nodal_count():
    g = matched_catalog("theta")
    cx = build_penrose_complex(g)
    # degree-0 generators: 4 over PARALLEL (c=2) + 2 over CROSSED (c=1);
    # degree-1: 2 each over NODE0 and NODE1
    total0 = sum(cx.dim(0, gr) for gr in cx.gradings())
    total1 = sum(cx.dim(1, gr) for gr in cx.gradings())
    assert (total0, total1) == (6, 4)


def test_unknown_catalog_spec():
    with pytest.raises(ValueError):
        matched_catalog("moebius")
