import pytest

from gpc.color_algebra import (ColorAlgebra, ZERO, algebra_from_table_text,
                               build_color_complex, cyclic_group, euler_check,
                               klein_four, make_algebra, orthogonal_idempotent,
                               verify_proposition)
from gpc.complexes import homology
from gpc.errors import BudgetError, ParseError, ValidationError
from gpc.graphs import catalog


def test_algebra_validation():
    with pytest.raises(ValidationError, match="at least one"):
        ColorAlgebra(0, ())
    with pytest.raises(ValidationError, match="must be 2x2"):
        ColorAlgebra(2, ((1,),))
    with pytest.raises(ValidationError, match="not 0..2"):
        ColorAlgebra(2, ((1, 3), (3, 2)))
    with pytest.raises(ValidationError, match="not commutative"):
        ColorAlgebra(2, ((1, 2), (1, 2)))
    # x1*x1 = x2, x1*x2 = 0, x2*x2 = x1:
    # (x1*x1)*x2 = x2*x2 = x1 but x1*(x1*x2) = 0
    with pytest.raises(ValidationError,
                       match=r"not associative: \(x1\*x1\)\*x2 = 1"):
        ColorAlgebra(2, ((2, 0), (0, 1)))


def test_mul_and_zero():
    a = orthogonal_idempotent(3)
    assert a.mul(1, 1) == 1
    assert a.mul(1, 2) == ZERO
    assert a.mul(ZERO, 1) == ZERO
    assert a.has_zero_products
    assert not klein_four().has_zero_products


def test_builtin_tables():
    assert orthogonal_idempotent(2).table == ((1, 0), (0, 2))
    assert klein_four().table == ((1, 2, 3, 4), (2, 1, 4, 3),
                                  (3, 4, 1, 2), (4, 3, 2, 1))
    assert cyclic_group(3).table == ((1, 2, 3), (2, 3, 1), (3, 1, 2))
    assert cyclic_group(1).table == ((1,),)


def test_make_algebra():
    assert make_algebra("an:3").size == 3
    assert make_algebra("klein4").name == "klein4"
    assert make_algebra("cyclic:4").table == cyclic_group(4).table
    for bad in ("an:x", "zn:3", "klein5", "cyclic:-1"):
        with pytest.raises(ValueError):
            make_algebra(bad)


def test_table_text_parsing():
    a = algebra_from_table_text("""
# the two-generator orthogonal idempotent algebra
2
1 0
0 2
""")
    assert a.table == orthogonal_idempotent(2).table
    with pytest.raises(ParseError, match="empty"):
        algebra_from_table_text("# just a comment")
    with pytest.raises(ParseError, match="must be integers"):
        algebra_from_table_text("2\n1 0 0 x")
    with pytest.raises(ParseError, match="expected 4 table entries"):
        algebra_from_table_text("2\n1 0 0")
    with pytest.raises(ValidationError):
        algebra_from_table_text("2\n1 2\n1 2")  # valid shape, bad algebra


def test_complex_dimensions():
    # single edge, two generators: 4 colorings of the empty state,
    # 2 of the full state
    cx = build_color_complex(catalog("path:1"), orthogonal_idempotent(2))
    assert cx.dim(0, ()) == 4
    assert cx.dim(1, ()) == 2
    assert cx.total_generators() == 6


def test_generator_budget():
    with pytest.raises(BudgetError, match="budget"):
        build_color_complex(catalog("complete:4"), klein_four(), budget=10)


def test_proposition_small_graphs():
    # degree-0 rank equals the proper-coloring count, nothing else survives
    summary = verify_proposition(catalog("path:1"), 2)
    assert summary.betti(0, ()) == 2
    summary = verify_proposition(catalog("complete:3"), 3)
    assert summary.betti(0, ()) == 6
    summary = verify_proposition(catalog("loop"), 2)
    assert summary.betti(0, ()) == 0
    summary = verify_proposition(catalog("path:2"), 2)
    assert summary.betti(0, ()) == 2


def test_proposition_across_catalog():
    for spec in ("path:3", "cycle:3", "cycle:4", "theta", "cycle:2"):
        g = catalog(spec)
        for n in (1, 2, 3):
            verify_proposition(g, n)


def test_euler_check_group_algebras():
    k3 = catalog("complete:3")
    assert euler_check(k3, klein_four()) == 24
    assert euler_check(k3, cyclic_group(4)) == 24
    assert euler_check(k3, orthogonal_idempotent(4)) == 24
    assert euler_check(catalog("loop"), cyclic_group(3)) == 0
    assert euler_check(catalog("path:1"), orthogonal_idempotent(2)) == 2


def test_group_algebra_homology_can_have_torsion():
    # cycle:4 over the Klein group: chi is chromatic but homology spreads out
    summary = homology(build_color_complex(catalog("cycle:4"), klein_four()))
    assert summary.betti(0, ()) == 84
    assert summary.torsion(1, ()) == (2, 2, 2, 2)
    assert summary.torsion(2, ()) == (2,) * 8
    chi = sum((-1) ** deg * b for (deg, _), (b, _) in summary.groups.items())
    assert chi == 84  # (4-1)^4 + (4-1)


def test_differential_drops_zero_products():
    # an:2 on one edge: only same-colored components survive the merge
    cx = build_color_complex(catalog("path:1"), orthogonal_idempotent(2))
    m = cx.blocks[()].matrix(0)
    # colorings of the empty state in order: (1,1),(1,2),(2,1),(2,2);
    # full state: (1,), (2,)
    assert m.to_dense() == [[1, 0, 0, 0], [0, 0, 0, 1]]


def test_group_differential_has_no_dropped_terms():
    cx = build_color_complex(catalog("path:1"), cyclic_group(2))
    m = cx.blocks[()].matrix(0)
    # every product is defined: (1,1)->x1, (1,2)->x2, (2,1)->x2, (2,2)->x1
    assert m.to_dense() == [[1, 0, 0, 1], [0, 1, 1, 0]]
