"""Chain complexes of graph states with components colored in a finite
commutative "color algebra".

An algebra here is a set of n generators x_1..x_n with a product table whose
entries are single generators or zero; it must be commutative and associative
(checked exhaustively at construction, with a witness triple on failure), but
needs no identity element.  States color each component of a spanning
subgraph by a generator; the differential adds one edge, multiplying the
colors of the components it merges (zero kills the term) and keeping the
color when the edge closes up a single component.  The sign at edge e counts
the edges before e in the global order that are absent from the state.

Whatever the product table, the complex's Euler characteristic is the
chromatic polynomial at lambda = n, since the chain ranks alone are
sum_S n^{c(S)}.  For the orthogonal-idempotent algebra (x_i x_i = x_i, mixed
products zero) the homology is concentrated in degree 0 and is free on the
proper n-colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .complexes import ComplexBuilder, GradedComplex, HomologySummary, homology
from .errors import BudgetError, ParseError, TheoryViolationError, ValidationError
from .chromatic import brute_force_proper_colorings, chromatic_poly_dc
from .graphs import Multigraph, enumerate_states, transfer_component_labels

ZERO = 0
DEFAULT_GENERATOR_BUDGET = 2 * 10 ** 6


@dataclass(frozen=True)
class ColorAlgebra:
    """n generators (numbered 1..n) and an n x n product table.

    table[i-1][j-1] is the index of x_i * x_j, or 0 when the product is zero.
    """
    size: int
    table: tuple
    name: str = ""

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise ValidationError("algebra needs at least one generator")
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValidationError("product table must be %dx%d" % (n, n))
        for row in self.table:
            for v in row:
                if not (0 <= v <= n):
                    raise ValidationError("table entry %r is not 0..%d" % (v, n))
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if self.mul(i, j) != self.mul(j, i):
                    raise ValidationError(
                        "not commutative: x%d*x%d = %d but x%d*x%d = %d"
                        % (i, j, self.mul(i, j), j, i, self.mul(j, i)))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    left = self.mul(self.mul(i, j), k)
                    right = self.mul(i, self.mul(j, k))
                    if left != right:
                        raise ValidationError(
                            "not associative: (x%d*x%d)*x%d = %d "
                            "but x%d*(x%d*x%d) = %d"
                            % (i, j, k, left, i, j, k, right))

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return self.table[a - 1][b - 1]

    @property
    def has_zero_products(self) -> bool:
        return any(v == ZERO for row in self.table for v in row)


def orthogonal_idempotent(n: int) -> ColorAlgebra:
    """x_i * x_i = x_i, all mixed products zero."""
    table = tuple(tuple(i + 1 if i == j else ZERO for j in range(n))
                  for i in range(n))
    return ColorAlgebra(n, table, "an:%d" % n)


def klein_four() -> ColorAlgebra:
    """Multiplication table of the Klein four-group (1, a, b, c)."""
    table = ((1, 2, 3, 4),
             (2, 1, 4, 3),
             (3, 4, 1, 2),
             (4, 3, 2, 1))
    return ColorAlgebra(4, table, "klein4")


def cyclic_group(n: int) -> ColorAlgebra:
    """Multiplication table of Z/n written multiplicatively."""
    if n < 1:
        raise ValueError("cyclic:n needs n >= 1")
    table = tuple(tuple((i + j) % n + 1 for j in range(n)) for i in range(n))
    return ColorAlgebra(n, table, "cyclic:%d" % n)


def make_algebra(spec: str) -> ColorAlgebra:
    """Build an algebra from a spec string: an:N, klein4, or cyclic:N."""
    if spec == "klein4":
        return klein_four()
    fields = spec.split(":")
    if len(fields) == 2 and fields[1].isdigit():
        if fields[0] == "an":
            return orthogonal_idempotent(int(fields[1]))
        if fields[0] == "cyclic":
            return cyclic_group(int(fields[1]))
    raise ValueError("unknown algebra spec %r" % spec)


def algebra_from_table_text(text: str, name: str = "custom") -> ColorAlgebra:
    """Parse 'n' followed by n*n table entries (whitespace separated,
    '#' comments allowed); entry 0 means the product is zero."""
    tokens = []
    for raw in text.splitlines():
        tokens.extend(raw.split("#", 1)[0].split())
    if not tokens:
        raise ParseError("empty algebra table")
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError("algebra table entries must be integers")
    n = values[0]
    if n < 1 or len(values) != 1 + n * n:
        raise ParseError("expected %d table entries for n=%d, got %d"
                         % (n * n if n >= 1 else 0, n, len(values) - 1))
    rows = tuple(tuple(values[1 + i * n: 1 + (i + 1) * n]) for i in range(n))
    return ColorAlgebra(n, rows, name)


def build_color_complex(g: Multigraph, algebra: ColorAlgebra,
                        budget: int = DEFAULT_GENERATOR_BUDGET) -> GradedComplex:
    """States with components colored by generators; degree e(S), no extra
    grading.  Generators are ordered by edge bit set, then color vector."""
    states = list(enumerate_states(g))
    total = sum(algebra.size ** st.component_count for st in states)
    if total > budget:
        raise BudgetError("complex would have %d generators, budget is %d"
                          % (total, budget))
    colors = range(1, algebra.size + 1)
    builder = ComplexBuilder(grading_arity=0)
    for st in states:
        for coloring in product(colors, repeat=st.component_count):
            builder.add_generator((st.edge_set, coloring), st.edge_count, ())

    def merge(a, b):
        out = algebra.mul(a, b)
        return None if out == ZERO else out

    for st in states:
        reps = st.component_representatives()
        colorings = list(product(colors, repeat=st.component_count))
        for e in range(g.edge_count):
            if st.edge_set >> e & 1:
                continue
            absent_before = e - (st.edge_set & ((1 << e) - 1)).bit_count()
            sign = -1 if absent_before & 1 else 1
            dst = states[st.edge_set | (1 << e)]
            for coloring in colorings:
                moved = transfer_component_labels(reps, dst.component_partition,
                                                  coloring, merge)
                if moved is None:
                    continue
                builder.add_entry((st.edge_set, coloring),
                                  (dst.edge_set, tuple(moved)), sign)
    return builder.build()


def verify_proposition(g: Multigraph, colors: int, jobs: int = 1) -> HomologySummary:
    """For the orthogonal-idempotent algebra: homology is free of rank
    'number of proper colorings' in degree 0 and zero in higher degrees.
    Raises if the computation disagrees; that must never happen."""
    summary = homology(build_color_complex(g, orthogonal_idempotent(colors)),
                       jobs=jobs)
    expected = brute_force_proper_colorings(g, colors)
    if summary.betti(0, ()) != expected:
        raise TheoryViolationError("degree-0 rank %d != proper coloring count %d"
                                   % (summary.betti(0, ()), expected))
    for (degree, _), (betti, torsion) in summary.groups.items():
        if torsion:
            raise TheoryViolationError("torsion %r at degree %d" % (torsion, degree))
        if degree >= 1 and betti:
            raise TheoryViolationError("unexpected rank %d at degree %d"
                                       % (betti, degree))
    return summary


def euler_check(g: Multigraph, algebra: ColorAlgebra, jobs: int = 1) -> int:
    """Alternating Betti sum of the color complex; asserts it equals the
    chromatic polynomial at lambda = n for any valid algebra."""
    summary = homology(build_color_complex(g, algebra), jobs=jobs)
    chi = sum((-1) ** degree * betti
              for (degree, _), (betti, _) in summary.groups.items())
    expected = chromatic_poly_dc(g).evaluate({"lambda": algebra.size})
    if chi != expected:
        raise TheoryViolationError(
            "euler characteristic %d != chromatic polynomial at %d, %d"
            % (chi, algebra.size, expected))
    return chi
