"""Finitely generated chain complexes of free Z-modules, graded by an extra
integer vector, and their integer homology.

The differential raises degree by one and must preserve the grading vector,
so the complex splits into independent blocks, one per grading value.  Each
block's homology comes from Smith normal form: with d_k the matrix out of
degree k,

    betti(k)   = dim C^k - rank(d_k) - rank(d_{k-1})
    torsion(k) = invariant factors of d_{k-1} larger than 1

Euler characteristics are computed from chain ranks alone and cross-checked
against the alternating sum of Betti numbers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .errors import IntegrityError
from .linalg import SparseIntMatrix, smith_normal_form
from .poly import MultiPoly


@dataclass
class ChainBlock:
    """One grading value's chain groups and differentials.

    generators[k] is the ordered list of opaque generator descriptions at
    degree k; matrices[k] is d_k mapping degree k to degree k+1 (rows are
    degree-k+1 generators, columns degree-k).
    """
    generators: Dict[int, list] = field(default_factory=dict)
    matrices: Dict[int, SparseIntMatrix] = field(default_factory=dict)

    def dim(self, degree: int) -> int:
        gens = self.generators.get(degree)
        return len(gens) if gens else 0

    def degrees(self) -> List[int]:
        return sorted(k for k, gens in self.generators.items() if gens)

    def matrix(self, degree: int) -> SparseIntMatrix:
        m = self.matrices.get(degree)
        if m is None:
            m = SparseIntMatrix(self.dim(degree + 1), self.dim(degree))
        return m


@dataclass
class GradedComplex:
    grading_arity: int
    blocks: Dict[tuple, ChainBlock] = field(default_factory=dict)

    def gradings(self) -> List[tuple]:
        return sorted(self.blocks)

    def dim(self, degree: int, grading: tuple) -> int:
        block = self.blocks.get(tuple(grading))
        return block.dim(degree) if block else 0

    def total_generators(self) -> int:
        return sum(block.dim(k) for block in self.blocks.values()
                   for k in block.generators)

    def check_integrity(self):
        """Verify matrix shapes and that consecutive differentials compose to zero."""
        for grading, block in self.blocks.items():
            degrees = block.degrees()
            if not degrees:
                continue
            lo, hi = degrees[0], degrees[-1]
            for k in range(lo, hi):
                m = block.matrix(k)
                if m.rows != block.dim(k + 1) or m.cols != block.dim(k):
                    raise IntegrityError(
                        "grading %r degree %d: matrix is %dx%d, expected %dx%d"
                        % (grading, k, m.rows, m.cols, block.dim(k + 1), block.dim(k)))
            for k in range(lo, hi - 1):
                a, b = block.matrix(k + 1), block.matrix(k)
                if a.rows == 0 or b.cols == 0 or a.cols == 0:
                    continue
                if not a.matmul(b).is_zero:
                    raise IntegrityError(
                        "d o d != 0 at grading %r, degrees %d -> %d -> %d"
                        % (grading, k, k + 1, k + 2))


class ComplexBuilder:
    """Accumulates generators (in canonical order) and differential entries.

    Generator keys must be unique across the whole complex; entries are added
    by key so builders never juggle indices.  The differential must go from
    degree k to k+1 within one grading; anything else is an integrity error.
    """

    def __init__(self, grading_arity: int):
        self.grading_arity = grading_arity
        self._where: Dict = {}
        self._gens: Dict[tuple, Dict[int, list]] = {}
        self._entries: Dict[tuple, Dict[int, Dict[Tuple[int, int], int]]] = {}

    def add_generator(self, key, degree: int, grading: tuple, label=None):
        grading = tuple(grading)
        if len(grading) != self.grading_arity:
            raise IntegrityError("grading %r has arity %d, expected %d"
                                 % (grading, len(grading), self.grading_arity))
        if key in self._where:
            raise IntegrityError("duplicate generator key %r" % (key,))
        bucket = self._gens.setdefault(grading, {}).setdefault(degree, [])
        self._where[key] = (degree, grading, len(bucket))
        bucket.append(key if label is None else label)

    def add_entry(self, src_key, dst_key, coeff: int):
        if not coeff:
            return
        sdeg, sgrad, scol = self._where[src_key]
        ddeg, dgrad, drow = self._where[dst_key]
        if ddeg != sdeg + 1:
            raise IntegrityError("differential entry %r -> %r changes degree %d -> %d"
                                 % (src_key, dst_key, sdeg, ddeg))
        if dgrad != sgrad:
            raise IntegrityError("differential entry %r -> %r changes grading %r -> %r"
                                 % (src_key, dst_key, sgrad, dgrad))
        bucket = self._entries.setdefault(sgrad, {}).setdefault(sdeg, {})
        bucket[(drow, scol)] = bucket.get((drow, scol), 0) + coeff

    def build(self, check: bool = True) -> GradedComplex:
        complex_ = GradedComplex(self.grading_arity)
        for grading, per_degree in self._gens.items():
            block = ChainBlock(generators=dict(per_degree))
            for degree, entries in self._entries.get(grading, {}).items():
                block.matrices[degree] = SparseIntMatrix(
                    block.dim(degree + 1), block.dim(degree),
                    {k: v for k, v in entries.items() if v})
            complex_.blocks[grading] = block
        if check:
            complex_.check_integrity()
        return complex_


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers, torsion, and Euler characteristics per grading."""
    grading_arity: int
    groups: dict      # (degree, grading) -> (betti, torsion tuple); every populated slot
    euler: dict       # grading -> int, from chain ranks
    chain_ranks: dict  # (degree, grading) -> dim C^{degree, grading}

    def betti(self, degree: int, grading) -> int:
        return self.groups.get((degree, tuple(grading)), (0, ()))[0]

    def torsion(self, degree: int, grading) -> tuple:
        return self.groups.get((degree, tuple(grading)), (0, ()))[1]

    def euler_of(self, grading) -> int:
        return self.euler.get(tuple(grading), 0)

    def nonzero(self) -> dict:
        return {key: val for key, val in self.groups.items()
                if val[0] or val[1]}

    def euler_polynomial(self, coordinate_vars: tuple) -> MultiPoly:
        """Sum of euler(grading) * prod(var_i ^ grading_i)."""
        if len(coordinate_vars) != self.grading_arity:
            raise ValueError("need %d variable names, got %d"
                             % (self.grading_arity, len(coordinate_vars)))
        terms = {tuple(g): e for g, e in self.euler.items() if e}
        return MultiPoly(tuple(coordinate_vars), terms)

    def to_json_rows(self) -> list:
        rows = []
        for grading in sorted(self.euler):
            degrees = sorted(deg for deg, g in self.groups if g == grading)
            for degree in degrees:
                betti, torsion = self.groups[(degree, grading)]
                if betti or torsion:
                    rows.append({"degree": degree, "grading": list(grading),
                                 "betti": betti, "torsion": list(torsion)})
            rows.append({"grading": list(grading), "euler": self.euler[grading]})
        return rows


def _block_homology(payload):
    """Homology of a single grading block; shaped for executor.map."""
    grading, dims, matrices = payload
    degrees = sorted(dims)
    lo, hi = degrees[0], degrees[-1]
    snf = {}
    for k in range(lo, hi):
        m = matrices.get(k)
        if m is None or m.is_zero:
            snf[k] = ([], 0)
        else:
            snf[k] = smith_normal_form(m)
    groups = {}
    for k in range(lo, hi + 1):
        dim_k = dims.get(k, 0)
        rank_out = snf.get(k, ([], 0))[1]
        factors_in, rank_in = snf.get(k - 1, ([], 0))
        betti = dim_k - rank_out - rank_in
        torsion = tuple(d for d in factors_in if d > 1)
        if betti < 0:
            raise IntegrityError("negative betti at grading %r degree %d" % (grading, k))
        groups[(k, grading)] = (betti, torsion)
    euler = sum((-1) ** k * d for k, d in dims.items())
    betti_euler = sum((-1) ** k * b for (k, _), (b, _) in groups.items())
    if euler != betti_euler:
        raise IntegrityError(
            "grading %r: chain-rank euler %d != betti euler %d"
            % (grading, euler, betti_euler))
    return grading, groups, euler, dims


def homology(complex_: GradedComplex, jobs: int = 1) -> HomologySummary:
    """Integer homology of every grading block.

    jobs > 1 distributes blocks over a process pool; block order (and thus
    every output) is independent of the worker count.
    """
    complex_.check_integrity()
    payloads = []
    for grading in complex_.gradings():
        block = complex_.blocks[grading]
        degrees = block.degrees()
        if not degrees:
            continue
        dims = {k: block.dim(k) for k in range(degrees[0], degrees[-1] + 1)}
        matrices = {k: block.matrix(k) for k in range(degrees[0], degrees[-1])}
        payloads.append((grading, dims, matrices))

    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_block_homology, payloads))
    else:
        results = [_block_homology(p) for p in payloads]

    groups, euler, ranks = {}, {}, {}
    for grading, block_groups, block_euler, dims in results:
        groups.update(block_groups)
        euler[grading] = block_euler
        for k, d in dims.items():
            ranks[(k, grading)] = d
    return HomologySummary(complex_.grading_arity, groups, euler, ranks)
