"""Sparse multivariate polynomials with exact integer coefficients.

A polynomial carries an ordered tuple of variable names; terms map exponent
tuples (aligned with that order) to nonzero Python ints, so all arithmetic is
exact at any size.  Operations between polynomials with different variable
lists align variables by name: the left operand's order wins and unseen
variables are appended in the right operand's order.

Canonical text form: terms sorted by exponent tuple, lexicographically
descending in the declared variable order; monomial factors printed in
declared order ("q^2 + q*p - p").  The zero polynomial prints as "0".
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = Union[int, float, "Fraction"]


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names: %r" % (self.variables,))
        arity = len(self.variables)
        clean: dict = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise ValueError("exponent tuple %r does not match variables %r"
                                 % (exps, self.variables))
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % (exps,))
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: int) -> "MultiPoly":
        return cls((), {(): value} if value else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): 1})

    # -- helpers -----------------------------------------------------------

    def _signature(self) -> dict:
        """Variable-name-keyed view of the terms, for order-independent comparison."""
        sig = {}
        for exps, coeff in self.terms.items():
            key = frozenset((v, e) for v, e in zip(self.variables, exps) if e)
            sig[key] = coeff
        return sig

    def _align(self, other: "MultiPoly"):
        """Common variable order plus both term dicts rewritten against it."""
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        merged = list(self.variables)
        for v in other.variables:
            if v not in merged:
                merged.append(v)
        merged = tuple(merged)

        def remap(poly):
            pos = [merged.index(v) for v in poly.variables]
            out = {}
            width = len(merged)
            for exps, coeff in poly.terms.items():
                row = [0] * width
                for p, e in zip(pos, exps):
                    row[p] = e
                out[tuple(row)] = coeff
            return out

        return merged, remap(self), remap(other)

    @staticmethod
    def _coerce(value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, int):
            return MultiPoly.const(value)
        raise TypeError("cannot treat %r as a polynomial" % (value,))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        variables, a, b = self._align(other)
        out = dict(a)
        for exps, coeff in b.items():
            out[exps] = out.get(exps, 0) + coeff
        return MultiPoly(variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.variables,
                             {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        variables, a, b = self._align(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return MultiPoly(variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly(self.variables, {(0,) * len(self.variables): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._signature() == other._signature()

    __hash__ = None  # mutable-ish value semantics; not intended as a dict key

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, var: str) -> int:
        """Highest exponent of var; 0 if var is absent or the polynomial is 0."""
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max((e[i] for e in self.terms), default=0)

    def coefficient_of(self, **exponents) -> int:
        """Integer coefficient of the monomial with exactly these exponents."""
        row = [0] * len(self.variables)
        for name, e in exponents.items():
            if name not in self.variables:
                if e:
                    return 0
                continue
            row[self.variables.index(name)] = e
        return self.terms.get(tuple(row), 0)

    def coefficients_in(self, var: str) -> dict:
        """Group terms by the exponent of var.

        Returns {exponent: MultiPoly in the remaining variables}.  Unknown
        variables are rejected rather than treated as exponent 0 everywhere.
        """
        if var not in self.variables:
            raise ValueError("unknown variable %s" % var)
        i = self.variables.index(var)
        rest = self.variables[:i] + self.variables[i + 1:]
        groups: dict = {}
        for exps, coeff in self.terms.items():
            key = exps[:i] + exps[i + 1:]
            groups.setdefault(exps[i], {})[key] = coeff
        return {k: MultiPoly(rest, t) for k, t in groups.items()}

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, var: str, replacement) -> "MultiPoly":
        """Replace var by a polynomial (or int), exactly."""
        if var not in self.variables:
            raise ValueError("unknown variable %s" % var)
        replacement = self._coerce(replacement)
        groups = self.coefficients_in(var)
        top = max(groups) if groups else 0
        acc = MultiPoly.const(0)
        for k in range(top, -1, -1):  # Horner in the replaced variable
            acc = acc * replacement + groups.get(k, MultiPoly.const(0))
        return acc

    def evaluate(self, bindings: Mapping[str, Scalar]):
        """Evaluate with every used variable bound to a number.

        Exact (int/Fraction) when the bindings are exact; with float bindings
        this is plain IEEE double arithmetic, summed in canonical term order.
        """
        used = [False] * len(self.variables)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        values = []
        for i, name in enumerate(self.variables):
            if name in bindings:
                values.append(bindings[name])
            elif used[i]:
                raise ValueError("unbound variable %s" % name)
            else:
                values.append(0)
        total = 0
        for exps in sorted(self.terms, reverse=True):
            term = self.terms[exps]
            for v, e in zip(values, exps):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    # -- output --------------------------------------------------------------

    def canonical_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%d*%s" % (mag, mono)
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __str__(self):
        return self.canonical_text()

    def __repr__(self):
        return "MultiPoly(%r, %s)" % (self.variables, self.canonical_text())


def power_table(base: MultiPoly, top: int) -> list:
    """[base**0, ..., base**top], reusing each previous power."""
    out = [MultiPoly.const(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out
