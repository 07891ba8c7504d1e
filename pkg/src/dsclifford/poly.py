"""Sparse multivariate polynomials.

Terms map exponent tuples to coefficients.  Coefficients are whatever
numbers the caller supplies (``Fraction`` for exact work, ``float`` otherwise);
the field layer keeps the two apart.
"""
from __future__ import annotations

import numbers
from fractions import Fraction


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError("exponent tuple has wrong length")
            if c != 0:
                self.terms[tuple(exps)] = c

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, c=1):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): c})

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        if not isinstance(other, (Poly, numbers.Number)):
            return NotImplemented
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, numbers.Number)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = Poly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Poly(self.nvars, out)

    def __call__(self, point):
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def map(self, f) -> "Poly":
        return Poly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def to_float(self):
        return self.map(float)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, numbers.Number):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def max_abs(self) -> float:
        return max((abs(float(c)) for c in self.terms.values()), default=0.0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def exact_coeff(c):
    return c if isinstance(c, Fraction) else Fraction(c)
