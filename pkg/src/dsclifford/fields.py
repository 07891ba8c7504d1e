"""Multivector-valued polynomial fields and pointwise jets.

A :class:`PolyField` assigns a polynomial to each blade.  Bulk fields use the
five ambient coordinates in label order (X^1, X^2, X^3, X^4, X^0); chart
fields use the four chart coordinates x^0..x^3.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass

from .multivector import ModeError, Multivector, coerce
from .poly import Poly
from .signature import Signature, blade_product, grade_of

SPACES = {"bulk": 5, "chart": 4, "spacetime": 4}


class PolyField:
    __slots__ = ("sig", "space", "exact", "comps")

    def __init__(self, sig: Signature, space: str, comps=None, *, exact: bool = True):
        if space not in SPACES:
            raise ValueError(f"unknown coordinate space {space!r}")
        n = SPACES[space]
        self.sig, self.space, self.exact = sig, space, exact
        self.comps = {}
        for m, p in (comps or {}).items():
            if p.nvars != n:
                raise ValueError("polynomial has wrong number of variables")
            for c in p.terms.values():
                coerce(c, exact)
            if p:
                self.comps[m] = p

    @property
    def nvars(self) -> int:
        return SPACES[self.space]

    @classmethod
    def _raw(cls, sig, space, comps, exact):
        obj = object.__new__(cls)
        obj.sig, obj.space, obj.exact = sig, space, exact
        obj.comps = {m: p for m, p in comps.items() if p}
        return obj

    @classmethod
    def constant(cls, mv: Multivector, space: str):
        n = SPACES[space]
        return cls._raw(mv.sig, space, {m: Poly.const(n, c) for m, c in mv.items()}, mv.exact)

    @classmethod
    def zero(cls, sig, space, exact=True):
        return cls._raw(sig, space, {}, exact)

    def _same(self, other: "PolyField"):
        if other.sig != self.sig or other.space != self.space:
            raise ValueError(f"field mismatch: {self.space}/{self.sig.name} vs {other.space}/{other.sig.name}")
        if other.exact != self.exact:
            raise ModeError("cannot mix exact and float fields")

    def __add__(self, other):
        if isinstance(other, Multivector):
            other = PolyField.constant(other, self.space)
        if not isinstance(other, PolyField):
            return NotImplemented
        self._same(other)
        out = dict(self.comps)
        for m, p in other.comps.items():
            out[m] = out[m] + p if m in out else p
        return PolyField._raw(self.sig, self.space, out, self.exact)

    def __neg__(self):
        return PolyField._raw(self.sig, self.space, {m: -p for m, p in self.comps.items()}, self.exact)

    def __sub__(self, other):
        if isinstance(other, Multivector):
            other = PolyField.constant(other, self.space)
        if not isinstance(other, PolyField):
            return NotImplemented
        return self + (-other)

    def scale(self, k) -> "PolyField":
        if isinstance(k, Poly):
            if k.nvars != self.nvars:
                raise ValueError("scalar polynomial has wrong number of variables")
            for c in k.terms.values():
                coerce(c, self.exact)
            return PolyField._raw(self.sig, self.space, {m: p * k for m, p in self.comps.items()}, self.exact)
        k = coerce(k, self.exact)
        return PolyField._raw(self.sig, self.space, {m: p * k for m, p in self.comps.items()}, self.exact)

    def _const_product(self, mv: Multivector, left: bool) -> "PolyField":
        if mv.sig != self.sig:
            raise ValueError("signature mismatch")
        if mv.exact != self.exact:
            raise ModeError("cannot mix exact and float operands")
        out: dict = {}
        for mb, cb in mv.items():
            for mf, pf in self.comps.items():
                s, m = blade_product(self.sig, mb, mf) if left else blade_product(self.sig, mf, mb)
                term = pf * (cb if s > 0 else -cb)
                out[m] = out[m] + term if m in out else term
        return PolyField._raw(self.sig, self.space, out, self.exact)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self._const_product(other, left=False)
        if isinstance(other, (numbers.Number, Poly)):
            return self.scale(other)
        if isinstance(other, PolyField):
            self._same(other)
            out: dict = {}
            for ma, pa in self.comps.items():
                for mb, pb in other.comps.items():
                    s, m = blade_product(self.sig, ma, mb)
                    term = pa * pb if s > 0 else -(pa * pb)
                    out[m] = out[m] + term if m in out else term
            return PolyField._raw(self.sig, self.space, out, self.exact)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return self._const_product(other, left=True)
        if isinstance(other, (numbers.Number, Poly)):
            return self.scale(other)
        return NotImplemented

    def diff(self, i: int) -> "PolyField":
        return PolyField._raw(self.sig, self.space, {m: p.diff(i) for m, p in self.comps.items()}, self.exact)

    def grade(self, k: int) -> "PolyField":
        return PolyField._raw(self.sig, self.space, {m: p for m, p in self.comps.items() if grade_of(m) == k}, self.exact)

    def blades(self):
        return sorted(self.comps)

    def to_float(self) -> "PolyField":
        return PolyField._raw(self.sig, self.space, {m: p.to_float() for m, p in self.comps.items()}, False)

    def __bool__(self):
        return bool(self.comps)

    def __eq__(self, other):
        if not isinstance(other, PolyField):
            return NotImplemented
        return (self.sig, self.space) == (other.sig, other.space) and self.comps == other.comps

    __hash__ = None

    def max_abs(self) -> float:
        return max((p.max_abs() for p in self.comps.values()), default=0.0)

    def evaluate(self, point) -> Multivector:
        exact = self.exact and all(not isinstance(x, float) for x in point)
        f = (lambda c: c) if exact else float
        return Multivector._raw(self.sig, {m: f(p(point)) for m, p in self.comps.items()}, exact)

    def jet(self, point) -> "Jet":
        return Jet(self.evaluate(point), tuple(self.diff(i).evaluate(point) for i in range(self.nvars)))

    def degree(self) -> int:
        return max((p.degree for p in self.comps.values()), default=-1)

    def __repr__(self):
        return f"PolyField({self.space}, {self.sig.name}, {len(self.comps)} blades)"


@dataclass(frozen=True)
class Jet:
    """Value and first partial derivatives of a field at one point."""

    value: Multivector
    grad: tuple

    def __add__(self, other):
        return Jet(self.value + other.value, tuple(a + b for a, b in zip(self.grad, other.grad)))

    def __sub__(self, other):
        return Jet(self.value - other.value, tuple(a - b for a, b in zip(self.grad, other.grad)))

    def __neg__(self):
        return Jet(-self.value, tuple(-g for g in self.grad))

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(self.value * other.value,
                       tuple(ga * other.value + self.value * gb for ga, gb in zip(self.grad, other.grad)))
        return Jet(self.value * other, tuple(g * other for g in self.grad))

    def __rmul__(self, other):
        return Jet(other * self.value, tuple(other * g for g in self.grad))
