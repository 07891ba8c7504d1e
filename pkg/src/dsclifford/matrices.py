"""Small complex matrices with exact Gaussian-rational or float entries.

Entries are held as separate real and imaginary arrays so that exact mode can
use ``Fraction`` objects (numpy object arrays) and float mode plain float64.
"""
from __future__ import annotations

import numbers
from fractions import Fraction

import numpy as np

from .multivector import ModeError, coerce


def _arr(data, exact):
    if exact:
        a = np.empty(np.shape(data), dtype=object)
        flat = np.asarray(data, dtype=object).ravel()
        a.ravel()[:] = [coerce(v, True) for v in flat]
        return a
    return np.asarray(data, dtype=float)


class ComplexMatrix:
    __slots__ = ("re", "im", "exact")

    def __init__(self, re, im=None, *, exact: bool = True):
        re = _arr(re, exact)
        im = _arr(np.zeros(re.shape, dtype=int) if im is None else im, exact)
        if re.shape != im.shape or re.ndim != 2:
            raise ValueError("real and imaginary parts must be equal-shaped 2-d arrays")
        self.re, self.im, self.exact = re, im, exact

    @classmethod
    def _raw(cls, re, im, exact):
        obj = object.__new__(cls)
        obj.re, obj.im, obj.exact = re, im, exact
        return obj

    @classmethod
    def identity(cls, n=4, exact=True):
        return cls(np.eye(n, dtype=int).tolist(), exact=exact)

    @classmethod
    def zeros(cls, shape, exact=True):
        return cls(np.zeros(shape, dtype=int).tolist(), exact=exact)

    @property
    def shape(self):
        return self.re.shape

    def _check(self, other):
        if other.exact != self.exact:
            raise ModeError("cannot mix exact and float matrices")

    def __matmul__(self, other):
        self._check(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexMatrix._raw(a @ c - b @ d, a @ d + b @ c, self.exact)

    def __add__(self, other):
        self._check(other)
        return ComplexMatrix._raw(self.re + other.re, self.im + other.im, self.exact)

    def __sub__(self, other):
        self._check(other)
        return ComplexMatrix._raw(self.re - other.re, self.im - other.im, self.exact)

    def __neg__(self):
        return ComplexMatrix._raw(-self.re, -self.im, self.exact)

    def scale(self, re, im=0):
        """Multiply by the complex number re + i im."""
        re, im = coerce(re, self.exact), coerce(im, self.exact)
        return ComplexMatrix._raw(self.re * re - self.im * im, self.re * im + self.im * re, self.exact)

    def __mul__(self, k):
        if isinstance(k, complex):
            return self.scale(k.real, k.imag)
        if isinstance(k, numbers.Number):
            return self.scale(k)
        return NotImplemented

    __rmul__ = __mul__

    def times_i(self):
        return ComplexMatrix._raw(-self.im, self.re, self.exact)

    def conj(self):
        return ComplexMatrix._raw(self.re, -self.im, self.exact)

    @property
    def T(self):
        return ComplexMatrix._raw(self.re.T, self.im.T, self.exact)

    def dagger(self):
        return self.conj().T

    def row(self, i):
        return ComplexMatrix._raw(self.re[i:i + 1, :], self.im[i:i + 1, :], self.exact)

    def col(self, j):
        return ComplexMatrix._raw(self.re[:, j:j + 1], self.im[:, j:j + 1], self.exact)

    def to_float(self):
        return ComplexMatrix._raw(self.re.astype(float), self.im.astype(float), False)

    def to_complex(self) -> np.ndarray:
        return self.re.astype(float) + 1j * self.im.astype(float)

    def norm(self) -> float:
        return float(np.linalg.norm(self.to_complex()))

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.re == other.re) and np.all(self.im == other.im))

    __hash__ = None

    def to_json(self):
        f = str if self.exact else float
        return [[[f(self.re[i, j]), f(self.im[i, j])] for j in range(self.shape[1])] for i in range(self.shape[0])]

    @classmethod
    def from_json(cls, data, exact=True):
        conv = Fraction if exact else float
        re = [[conv(e[0]) for e in row] for row in data]
        im = [[conv(e[1]) for e in row] for row in data]
        return cls(re, im, exact=exact)

    def __repr__(self):
        return f"ComplexMatrix({self.to_complex()!r})"
