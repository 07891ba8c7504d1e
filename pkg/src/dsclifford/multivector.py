"""Sparse multivectors over a fixed signature.

Coefficients are either exact rationals (``fractions.Fraction``) or floats.
A multivector carries its mode; combining an exact operand with a float
operand raises :class:`ModeError` rather than silently demoting.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction

from .signature import Signature, blade_product, grade_of


class ModeError(TypeError):
    """Exact and float coefficients were mixed in one operation."""


def coerce(value, exact: bool):
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if exact:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, numbers.Integral):
            return Fraction(int(value))
        raise ModeError(f"float coefficient {value!r} in exact mode")
    if isinstance(value, Fraction):
        raise ModeError(f"rational coefficient {value} in float mode")
    if isinstance(value, numbers.Real):
        return float(value)
    raise TypeError(f"unsupported coefficient {value!r}")


def infer_exact(value) -> bool:
    return isinstance(value, (numbers.Integral, Fraction))


def _label_string(labels) -> str:
    if all(0 <= x < 10 for x in labels):
        return "".join(str(x) for x in labels)
    return "{" + ",".join(str(x) for x in labels) + "}"


class Multivector:
    __slots__ = ("sig", "exact", "_terms")

    def __init__(self, sig: Signature, terms=None, *, exact: bool = True):
        clean = {}
        for mask, c in (terms or {}).items():
            if not 0 <= mask <= sig.top:
                raise ValueError(f"blade mask {mask} outside {sig.name}")
            c = coerce(c, exact)
            if c != 0:
                clean[mask] = c
        self.sig = sig
        self.exact = exact
        self._terms = clean

    @classmethod
    def _raw(cls, sig, terms, exact):
        obj = object.__new__(cls)
        obj.sig = sig
        obj.exact = exact
        obj._terms = {m: c for m, c in terms.items() if c != 0}
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, sig, exact=True):
        return cls._raw(sig, {}, exact)

    @classmethod
    def scalar(cls, sig, value, exact=None):
        if exact is None:
            exact = infer_exact(value)
        return cls(sig, {0: value}, exact=exact)

    @classmethod
    def vector(cls, sig, label, coeff=1, exact=None):
        if exact is None:
            exact = infer_exact(coeff)
        return cls(sig, {sig.mask(label): coeff}, exact=exact)

    @classmethod
    def blade(cls, sig, *labels, coeff=1, exact=None):
        """Product of basis vectors in the order given (not necessarily canonical)."""
        if exact is None:
            exact = infer_exact(coeff)
        out = cls.scalar(sig, coeff, exact)
        for lab in labels:
            out = out * cls.vector(sig, lab, 1, exact)
        return out

    @classmethod
    def from_vector(cls, sig, comps, exact=None):
        """Vector with the given coefficients on the basis vectors, in label order."""
        comps = list(comps)
        if len(comps) != sig.dim:
            raise ValueError("wrong number of components")
        if exact is None:
            exact = all(infer_exact(c) for c in comps)
        return cls(sig, {1 << k: c for k, c in enumerate(comps)}, exact=exact)

    # -- inspection ----------------------------------------------------
    def items(self):
        return sorted(self._terms.items(), key=lambda t: (grade_of(t[0]), t[0]))

    def coeff(self, mask: int):
        return self._terms.get(mask, self._zero())

    def scalar_part(self):
        return self.coeff(0)

    def _zero(self):
        return Fraction(0) if self.exact else 0.0

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({grade_of(m) for m in self._terms}))

    def is_homogeneous(self, k: int) -> bool:
        return all(grade_of(m) == k for m in self._terms)

    def norm(self) -> float:
        return math.sqrt(sum(float(c) ** 2 for c in self._terms.values()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def vector_coeffs(self):
        """Coefficients on the basis vectors, in label order."""
        return [self.coeff(1 << k) for k in range(self.sig.dim)]

    # -- mode handling -------------------------------------------------
    def to_float(self) -> "Multivector":
        return Multivector._raw(self.sig, {m: float(c) for m, c in self._terms.items()}, False)

    def _check(self, other: "Multivector"):
        if other.sig != self.sig:
            raise ValueError(f"signature mismatch: {self.sig.name} vs {other.sig.name}")
        if other.exact != self.exact:
            raise ModeError("cannot mix exact and float multivectors")

    def _lift(self, value) -> "Multivector":
        if isinstance(value, Multivector):
            self._check(value)
            return value
        return Multivector(self.sig, {0: value}, exact=self.exact)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (Multivector, numbers.Number)):
            return NotImplemented
        other = self._lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector._raw(self.sig, out, self.exact)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.sig, {m: -c for m, c in self._terms.items()}, self.exact)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, (Multivector, numbers.Number)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, k):
        k = coerce(k, self.exact)
        return Multivector._raw(self.sig, {m: c * k for m, c in self._terms.items()}, self.exact)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, numbers.Number):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self._scale(other)
        return NotImplemented

    def __truediv__(self, k):
        if not isinstance(k, numbers.Number):
            return NotImplemented
        k = coerce(k, self.exact)
        return Multivector._raw(self.sig, {m: c / k for m, c in self._terms.items()}, self.exact)

    def __xor__(self, other):
        return wedge(self, other)

    def __invert__(self):
        return reversion(self)

    def __eq__(self, other):
        if isinstance(other, numbers.Number):
            other = Multivector._raw(self.sig, {0: other}, self.exact)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    __hash__ = None

    # -- named operations ---------------------------------------------
    def grade(self, k: int) -> "Multivector":
        return grade(self, k)

    def even(self):
        return Multivector._raw(self.sig, {m: c for m, c in self._terms.items() if grade_of(m) % 2 == 0}, self.exact)

    def odd(self):
        return Multivector._raw(self.sig, {m: c for m, c in self._terms.items() if grade_of(m) % 2}, self.exact)

    def lc(self, other):
        return left_contraction(self, other)

    def inverse(self) -> "Multivector":
        """Inverse of an element whose product with its reverse is a nonzero scalar."""
        rr = self * reversion(self)
        if rr.grades() not in ((0,),):
            raise ValueError("element times its reverse is not a nonzero scalar")
        return reversion(self) / rr.scalar_part()

    # -- text ------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            cs = repr(c) if isinstance(c, float) else str(c)
            parts.append(cs if m == 0 else f"{cs}*e{_label_string(self.sig.blade_labels(m))}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Multivector({self.sig.name}, {self})"


def parse(sig: Signature, text: str, exact: bool = True) -> Multivector:
    """Inverse of ``str`` for multivectors."""
    text = text.strip()
    if text == "0":
        return Multivector.zero(sig, exact)
    terms = {}
    for part in text.split(" + "):
        if "*e" in part:
            cs, blade = part.split("*e", 1)
            if blade.startswith("{"):
                labels = [int(x) for x in blade.strip("{}").split(",")]
            else:
                labels = [int(ch) for ch in blade]
            mask = sig.mask(*labels)
            if list(sig.blade_labels(mask)) != labels:
                raise ValueError(f"blade {blade} not in canonical order")
        else:
            cs, mask = part, 0
        c = Fraction(cs) if exact else float(cs)
        terms[mask] = terms.get(mask, 0) + c
    return Multivector(sig, terms, exact=exact)


# -- products ------------------------------------------------------------

def _product(a: Multivector, b: Multivector, keep) -> Multivector:
    a._check(b)
    sig = a.sig
    out: dict[int, object] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            if not keep(ma, mb):
                continue
            s, m = blade_product(sig, ma, mb)
            v = ca * cb
            out[m] = out.get(m, 0) + (v if s > 0 else -v)
    return Multivector._raw(sig, out, a.exact)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return _product(a, b, lambda x, y: True)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return _product(a, b, lambda x, y: not x & y)


def left_contraction(a: Multivector, b: Multivector) -> Multivector:
    """a ⌟ b, the part of ab of grade s - r for grade-r a and grade-s b."""
    return _product(a, b, lambda x, y: x & y == x)


def grade(a: Multivector, k: int) -> Multivector:
    if not 0 <= k <= a.sig.dim:
        raise ValueError(f"grade {k} out of range for {a.sig.name}")
    return Multivector._raw(a.sig, {m: c for m, c in a._terms.items() if grade_of(m) == k}, a.exact)


def reversion(a: Multivector) -> Multivector:
    out = {}
    for m, c in a._terms.items():
        k = grade_of(m)
        out[m] = -c if (k * (k - 1) // 2) % 2 else c
    return Multivector._raw(a.sig, out, a.exact)


def scalar_product(a: Multivector, b: Multivector):
    return geometric_product(reversion(a), b).scalar_part()


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a * b - b * a


def pseudoscalar(sig: Signature, exact: bool = True) -> Multivector:
    """Ordered product of all basis vectors, in label order."""
    return Multivector(sig, {sig.top: 1}, exact=exact)


def hodge_star(a: Multivector) -> Multivector:
    return left_contraction(a, pseudoscalar(a.sig, a.exact))


def hodge_star_inv(a: Multivector) -> Multivector:
    tau = pseudoscalar(a.sig, a.exact)
    # a ⌟ tau = a tau for every a, so the inverse is right division by tau
    t2 = (tau * tau).scalar_part()
    return a * tau / t2


def exp_bivector(B: Multivector, terms: int = 30, method: str = "auto") -> Multivector:
    """Exponential of a bivector.

    When B*B is a scalar the closed form (cos/sin or cosh/sinh) is used and
    the result is float-valued, except for nilpotent B where exp(B) = 1 + B
    stays exact.  Otherwise a truncated series with ``terms`` summands is
    summed after scaling B down by a power of two, then squared back up;
    this path needs float mode.
    """
    if not B.is_homogeneous(2):
        raise ValueError("exp_bivector needs a pure bivector")
    if method not in ("auto", "series", "closed"):
        raise ValueError(f"unknown method {method!r}")
    sq = B * B
    simple = sq.is_homogeneous(0)
    if not simple and not B.exact:
        g4 = grade(sq, 4).norm()
        simple = g4 <= 1e-12 * max(1.0, B.norm() ** 2)
    if method == "series" or (method == "auto" and not simple):
        if B.exact:
            raise ValueError("exact mode needs a simple bivector (B*B scalar)")
        return _exp_series(B, terms)
    if not simple:
        raise ValueError("closed form needs B*B to be a scalar")
    s = sq.scalar_part()
    if s == 0:
        return B + 1
    Bf = B.to_float() if B.exact else B
    s = float(s)
    if s > 0:
        r = math.sqrt(s)
        return Bf * (math.sinh(r) / r) + math.cosh(r)
    r = math.sqrt(-s)
    return Bf * (math.sin(r) / r) + math.cos(r)


def _exp_series(B: Multivector, terms: int) -> Multivector:
    if terms < 1:
        raise ValueError("terms must be positive")
    n = B.norm()
    k = max(0, math.ceil(math.log2(n / 0.5))) if n > 0.5 else 0
    Bs = B / float(2 ** k)
    out = Multivector.scalar(B.sig, 1.0, exact=False)
    term = out
    for j in range(1, terms):
        term = term * Bs / float(j)
        out = out + term
    for _ in range(k):
        out = out * out
    return out
