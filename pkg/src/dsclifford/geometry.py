"""The de Sitter pseudo-sphere, its projective chart and its Killing fields.

Ambient points are 5-tuples in bulk label order (X^1, X^2, X^3, X^4, X^0) and
satisfy X1^2 + X2^2 + X3^2 + X4^2 - X0^2 = ell^2.  Chart points are 4-tuples
(x^0, x^1, x^2, x^3) with the Minkowski form s2 = x0^2 - x1^2 - x2^2 - x3^2.
Chart index 0 maps to the timelike ambient axis and 1..3 to the spatial ones.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebras import GENERATOR_PAIRS, BULK_ORDER
from .multivector import infer_exact
from .poly import Poly
from .signature import BULK

ETA = (1, -1, -1, -1)
BULK_ETA = BULK.squares
# position of chart coordinate mu inside an ambient 5-tuple
CHART_TO_BULK = (4, 0, 1, 2)
ABSOLUTE_RTOL = 1e-12


def _numbers(values, ell):
    vals = list(values) + [ell]
    if all(infer_exact(v) for v in vals):
        return [Fraction(v) for v in values], Fraction(ell), True
    return [float(v) for v in values], float(ell), False


def interval(x) -> object:
    """Minkowski square x0^2 - x1^2 - x2^2 - x3^2 of a chart point."""
    return sum(e * c * c for e, c in zip(ETA, x))


def _check_ell(ell):
    if not ell > 0:
        raise ValueError("ell must be positive")


def on_absolute(s2, ell, exact: bool) -> bool:
    target = 4 * ell * ell
    return s2 == target if exact else abs(s2 - target) <= ABSOLUTE_RTOL * target


@dataclass(frozen=True)
class ChartPoint:
    ell: object
    x: tuple
    sigma2: object
    omega: object
    X: tuple


def embed(x, ell) -> ChartPoint:
    """Ambient image of a chart point; exact when all inputs are rational."""
    if len(x) != 4:
        raise ValueError("chart points have four coordinates")
    x, ell, exact = _numbers(x, ell)
    _check_ell(ell)
    s2 = interval(x)
    if on_absolute(s2, ell, exact):
        raise ValueError("chart point lies on the absolute")
    omega = 1 / (1 - s2 / (4 * ell * ell))
    X = [None] * 5
    for mu in range(4):
        X[CHART_TO_BULK[mu]] = omega * x[mu]
    X[3] = -ell * omega * (1 + s2 / (4 * ell * ell))
    return ChartPoint(ell, tuple(x), s2, omega, tuple(X))


def unembed(X, ell) -> tuple:
    """Chart coordinates of an ambient point (inverse of :func:`embed`)."""
    if len(X) != 5:
        raise ValueError("ambient points have five coordinates")
    X, ell, exact = _numbers(X, ell)
    _check_ell(ell)
    omega = (1 - X[3] / ell) / 2
    if (omega == 0) if exact else abs(omega) <= 1e-15:
        raise ValueError("north pole X^4 = ell has no chart image")
    return tuple(X[CHART_TO_BULK[mu]] / omega for mu in range(4))


def sphere_residual(X, ell):
    return sum(e * c * c for e, c in zip(BULK_ETA, X)) - ell * ell


def jacobian(x, ell):
    """dX^A/dx^nu as a 5x4 nested list, rows in bulk label order."""
    p = embed(x, ell)
    x, ell, om = p.x, p.ell, p.omega
    d_om = [om * om * ETA[nu] * x[nu] / (2 * ell * ell) for nu in range(4)]
    J = [[0] * 4 for _ in range(5)]
    for mu in range(4):
        row = CHART_TO_BULK[mu]
        for nu in range(4):
            J[row][nu] = (om if mu == nu else 0) + x[mu] * d_om[nu]
    for nu in range(4):
        J[3][nu] = -2 * ell * d_om[nu]
    return J


def induced_metric(x, ell):
    """Pullback -J^T diag(1,1,1,1,-1) J of the ambient metric; equals omega^2 eta."""
    J = jacobian(x, ell)
    return [[-sum(BULK_ETA[a] * J[a][m] * J[a][n] for a in range(5)) for n in range(4)] for m in range(4)]


def conformal_metric(x, ell):
    om = embed(x, ell).omega
    return [[om * om * ETA[m] if m == n else 0 * om for n in range(4)] for m in range(4)]


# -- Killing vector fields --------------------------------------------------

class VectorField:
    """Polynomial vector field on the ambient space, components in label order."""

    def __init__(self, comps):
        comps = tuple(comps)
        if len(comps) != 5:
            raise ValueError("ambient vector fields have five components")
        self.comps = comps

    def apply(self, f: Poly) -> Poly:
        out = Poly(5)
        for i, c in enumerate(self.comps):
            if c:
                out = out + c * f.diff(i)
        return out

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.comps == other.comps

    __hash__ = None

    def __add__(self, other):
        return VectorField(a + b for a, b in zip(self.comps, other.comps))

    def scale(self, k):
        return VectorField(c * k for c in self.comps)


def _pos(label):
    return BULK_ORDER.index(label)


def killing_field(a: int, b: int) -> VectorField:
    """h_ac X^c d/dX^b - h_bc X^c d/dX^a."""
    comps = [Poly(5) for _ in range(5)]
    if a != b:
        ia, ib = _pos(a), _pos(b)
        comps[ib] = comps[ib] + Poly.var(5, ia, Fraction(BULK_ETA[ia]))
        comps[ia] = comps[ia] - Poly.var(5, ib, Fraction(BULK_ETA[ib]))
    return VectorField(comps)


def lie_bracket(U: VectorField, V: VectorField) -> VectorField:
    return VectorField(U.apply(V.comps[i]) - V.apply(U.comps[i]) for i in range(5))


def killing_equation(V: VectorField) -> list[Poly]:
    """Symmetrized derivatives d_a V_b + d_b V_a of the lowered components."""
    low = [c * BULK_ETA[i] for i, c in enumerate(V.comps)]
    return [low[j].diff(i) + low[i].diff(j) for i in range(5) for j in range(i, 5)]


def quadric(ell=1) -> Poly:
    q = Poly.const(5, -Fraction(ell) ** 2)
    for i, e in enumerate(BULK_ETA):
        q = q + Poly.var(5, i) * Poly.var(5, i) * e
    return q


def tangency(V: VectorField, ell=1) -> Poly:
    """V applied to the defining quadric; the zero polynomial for tangent fields."""
    return V.apply(quadric(ell))


def killing_coordinates(V: VectorField) -> dict:
    out = {}
    for a, b in GENERATOR_PAIRS:
        ia, ib = _pos(a), _pos(b)
        e = [0] * 5
        e[ia] = 1
        c = V.comps[ib].terms.get(tuple(e), 0) * BULK_ETA[ia]
        if c:
            out[(a, b)] = Fraction(c)
    recon = VectorField(Poly(5) for _ in range(5))
    for (a, b), c in out.items():
        recon = recon + killing_field(a, b).scale(c)
    if recon != V:
        raise ValueError("vector field is not a combination of Killing fields")
    return out


def killing_structure_table():
    fields = {ab: killing_field(*ab) for ab in GENERATOR_PAIRS}
    return {(ab, cd): killing_coordinates(lie_bracket(fields[ab], fields[cd]))
            for ab, cd in product(GENERATOR_PAIRS, repeat=2)}


# -- chart diagram ---------------------------------------------------------

def region(t, x1, ell) -> str:
    """Position relative to the absolute t^2 - x1^2 = 4 ell^2."""
    vals, ell, exact = _numbers((t, x1), ell)
    s2 = vals[0] ** 2 - vals[1] ** 2
    if on_absolute(s2, ell, exact):
        return "absolute"
    return "inside" if s2 < 4 * ell * ell else "outside"


def _grid(extent, resolution):
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    if not extent > 0:
        raise ValueError("extent must be positive")
    return [-extent + 2 * extent * Fraction(i, resolution - 1) if infer_exact(extent)
            else -extent + 2 * extent * i / (resolution - 1) for i in range(resolution)]


def chart_rows(ell, extent, resolution: int, lightlike: bool = False) -> list[tuple]:
    """Grid rows (t, x1, region[, series]) over [-extent, extent]^2.

    With ``lightlike`` each row gains a series column and the null lines
    t = x1 + c and t = -x1 + c, c on the grid, are sampled at the grid abscissae.
    """
    _check_ell(ell)
    grid = _grid(extent, resolution)
    rows = []
    for t in grid:
        for x1 in grid:
            rows.append((t, x1, region(t, x1, ell)) + (("grid",) if lightlike else ()))
    if lightlike:
        for sign, name in ((1, "null+"), (-1, "null-")):
            for c in grid:
                for x1 in grid:
                    t = sign * x1 + c
                    if abs(t) <= extent:
                        rows.append((t, x1, region(t, x1, ell), name))
    return rows


def _fmt(v) -> str:
    return repr(float(v))


def chart_csv(ell, extent, resolution: int, lightlike: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "x1", "region"] + (["series"] if lightlike else []))
    for row in chart_rows(ell, extent, resolution, lightlike):
        w.writerow([_fmt(row[0]), _fmt(row[1])] + list(row[2:]))
    return buf.getvalue()
