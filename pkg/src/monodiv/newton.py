"""Newton polygons over Z_p, residual polynomials, and the index bound.

Given a phi-adic development of a monic polynomial, the negative-slope lower
convex hull of (j, v_p(a_j)) carries the local index data: the lattice points
with x >= 1 and y >= 1 on or under the polygon bound v_p of the index, with
equality when every side's residual polynomial is separable (p-regularity).
A Dedekind-criterion test is included as an independent oracle for the
"index is prime to p" conclusion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExactRootError, MathDomainError
from .poly import (
    PhiDevelopment,
    PolyInt,
    PolyModP,
    ResidueFieldElem,
    factor_mod_p,
    fq_is_separable,
    phi_development,
    residue_elem,
    resultant,
)


@dataclass(frozen=True)
class PolygonSide:
    """One negative-slope side; degree = number of lattice segments."""

    x0: int
    y0: int
    x1: int
    y1: int
    degree: int

    @classmethod
    def make(cls, x0: int, y0: int, x1: int, y1: int) -> "PolygonSide":
        return cls(x0, y0, x1, y1, math.gcd(y0 - y1, x1 - x0))

    @property
    def slope(self) -> Fraction:
        return Fraction(self.y1 - self.y0, self.x1 - self.x0)

    def height(self, x: int) -> Fraction:
        return Fraction(self.y0) + self.slope * (x - self.x0)


@dataclass(frozen=True)
class NewtonPolygon:
    """Development points (v = None marks infinite valuation) and the
    negative-slope sides of their lower convex hull, left to right."""

    points: tuple[tuple[int, int | None], ...]
    sides: tuple[PolygonSide, ...]

    def to_json_dict(self, ind: int | None = None) -> dict:
        data = {
            "points": [[j, v] for j, v in self.points],
            "sides": [
                {
                    "x0": s.x0,
                    "y0": s.y0,
                    "x1": s.x1,
                    "y1": s.y1,
                    "slope": str(s.slope),
                    "degree": s.degree,
                }
                for s in self.sides
            ],
        }
        if ind is not None:
            data["ind_phi"] = ind
        return data


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _polygon_from_values(values: list[int | None]) -> NewtonPolygon:
    points = tuple((j, v) for j, v in enumerate(values))
    finite = [(j, v) for j, v in points if v is not None]
    hull: list[tuple[int, int]] = []
    for pt in finite:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    sides = tuple(
        PolygonSide.make(a[0], a[1], b[0], b[1])
        for a, b in zip(hull, hull[1:])
        if b[1] < a[1]
    )
    return NewtonPolygon(points=points, sides=sides)


def build_polygon(dev: PhiDevelopment, p: int) -> NewtonPolygon:
    """Negative-slope Newton polygon of a phi-development at p.

    Raises ExactRootError when a_0 = 0, i.e. phi divides the developed
    polynomial over Z (an exact root, not a polygon situation).
    """
    values = [t.min_valuation(p) for t in dev.terms]
    if not values or values[0] is None:
        raise ExactRootError("phi divides Phi exactly (a_0 = 0)")
    return _polygon_from_values(values)


def ind_phi(polygon: NewtonPolygon, deg_phi: int) -> int:
    """deg(phi) times the number of lattice points with x >= 1, y >= 1 lying
    on or under the negative-slope polygon."""
    total = 0
    for idx, side in enumerate(polygon.sides):
        start = side.x0 if idx == 0 else side.x0 + 1
        for x in range(max(start, 1), side.x1 + 1):
            h = side.height(x)
            if h >= 1:
                total += math.floor(h)
    return deg_phi * total


@dataclass(frozen=True)
class ResidualPolynomial:
    """Residual polynomial R_S of a side, over F_p[x]/(phi)."""

    side: PolygonSide
    coefficients: tuple[ResidueFieldElem, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_separable(self) -> bool:
        return fq_is_separable(self.coefficients)


def residual_polynomial(
    dev: PhiDevelopment, p: int, side: PolygonSide
) -> ResidualPolynomial:
    """R_S(y) = sum res(x0 + i*step) y^i with res the (p, phi)-reduction of
    a_j / p^(v_p(a_j)) when the point lies on the side, else 0."""
    phi_bar = dev.phi.reduce_mod(p)
    step_x = (side.x1 - side.x0) // side.degree
    step_y = (side.y1 - side.y0) // side.degree
    coeffs = []
    for i in range(side.degree + 1):
        j = side.x0 + i * step_x
        expected = side.y0 + i * step_y
        a_j = dev.terms[j] if j < len(dev.terms) else PolyInt.zero()
        v = a_j.min_valuation(p)
        if v == expected:
            coeffs.append(residue_elem(phi_bar, a_j.exact_scalar_div(p**v)))
        else:
            coeffs.append(residue_elem(phi_bar, PolyInt.zero()))
    if coeffs[0].is_zero or coeffs[-1].is_zero:
        raise MathDomainError("side does not belong to the polygon of this development")
    return ResidualPolynomial(side=side, coefficients=tuple(coeffs))


@dataclass(frozen=True)
class PhiReport:
    """Polygon data for one repeated irreducible factor."""

    phi: PolyInt
    exponent: int
    polygon: NewtonPolygon
    a0_val: int | None  # None when the lift divides Phi exactly
    ind_phi: int
    regular: bool
    residuals: tuple[ResidualPolynomial, ...]


@dataclass(frozen=True)
class IndexReport:
    """Lower bound for v_p([O_K : Z[theta]]), exact when p-regular."""

    p: int
    per_phi: tuple[PhiReport, ...]
    ind_p_lower_bound: int
    exact: bool


def index_report(
    Phi: PolyInt, p: int, lifts: list[PolyInt] | None = None
) -> IndexReport:
    """Run the first-order polygon analysis of Phi at p.

    Only repeated factors mod p (exponent >= 2) get polygons; simple factors
    provably contribute 0 and are regular.  Supplied lifts override the
    default least-non-negative lifts after validation.
    """
    if not Phi.is_monic:
        raise MathDomainError("Phi must be monic")
    if resultant(Phi, Phi.derivative()) == 0:
        raise MathDomainError("Phi must be squarefree over Q")
    factors = factor_mod_p(Phi.reduce_mod(p))
    lift_map = {}
    for L in lifts or ():
        if not L.is_monic:
            raise MathDomainError("supplied lift must be monic")
        L_bar = L.reduce_mod(p)
        if not any(fac == L_bar for fac, _ in factors):
            raise MathDomainError(
                "supplied lift is not congruent to an irreducible factor mod p"
            )
        lift_map[L_bar] = L
    reports = []
    for fac, e in factors:
        if e < 2:
            continue
        lift = lift_map.get(fac, fac.lift())
        dev = phi_development(Phi, lift)
        values = [t.min_valuation(p) for t in dev.terms]
        # a_0 = 0 means the lift divides Phi over Z; the polygon over the
        # remaining finite points still carries the index count.
        polygon = _polygon_from_values(values)
        resids = tuple(residual_polynomial(dev, p, s) for s in polygon.sides)
        reports.append(
            PhiReport(
                phi=lift,
                exponent=e,
                polygon=polygon,
                a0_val=values[0],
                ind_phi=ind_phi(polygon, lift.degree),
                regular=all(r.is_separable() for r in resids),
                residuals=resids,
            )
        )
    return IndexReport(
        p=p,
        per_phi=tuple(reports),
        ind_p_lower_bound=sum(r.ind_phi for r in reports),
        exact=all(r.regular for r in reports),
    )


def dedekind_p_maximal(Phi: PolyInt, p: int) -> bool:
    """Dedekind's criterion: is Z[theta] maximal at p?

    With Phi-bar = prod g_i^e_i, g = prod g_i and h a monic lift of
    Phi-bar / g-bar, test gcd((gh - Phi)/p, g, h) = 1 over F_p.
    """
    if not Phi.is_monic:
        raise MathDomainError("Phi must be monic")
    fbar = Phi.reduce_mod(p)
    factors = factor_mod_p(fbar)
    g_bar = PolyModP.one(p)
    for fac, _ in factors:
        g_bar = g_bar * fac
    h_bar = fbar // g_bar
    g, h = g_bar.lift(), h_bar.lift()
    F = (g * h - Phi).exact_scalar_div(p)
    F_bar = F.reduce_mod(p)
    d = g_bar.gcd(h_bar)
    if not F_bar.is_zero:
        d = d.gcd(F_bar)
    return d.degree == 0
