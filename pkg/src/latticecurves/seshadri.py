"""Seshadri-constant bounds at the general point of a polarized toric surface.

Everything is an exact rational: the lattice width gives an upper bound, a
unique multiple point gives vol/m, and two instantiated lower bounds (a
width-length segment, and the fiber bound for the triangle family with
vertices (0,0),(m,1),(1,m)) can pin the constant exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DegeneratePolygon,
    EmptyList,
    EmptySystem,
    PreconditionFailure,
    RangeError,
)
from .linsys import compute_system
from .polygon import LatticePolygon


@dataclass(frozen=True)
class SeshadriEstimate:
    lower: Fraction
    upper: Fraction
    exact: Fraction | None
    certificates: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "exact": None if self.exact is None else str(self.exact),
            "certificates": list(self.certificates),
        }


def width_upper_bound(poly: LatticePolygon) -> int:
    if poly.volume <= 0:
        raise DegeneratePolygon("width bound needs a two-dimensional polygon")
    return poly.lattice_width()[0]


def rationality_certificates(poly: LatticePolygon, m: int | None = None) -> list[str]:
    """Sufficient conditions for the Seshadri constant to be rational."""
    certs = []
    lw = width_upper_bound(poly)
    if poly.volume > lw * lw:
        certs.append("InteriorClassRational")
    if m is not None:
        system = compute_system(poly, m)
        if system.is_empty():
            raise EmptySystem(f"no curve with multiplicity {m} on this polygon")
        if poly.volume <= m * m:
            certs.append("VolOverM")
    return certs


def segment_equality(poly: LatticePolygon) -> Fraction | None:
    """lw(Δ) as the exact constant, when Δ contains a width-length segment."""
    if poly.volume <= 0:
        raise DegeneratePolygon("needs a two-dimensional polygon")
    lw = poly.lattice_width()[0]
    pts = sorted(poly.lattice_points())
    # a segment of lattice length lw between lattice points of the polygon
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            dx, dy = q[0] - p[0], q[1] - p[1]
            if gcd(abs(dx), abs(dy)) == lw:
                return Fraction(lw)
    return None


def ito_family_i_lower(m: int) -> Fraction:
    """Fiber-degeneration lower bound m − 1/m for the (0,0),(m,1),(1,m) triangle."""
    if m < 2:
        raise RangeError("needs m >= 2")
    return m - Fraction(1, m)


def component_minimum(components) -> Fraction:
    """min of degree/multiplicity over curve components through the point."""
    components = list(components)
    if not components:
        raise EmptyList("no components supplied")
    best = None
    for h, mult in components:
        mult = Fraction(mult)
        if mult <= 0:
            raise RangeError("multiplicities must be positive")
        val = Fraction(h) / mult
        if best is None or val < best:
            best = val
    return best


def _is_family_i(poly: LatticePolygon, m: int) -> bool:
    from .polygon import equivalent, polygon
    if m < 2:
        return False
    return equivalent(poly, polygon((0, 0), (m, 1), (1, m)))


def estimate(poly: LatticePolygon, m: int, irreducible: bool = False) -> SeshadriEstimate:
    """Bound the constant using a curve of multiplicity m on the polygon.

    Requires vol ≤ m², m ≤ lw and a nonempty system; the upper bound is
    vol/m, exact when the system member is irreducible or when one of the
    instantiated lower bounds meets it.
    """
    vol = poly.volume
    lw = width_upper_bound(poly)
    if vol > m * m:
        raise PreconditionFailure("needs vol <= m^2")
    if m > lw:
        raise PreconditionFailure("needs m <= lattice width")
    system = compute_system(poly, m)
    if system.is_empty():
        raise PreconditionFailure("needs a nonempty system at order m")
    upper = Fraction(vol, m)
    certs = ["VolOverM"]
    lower = Fraction(0)
    exact = None
    seg = segment_equality(poly)
    if seg is not None and seg <= upper:
        lower = max(lower, seg)
        certs.append("SegmentEquality")
    if _is_family_i(poly, m):
        ito = ito_family_i_lower(m)
        certs.append("ItoFamilyI")
        lower = max(lower, ito)
    if irreducible:
        exact = upper
        certs.append("IrreducibleEquality")
        lower = max(lower, upper)
    elif lower == upper:
        exact = upper
    certs.append("WidthBound")
    return SeshadriEstimate(lower, upper, exact, tuple(certs))
