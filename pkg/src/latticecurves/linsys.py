"""Linear systems of Laurent polynomials with prescribed vanishing at (1, 1).

L(poly, m) is the space of Laurent polynomials supported on the lattice
points of the polygon vanishing to order at least m at the identity of the
torus.  Conditions are encoded with falling-factorial rows, which stay exact
for negative exponents.  Kernels are computed exactly: small systems by
rational elimination, large ones by elimination modulo several word-sized
primes, Chinese remaindering, rational reconstruction and a final exact
verification of M x = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import RangeError
from .laurent import LaurentPolynomial
from .polygon import LatticePolygon

_FRACTION_CUTOFF = 60  # max(rows, cols) above which the modular path is used
_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
           2147483549, 2147483543, 2147483497, 2147483489, 2147483477)


def falling_factorial(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


def condition_matrix(points, m: int) -> list[list[int]]:
    """Rows indexed by (a, b), a + b <= m - 1; columns by lattice points."""
    rows = []
    for a in range(m):
        for b in range(m - a):
            rows.append([falling_factorial(p, a) * falling_factorial(q, b)
                         for p, q in points])
    return rows


@dataclass(frozen=True)
class LinearSystem:
    """Exact kernel of the vanishing conditions, with a normalized basis."""

    polygon: LatticePolygon
    order: int
    points: tuple[tuple[int, int], ...]
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def total(self) -> int:
        return len(self.points)

    @property
    def conditions(self) -> int:
        return self.order * (self.order + 1) // 2

    def members(self) -> tuple[LaurentPolynomial, ...]:
        return tuple(
            LaurentPolynomial({e: c for e, c in zip(self.points, vec) if c})
            for vec in self.basis
        )

    def is_empty(self) -> bool:
        return not self.basis


def is_expected(poly: LatticePolygon, m: int) -> bool:
    """True when the point count alone forces a nonzero section."""
    return poly.lattice_counts()[0] > m * (m + 1) // 2


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [r[:] for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _kernel_from_rref(rref, pivots, ncols) -> list[list[Fraction]]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rref[r][f]
        basis.append(vec)
    return basis


def _mod_rank_and_kernel(mat: np.ndarray, p: int):
    """RREF of an int matrix mod p via numpy; returns (pivots, rref rows)."""
    m = np.mod(mat.astype(object), p).astype(np.int64)
    rows, cols = m.shape
    r = 0
    pivots = []
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots, m[:r]


def _rational_reconstruct(a: int, mod: int) -> Fraction | None:
    """Lift a mod `mod` to n/d with |n|, d <= sqrt(mod / 2)."""
    bound = int((mod // 2) ** 0.5)
    r0, r1 = mod, a % mod
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _modular_kernel(mat: list[list[int]]) -> list[list[Fraction]]:
    arr = np.array(mat, dtype=object)
    ncols = arr.shape[1]
    crt_mod = 1
    crt_rref = None
    pivots_ref = None
    for p in _PRIMES:
        pivots, rref = _mod_rank_and_kernel(arr, p)
        if pivots_ref is None or len(pivots) > len(pivots_ref):
            # an earlier prime was unlucky (rank dropped): restart
            pivots_ref = pivots
            crt_mod = 1
            crt_rref = np.zeros_like(rref, dtype=object)
        if pivots != pivots_ref:
            continue  # bad prime
        rref_obj = rref.astype(object)
        if crt_mod == 1:
            crt_rref = rref_obj % p
            crt_mod = p
        else:
            inv = pow(crt_mod % p, p - 2, p)
            delta = ((rref_obj - crt_rref) * inv) % p
            crt_rref = crt_rref + crt_mod * delta
            crt_mod *= p
        # try rational reconstruction of the full RREF
        flat = crt_rref.ravel()
        rec = []
        ok = True
        for val in flat:
            f = _rational_reconstruct(int(val), crt_mod)
            if f is None:
                ok = False
                break
            rec.append(f)
        if not ok:
            continue
        rr = [rec[i * ncols:(i + 1) * ncols] for i in range(len(pivots_ref))]
        cand = _kernel_from_rref(rr, pivots_ref, ncols)
        if _verify_kernel(mat, cand, len(pivots_ref)):
            return cand
    raise ArithmeticError("modular kernel: reconstruction failed for all primes")


def _verify_kernel(mat, basis, rank) -> bool:
    ncols = len(mat[0]) if mat else 0
    if len(basis) != ncols - rank:
        return False
    for vec in basis:
        for row in mat:
            if sum(r * v for r, v in zip(row, vec) if v):
                return False
    return True


def _normalize_basis(basis: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """RREF the basis, clear denominators, strip content, pivot positive."""
    if not basis:
        return ()
    rref, _ = _rref([list(v) for v in basis])
    out = []
    for row in rref:
        den = 1
        for c in row:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [c * den for c in row]
        g = 0
        for c in ints:
            g = gcd(g, abs(c.numerator))
        ints = [c / g for c in ints]
        lead = next(c for c in ints if c)
        if lead < 0:
            ints = [-c for c in ints]
        out.append(tuple(ints))
    return tuple(out)


@lru_cache(maxsize=256)
def compute_system(poly: LatticePolygon, m: int) -> LinearSystem:
    """Exact basis of L(poly, m); m >= 1."""
    if m < 1:
        raise RangeError("vanishing order must be at least 1")
    points = tuple(poly.lattice_points())
    mat = condition_matrix(points, m)
    n = len(points)
    if not mat:
        basis = [[Fraction(1) if j == i else Fraction(0) for j in range(n)]
                 for i in range(n)]
    elif max(len(mat), n) <= _FRACTION_CUTOFF:
        frac = [[Fraction(x) for x in row] for row in mat]
        rref, pivots = _rref(frac)
        basis = _kernel_from_rref(rref, pivots, n)
    else:
        basis = _modular_kernel(mat)
    return LinearSystem(poly, m, points, _normalize_basis(basis))
