"""Acceptance gate: the nine headline checks, each timed against its budget.

Each test prints a single PASS/FAIL line with its runtime.
"""

import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction
from importlib import resources

import pytest

from latticecurves.classify import (
    classify_dataset,
    intersection_product,
    numeric_invariants,
)
from latticecurves.cli import ingest_polygon_dataset, load_oracle
from latticecurves.families import (
    FamilySpec,
    family_invariants,
    family_polygon,
    verify_family_end_to_end,
)
from latticecurves.laurent import LaurentPolynomial, verify_factorization
from latticecurves.linsys import compute_system
from latticecurves.polygon import (
    canonical_form,
    enumerate_polygons,
    equivalent,
    polygon,
)
from latticecurves.seshadri import estimate, segment_equality, width_upper_bound
from latticecurves.surface import rr_polygon, verify_ek, verify_ek_symbolic, verify_ledger
from latticecurves.wpp import (
    WppContext,
    best_approximation,
    ingest_table,
    intrinsic_minus_one,
    slope_compare,
)


def data_path(name):
    return str(resources.files("latticecurves.data").joinpath(name))


def report(name, budget, started):
    elapsed = time.monotonic() - started
    line = f"[{'PASS' if elapsed < budget else 'SLOW'}] {name}: {elapsed:.2f}s (budget {budget:.0f}s)"
    print(line)
    assert elapsed < budget, line


def test_criterion_1_family_invariant_table():
    t0 = time.monotonic()
    table = {"I": (-1, 0), "II": (-1, 0), "III": (-2, 0), "IV": (0, 0),
             "V": (0, 1)}
    ranges = {"I": range(2, 21), "II": range(4, 21), "III": range(8, 21, 2),
              "IV": range(4, 21), "V": range(6, 21, 2)}
    for fam, rng in ranges.items():
        for m in rng:
            spec = FamilySpec(fam, m)
            c2, g, lw = family_invariants(spec)
            assert (c2, g) == table[fam] and lw == m, (fam, m)
            poly = family_polygon(spec)
            total, b, i = poly.lattice_counts()
            assert poly.volume == 2 * i + b - 2  # vol/b recomputed from points
    report("criterion 1: family invariant table m<=20", 1.0, t0)


def test_criterion_2_classification():
    t0 = time.monotonic()
    polys = list(ingest_polygon_dataset(data_path("polygons.txt")))
    polys += enumerate_polygons()
    oracle = load_oracle(data_path("oracle_vol6.json"))
    hits = classify_dataset(polys, 4, 16, oracle)
    assert Counter(h.pair.m for h in hits) == {1: 1, 2: 1, 3: 2, 4: 7}
    displayed = polys[:11]
    for h in hits:
        assert any(equivalent(h.pair.polygon, d) for d in displayed)
    m2 = next(h for h in hits if h.pair.m == 2)
    target = LaurentPolynomial({(0, 0): 1, (2, 1): 1, (1, 2): 1, (1, 1): -3})
    assert verify_factorization(m2.polynomial, [target])
    report("criterion 2: classification m<=4 gives 1,1,2,7", 30.0, t0)


def test_criterion_3_empty_and_unexpected():
    t0 = time.monotonic()
    assert compute_system(polygon((0, 0), (1, 4), (2, 4), (4, 3)), 4).is_empty()
    remark = polygon((0, 0), (2, 5), (4, 4), (5, 2))
    system = compute_system(remark, 5)
    assert system.dimension == 1
    f = system.members()[0]
    member = LaurentPolynomial({
        (0, 0): 1, (1, 1): -8, (1, 2): 3, (2, 4): 6, (2, 5): -1, (2, 1): 3,
        (2, 2): 20, (2, 3): -18, (3, 2): -18, (3, 3): 8, (4, 2): 6,
        (4, 4): -1, (5, 2): -1})
    assert verify_factorization(f, [member])
    assert f.multiplicity_at_identity() == 5
    pair = numeric_invariants(remark, 5)
    assert pair.self_intersection == -1 and pair.arithmetic_genus == 1
    report("criterion 3: empty system and the m=5 polygon", 5.0, t0)


def test_criterion_4_reducible_and_minus_two():
    t0 = time.monotonic()
    g = LaurentPolynomial({(2, 1): 1, (1, 2): 1, (1, 1): -3, (0, 0): 1})
    h = LaurentPolynomial({(5, 3): 1, (5, 2): -2, (4, 3): -6, (4, 2): 11,
                           (3, 4): -2, (3, 3): 17, (3, 2): -24, (3, 1): -1,
                           (2, 5): -1, (2, 4): 7, (2, 3): -22, (2, 2): 21,
                           (2, 1): 5, (1, 2): 4, (1, 1): -9, (0, 0): 1})
    product = g * h
    assert product.newton_polygon() == \
        polygon((0, 0), (3, 1), (7, 3), (7, 4), (6, 5), (3, 7), (2, 5))
    assert verify_factorization(product, [g, h])
    d1 = numeric_invariants(polygon((0, 0), (2, 1), (1, 2)), 2)
    d2 = numeric_invariants(polygon((0, 0), (3, 1), (5, 2), (5, 3), (2, 5)), 5)
    assert intersection_product(d1, d2) == 0
    big = polygon((0, 0), (1, 0), (4, 1), (6, 2), (6, 3), (4, 6), (3, 5))
    system = compute_system(big, 6)
    assert system.dimension == 1
    member = system.members()[0]
    prime = polygon((0, 0), (4, 1), (6, 2), (6, 3), (4, 6), (3, 5))
    assert member.newton_polygon() == prime.translated_to_origin()
    pair = numeric_invariants(prime, 6)
    assert pair.self_intersection == -2
    report("criterion 4: reducible product and the (-2)-curve", 5.0, t0)


def test_criterion_5_families_end_to_end():
    t0 = time.monotonic()
    for fam, ms in (("I", range(2, 9)), ("II", range(4, 9)),
                    ("III", (8,)), ("IV", range(4, 9))):
        for m in ms:
            rep = verify_family_end_to_end(FamilySpec(fam, m))
            assert rep["passed"], (fam, m)
            if fam == "I":
                assert rep["ord_zero"] == (-1, m)
                assert rep["ord_infinity"] == (m, -1)
    report("criterion 5: families I-IV end to end", 120.0, t0)


def test_criterion_6_surface_ledger():
    t0 = time.monotonic()
    assert verify_ledger()["passed"]
    assert verify_ek_symbolic()["passed"]
    for k in range(-50, 51):
        if k:
            assert verify_ek(k)["passed"], k
    for k in range(1, 11):
        _, rep = rr_polygon(k)
        assert rep["passed"], k
    report("criterion 6: surface ledger, E_k and RR polygons", 10.0, t0)


def test_criterion_7_seshadri():
    t0 = time.monotonic()
    for m in range(2, 21):
        poly = polygon((0, 0), (m, 1), (1, m))
        by_irred = estimate(poly, m, irreducible=True)
        by_ito = estimate(poly, m, irreducible=False)
        want = Fraction(m * m - 1, m)
        assert by_irred.exact == want
        assert by_ito.exact == want and "ItoFamilyI" in by_ito.certificates
    for m in range(4, 21):
        quad = polygon((0, 0), (0, 1), (m, 1), (1, m))
        assert segment_equality(quad) == m == width_upper_bound(quad)
    for fam, lo in (("I", 2), ("II", 4), ("III", 8), ("IV", 4), ("V", 6)):
        for m in range(lo, 11, 2 if fam in ("III", "V") else 1):
            spec = FamilySpec(fam, m)
            poly = family_polygon(spec)
            c2, _, _ = family_invariants(spec)
            est = estimate(poly, m, irreducible=True)
            assert est.exact == Fraction(poly.volume, m) == m + Fraction(c2, m)
    report("criterion 7: Seshadri constants", 5.0, t0)


def test_criterion_8_wpp():
    t0 = time.monotonic()
    ctx = WppContext(9, 10, 13)
    entries = ingest_table(data_path("x_9_10_13.csv"))
    assert len(entries) == 52
    assert all(slope_compare(ctx, e) == "Above" for e in entries)
    best = best_approximation(ctx, entries)
    assert (best.d, best.m) == (959, 28)
    minus_one = best_approximation(ctx, entries, intrinsic_minus_one)
    assert (minus_one.d, minus_one.m) == (891, 26)
    report("criterion 8: weighted projective slopes", 1.0, t0)


def test_criterion_9_property_suites():
    t0 = time.monotonic()
    from pathlib import Path
    suite = Path(__file__).with_name("test_properties.py")
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", str(suite)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    report("criterion 9: randomized property suites", 120.0, t0)
