"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the verdicts are
printed in the "acceptance criteria" section of the terminal summary.
Targets marked ``extended`` are non-gating and can be skipped with
``-m "not extended"``.
"""

import random

import pytest

from bruhatlab.arrangement import (
    coxeter_uniformity,
    distance_poly,
    inversion_arrangement,
    region_poincare,
    verify_special_F4,
    verify_special_bn,
)
from bruhatlab.bruhat import bruhat_leq, lower_set, poincare, subword_products
from bruhatlab.cli import verify_main
from bruhatlab.known_lists import REFERENCE_LISTS
from bruhatlab.mlattice import (
    mn_palindromic,
    mn_palindromic_closed_form,
    verify_iso_bn,
    verify_iso_dn,
)
from bruhatlab.parabolic import (
    Tag,
    check_factorization,
    classify_quotient_element,
    complement,
    find_bp_decomposition,
    get_quotient,
    match_palindromic_list,
    right_descent_property,
)
from bruhatlab.poly import IntPolynomial
from bruhatlab.rootsystem import parse_group
from bruhatlab.weyl import (
    canonical_word,
    enumerate_group,
    from_word,
    inverse,
    support,
)
from oracles import type_a_region_poly

MAIN_GROUPS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"]
FACTOR_GROUPS = ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2", "F4"]
CLASSIFY_GROUPS = ["A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "G2", "F4", "E6"]
SMALL_GROUPS = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "G2", "F4"]


# AC1

def test_ac1_palindromic_iff_equal(report_criterion):
    bad, smooth, total = [], 0, 0
    for g in MAIN_GROUPS:
        rep = verify_main(parse_group(g), threads=1)
        total += rep.elements
        smooth += rep.rationally_smooth
        if not rep.ok:
            bad.append((g, rep.counterexamples[:3]))
    report_criterion("AC1 palindromic P_w iff P_w = R_w", not bad,
                     f"{total} elements, {smooth} rationally smooth, exceptions: {bad or 'none'}")
    assert not bad


@pytest.mark.extended
@pytest.mark.parametrize("group", ["A5", "D5"])
def test_ac1_extended(group, report_criterion):
    rep = verify_main(parse_group(group), threads=1)
    report_criterion(f"AC1 extended {group}", rep.ok,
                     f"{rep.elements} elements, {rep.rationally_smooth} rationally smooth")
    assert rep.ok


# AC2

def test_ac2_3412_pair(report_criterion):
    rs = parse_group("A3")
    w = from_word(rs, [2, 1, 3, 2])
    P, R = poincare(w), region_poincare(w)
    P_oracle = IntPolynomial.from_degrees(x.length for x in subword_products(rs, [2, 1, 3, 2]))
    R_oracle = IntPolynomial(type_a_region_poly(w))
    checks = {
        "P": P == IntPolynomial([1, 3, 5, 4, 1]) == P_oracle,
        "R": R == IntPolynomial([1, 4, 4, 4, 1]) == R_oracle,
        "14 acyclic orientations": R_oracle(1) == 14,
    }
    report_criterion("AC2 3412 pair", all(checks.values()), f"P={P}, R={R}")
    assert all(checks.values()), checks


# AC3

def _check_reference(group, node, report_criterion):
    rs = parse_group(group)
    m = match_palindromic_list(rs, complement(rs, [node]), REFERENCE_LISTS[(group, node)])
    report_criterion(f"AC3 {group} remove s_{node}", m.side is not None,
                     f"{len(REFERENCE_LISTS[(group, node)])} words, side {m.side}")
    assert m.side is not None, (m.missing, m.extra)


@pytest.mark.parametrize("group,node", [("F4", 4), ("F4", 1), ("E8", 8), ("E8", 1)])
def test_ac3_reference_lists(group, node, report_criterion):
    _check_reference(group, node, report_criterion)


def test_ac3_f4_mirror():
    mirror = {tuple(5 - i for i in w) for w in REFERENCE_LISTS[("F4", 4)]}
    assert mirror == set(REFERENCE_LISTS[("F4", 1)])


@pytest.mark.extended
def test_ac3_e8_remove_2(report_criterion):
    _check_reference("E8", 2, report_criterion)


# AC4

def _leaf_quotients(group):
    rs = parse_group(group)
    return [(rs, leaf) for leaf in rs.leaves()]


def _classification_mismatches(rs, leaf, side):
    """Compare the tags with brute-force Bruhat comparisons in the ambient group."""
    J = complement(rs, [leaf])
    elems = get_quotient(rs, J, side).elements
    last = len(elems) - 1
    mismatches = []
    for n, v in enumerate(elems):
        below = [x for x in elems if bruhat_leq(x, v)]
        counts = [0] * (v.length + 1)
        for x in below:
            counts[x.length] += 1
        palindromic = counts == counts[::-1]
        tag = classify_quotient_element(v, J, side, check=False)
        ok = (tag is not Tag.NOT_PALINDROMIC) == palindromic
        I = support(v)
        embedded = [x for x in elems if support(x) <= I]
        if tag is Tag.TRIVIAL:
            ok &= n in (0, last)
        elif tag is Tag.LOCALLY_LONGEST:
            ok &= rs.is_connected(I) and all(bruhat_leq(x, v) for x in embedded)
        elif tag is Tag.LOCAL_CHAIN:
            ok &= all(bruhat_leq(x, y) or bruhat_leq(y, x) for x in embedded for y in embedded)
        if not ok:
            mismatches.append((rs.name, leaf, side, canonical_word(v), str(tag), palindromic))
    return mismatches


@pytest.mark.parametrize("group", CLASSIFY_GROUPS)
def test_ac4_classification(group, report_criterion):
    bad = []
    for rs, leaf in _leaf_quotients(group):
        for side in ("rightfree", "leftfree"):
            bad += _classification_mismatches(rs, leaf, side)
    report_criterion(f"AC4 classification {group}", not bad, f"mismatches: {bad or 'none'}")
    assert not bad


# AC5

def test_ac5_mlattice_suite(report_criterion):
    checks = {}
    for n in range(1, 9):
        checks[f"palindromic M({n})"] = mn_palindromic(n) == mn_palindromic_closed_form(n)
    for n in (2, 3, 4, 5):
        checks[f"B{n} ~ M({n})"] = verify_iso_bn(n)
    for n in (4, 5):
        for removed in (0, 1):
            checks[f"D{n} node {removed} ~ M({n - 1})"] = verify_iso_dn(n, removed)
    for n in range(2, 7):
        rs = parse_group(f"B{n}")
        q = get_quotient(rs, complement(rs, [n - 1]))
        checks[f"B{n}/B{n - 1} chain"] = len(q) == 2 * n and q.is_chain()
    d5 = parse_group("D5")
    checks["D5/D4 ranks"] = tuple(get_quotient(d5, complement(d5, [4])).rank_sizes()) == (
        1, 1, 1, 1, 2, 1, 1, 1, 1)
    failed = [k for k, v in checks.items() if not v]
    report_criterion("AC5 M(n) suite", not failed, f"{len(checks)} checks, failed: {failed or 'none'}")
    assert not failed


# AC6

def test_ac6_factorization(report_criterion):
    bad, count = [], 0
    for g in FACTOR_GROUPS:
        for w in enumerate_group(parse_group(g)):
            if not poincare(w).is_palindromic():
                continue
            count += 1
            try:
                find_bp_decomposition(w)
                ok = check_factorization(w) and right_descent_property(w)
            except Exception as exc:  # a raised invariant counts as a failure
                bad.append((g, canonical_word(w), repr(exc)))
                continue
            if not ok:
                bad.append((g, canonical_word(w)))
    report_criterion("AC6 factorization", not bad,
                     f"{count} rationally smooth elements, failures: {bad or 'none'}")
    assert not bad


# AC7

def test_ac7_special_cases(report_criterion):
    bn = {n: verify_special_bn(n) for n in (2, 3, 4)}
    f4 = verify_special_F4()
    quartic = IntPolynomial([1, 1, 1, 1, 1])
    f4_ok = f4.uniform and f4.R_ratio == quartic and f4.P_w == f4.R_w
    ok = f4_ok and all(r.ok for r in bn.values())
    displayed = ", ".join(f"{k}: {'holds' if v else 'fails'}" for k, v in f4.displayed_factors.items())
    report_criterion("AC7 special cases", ok, f"B2-B4 ok, F4 ok={f4_ok}; {displayed}")
    assert ok


# AC8

@pytest.mark.parametrize("group", ["A3", "B3"])
def test_ac8_uniformity(group, report_criterion):
    rs = parse_group(group)
    results = {lab: coxeter_uniformity(rs, complement(rs, [lab])) for lab in rs.labels}
    ok = all(u and m for u, m in results.values())
    report_criterion(f"AC8 uniformity {group}", ok, f"{len(results)} maximal J")
    assert ok


# AC9

def test_ac9_duality(report_criterion):
    bad = []
    for g in SMALL_GROUPS:
        for w in enumerate_group(parse_group(g)):
            wi = inverse(w)
            if poincare(w) != poincare(wi) or region_poincare(w) != region_poincare(wi):
                bad.append((g, canonical_word(w)))
    report_criterion("AC9 duality", not bad, f"groups {', '.join(SMALL_GROUPS)}")
    assert not bad


def test_ac9_subword_oracle(report_criterion):
    bad, count = [], 0
    for g in ("A3", "B3", "G2"):
        rs = parse_group(g)
        for w in enumerate_group(rs):
            if w.length > 8:
                continue
            count += 1
            if lower_set(w) != subword_products(rs, canonical_word(w)):
                bad.append((g, canonical_word(w)))
    report_criterion("AC9 intervals vs subwords", not bad, f"{count} elements")
    assert not bad


def test_ac9_distance_palindromic(report_criterion):
    rng = random.Random(20240611)
    groups = [parse_group(g) for g in MAIN_GROUPS]
    bad = []
    for _ in range(200):
        rs = rng.choice(groups)
        w = rng.choice(enumerate_group(rs))
        if not distance_poly(inversion_arrangement(w)).is_palindromic():
            bad.append((rs.name, canonical_word(w)))
    report_criterion("AC9 distance polynomial palindromic", not bad, "200 sampled elements")
    assert not bad
