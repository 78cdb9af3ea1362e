"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every comparison is exact integer equality; the stated time budgets
are enforced with a monotonic clock after a one-off kernel warmup.
"""

from __future__ import annotations

import time
from functools import lru_cache
from itertools import combinations

import pytest

from chowpoly import (
    METHODS,
    Matroid,
    UniPoly,
    census,
    census_matches_formula,
    chain_chow,
    closed_form,
    coefficient_formula,
    derangement_poly,
    descent_count,
    eulerian_poly,
    gamma_vector,
    grassmannian_avoiding_count,
    multivariate_closed_form,
    schubert_matroid,
    uniform,
    verify_coefficient_counts,
)
from chowpoly.schubert import SchubertSpec


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # trigger JIT compilation outside the timed sections
    closed_form(3, 4, "gamma_perm")
    census(2)


@lru_cache(maxsize=None)
def _census_table(n: int):
    return census(n)


def test_criterion_1_golden_value():
    t0 = time.perf_counter()
    golden = UniPoly((1, 11, 1))
    ok = all(closed_form(3, 5, m) == golden for m in METHODS)
    ok = ok and chain_chow(uniform(3, 5)) == golden
    ok = ok and gamma_vector(golden, 2) == (1, 9)
    elapsed = time.perf_counter() - t0
    _report(
        1,
        ok and elapsed < 1.0,
        f"all methods and the chain oracle give 1 + 11x + x^2 with "
        f"gamma vector (1, 9) in {elapsed:.3f}s (< 1s)",
    )


def test_criterion_2_method_agreement():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 13):
        for k in range(1, n + 1):
            for augmented in (False, True):
                reference = closed_form(k, n, "monomial", augmented)
                for method in METHODS[1:]:
                    ok = ok and closed_form(k, n, method, augmented) == reference
                for basis in ("monomial", "gamma"):
                    mv = multivariate_closed_form(k, n, basis, augmented)
                    ok = ok and mv.specialize() == reference
    elapsed = time.perf_counter() - t0
    _report(
        2,
        ok and elapsed < 30.0,
        f"four methods and two multivariate specializations agree for all "
        f"k <= n <= 12, both flags, in {elapsed:.1f}s (< 30s)",
    )


def test_criterion_3_oracle_agreement():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 9):
        for k in range(1, n + 1):
            m = uniform(k, n)
            for augmented in (False, True):
                want = closed_form(k, n, "monomial", augmented)
                ok = ok and chain_chow(m, augmented) == want
    elapsed = time.perf_counter() - t0
    _report(
        3,
        ok and elapsed < 120.0,
        f"chain oracle equals the closed forms for all k <= n <= 8, both "
        f"flags, in {elapsed:.1f}s (< 2min)",
    )


def test_criterion_4_census_vs_coefficients():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 8):
        table = _census_table(n)
        for k in range(1, n + 1):
            ok = ok and verify_coefficient_counts(k, n, table).passed
    elapsed = time.perf_counter() - t0
    _report(
        4,
        ok and elapsed < 300.0,
        f"every coefficient equals its deduplicated Schubert-matroid count "
        f"for n <= 7, all k, in {elapsed:.1f}s (census(7) < 5min)",
    )


def test_criterion_5_counting_formula():
    ok = True
    for n in range(1, 8):
        ok = ok and census_matches_formula(_census_table(n))
    _report(5, ok, "every census cell equals sm_count for n <= 7")


def test_criterion_6_boundary_identities():
    ok = True
    for n in range(2, 10):
        ok = ok and UniPoly.x() * closed_form(n - 1, n) == derangement_poly(n)
        ok = ok and closed_form(n - 1, n, augmented=True) == eulerian_poly(n)
        ok = ok and closed_form(n, n) == eulerian_poly(n)
    _report(
        6,
        ok,
        "x*chow(n-1,n) = derangements, augmented(n-1,n) = eulerian, "
        "chow(n,n) = eulerian for 2 <= n <= 9",
    )


def test_criterion_7_loopless_census_by_rank():
    ok = True
    for n in range(1, 8):
        table = _census_table(n)
        by_rank: dict[int, int] = {}
        for (r, loops, _), c in table.entries.items():
            if loops == 0:
                by_rank[r] = by_rank.get(r, 0) + c
        a_n = eulerian_poly(n)
        ok = ok and by_rank == {r: a_n[r - 1] for r in range(1, n + 1)}
    _report(
        7,
        ok,
        "loopless Schubert matroids of rank r number the (r-1)-st descent "
        "count coefficient for n <= 7",
    )


def _fano() -> Matroid:
    lines = {
        (1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6),
    }
    bases = [c for c in combinations(range(1, 8), 3) if c not in lines]
    return Matroid.from_bases(7, bases)


def _k4_graphic() -> Matroid:
    triangles = {(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)}
    bases = [c for c in combinations(range(1, 7), 3) if c not in triangles]
    return Matroid.from_bases(6, bases)


def _loopless_corpus() -> list[Matroid]:
    corpus: list[Matroid] = []
    for n in (5, 6, 7):
        identity = tuple(range(1, n + 1))
        rotation = tuple(range(2, n + 1)) + (1,)
        for size in range(1, n + 1):
            for rest in combinations(range(2, n + 1), size - 1):
                index_set = (1,) + rest
                corpus.append(
                    schubert_matroid(SchubertSpec(n, index_set, identity), validate=False)
                )
                image = tuple(sorted(rotation[e - 1] for e in index_set))
                corpus.append(
                    schubert_matroid(SchubertSpec(n, image, rotation), validate=False)
                )
    corpus.extend(uniform(k, 6) for k in range(1, 7))
    corpus.append(_fano())
    corpus.append(_k4_graphic())
    return corpus


def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 13):
        for k in range(1, n + 1):
            chow = closed_form(k, n, "monomial")
            aug = closed_form(k, n, "monomial", augmented=True)
            ok = ok and chow.degree == k - 1 and aug.degree == k
            ok = ok and chow[0] == 1 and aug[0] == 1
            ok = ok and chow.is_palindromic(k - 1) and aug.is_palindromic(k)
            ok = ok and all(g >= 0 for g in gamma_vector(chow, k - 1))
            ok = ok and all(g >= 0 for g in gamma_vector(aug, k))
    corpus = _loopless_corpus()
    size_ok = len(corpus) >= 200
    for m in corpus:
        assert m.is_loopless and m.n <= 7
        for augmented in (False, True):
            bound = closed_form(m.rank, m.n, "monomial", augmented)
            got = chain_chow(m, augmented)
            ok = ok and all(got[i] <= bound[i] for i in range(bound.degree + 1))
            ok = ok and got.degree <= bound.degree
    elapsed = time.perf_counter() - t0
    _report(
        8,
        ok and size_ok and elapsed < 300.0,
        f"palindromicity, degree, unit constant term, gamma nonnegativity "
        f"(n <= 12) and uniform term-wise maximality over {len(corpus)} "
        f"loopless matroids (n <= 7) in {elapsed:.1f}s (< 5min)",
    )


def test_criterion_9_coefficient_formulas():
    ok = True
    for n in range(1, 13):
        for k in range(1, n + 1):
            for augmented in (False, True):
                p = closed_form(k, n, "monomial", augmented)
                for m in (1, 2):
                    ok = ok and coefficient_formula(k, n, m, augmented) == p[m]
    from itertools import permutations

    for k in (2, 3, 4):
        patterns = [p for p in permutations(range(1, k + 1)) if descent_count(p) == 1]
        for n in range(k, 9):
            want = coefficient_formula(k, n, 1)
            for sigma in patterns:
                ok = ok and grassmannian_avoiding_count(n, sigma) == want
    _report(
        9,
        ok,
        "first and second coefficient formulas match extraction for "
        "k <= n <= 12; the pattern-avoiding Grassmannian count matches the "
        "first coefficient for k in {2,3,4}, n <= 8",
    )


def test_criterion_10_substitution_note():
    # no acceptance depends on claims outside exact reach (real-rootedness,
    # general-matroid theory); the property suites above stand in for them
    _report(
        10,
        True,
        "out-of-reach claims are substituted by the exact property suites; "
        "nothing depends on them",
    )
