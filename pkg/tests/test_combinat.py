from itertools import combinations, permutations
from math import factorial

import pytest

from chowpoly import (
    SubsetPermutation,
    delta_multinomial,
    derangement_poly,
    descent_set,
    eulerian_fixed_descents,
    eulerian_poly,
    nc_subsets,
    runs_partition,
)
from chowpoly.combinat import descent_superset_count
from tests.oracles import (
    brute_delta_multinomial,
    brute_derangement_poly,
    brute_descent_census,
    brute_eulerian_poly,
    brute_nc_subsets,
)


def test_runs_partition():
    assert runs_partition((2, 3, 5, 7, 8)) == [(2, 3), (5,), (7, 8)]
    assert runs_partition((1, 2, 3)) == [(1, 2, 3)]
    assert runs_partition((1, 3, 5)) == [(1,), (3,), (5,)]
    with pytest.raises(ValueError):
        runs_partition(())


def test_delta_multinomial_values():
    assert delta_multinomial(8, (2, 3, 5, 7, 8)) == 1680
    assert delta_multinomial(12, ()) == 1
    assert delta_multinomial(5, (1,)) == 1
    with pytest.raises(ValueError):
        delta_multinomial(4, (5,))


def test_delta_multinomial_matches_direct_factorials():
    for n in range(1, 9):
        for size in range(0, n + 1):
            for idx in combinations(range(1, n + 1), size):
                assert delta_multinomial(n, idx) == brute_delta_multinomial(n, idx)


def test_nc_subsets_small():
    assert list(nc_subsets(2)) == [(), (1,), (2,)]
    assert list(nc_subsets(2, exclude_one=True)) == [(), (2,)]
    assert list(nc_subsets(0)) == [()]


def test_nc_subsets_fibonacci_count():
    # |nc(m)| follows the Fibonacci recurrence: F(2) = 1, F(3) = 2, ...
    fib = [1, 1]
    while len(fib) < 16:
        fib.append(fib[-1] + fib[-2])
    for m in range(0, 13):
        got = list(nc_subsets(m))
        assert len(got) == fib[m + 1], m
        assert set(got) == brute_nc_subsets(m)
        assert len(set(got)) == len(got)
        # canonical order: size first, then lexicographic
        assert got == sorted(got, key=lambda t: (len(t), t))


def test_nc_subsets_exclude_one_matches_filter():
    for m in range(0, 10):
        assert set(nc_subsets(m, exclude_one=True)) == brute_nc_subsets(
            m, exclude_one=True
        )


def test_descent_set():
    assert descent_set((3, 6, 4, 1)) == (2, 3)
    assert descent_set((1, 2, 5, 9)) == ()
    assert descent_set((5, 4, 3, 2, 1)) == (1, 2, 3, 4)
    assert descent_set((7,)) == ()


def test_eulerian_fixed_descents_examples():
    assert eulerian_fixed_descents(5, (2,)) == 9
    assert eulerian_fixed_descents(5, ()) == 1
    assert eulerian_fixed_descents(4, (1, 2, 3)) == 1
    with pytest.raises(ValueError):
        eulerian_fixed_descents(3, (3,))


def test_eulerian_fixed_descents_against_scan():
    for n in range(1, 9):
        census = brute_descent_census(n)
        total = 0
        for size in range(0, n):
            for dset in combinations(range(1, n), size):
                count = eulerian_fixed_descents(n, dset)
                assert count == census.get(dset, 0), (n, dset)
                total += count
        assert total == factorial(n)


def test_descent_superset_count():
    # splitting {1..4} at position 2 leaves two increasing blocks
    assert descent_superset_count(4, (2,)) == 6
    assert descent_superset_count(4, ()) == 1
    assert descent_superset_count(4, (1, 2, 3)) == factorial(4)


def test_eulerian_poly_values():
    assert eulerian_poly(0).coeffs == (1,)
    assert eulerian_poly(1).coeffs == (1,)
    assert eulerian_poly(2).coeffs == (1, 1)
    assert eulerian_poly(5).coeffs == (1, 26, 66, 26, 1)


def test_eulerian_poly_against_scan():
    for n in range(0, 9):
        assert eulerian_poly(n) == brute_eulerian_poly(n), n


def test_derangement_poly_values():
    assert derangement_poly(0).coeffs == (1,)
    assert not derangement_poly(1)
    assert derangement_poly(3).coeffs == (0, 1, 1)
    assert derangement_poly(4).coeffs == (0, 1, 7, 1)


def test_derangement_poly_against_scan():
    for n in range(0, 9):
        assert derangement_poly(n) == brute_derangement_poly(n), n


def test_derangement_identity_with_eulerian():
    # summing over fixed-point sets: A_n = sum C(n, j) d_j
    from math import comb

    from chowpoly import UniPoly

    for n in range(0, 14):
        acc = UniPoly.zero()
        for j in range(n + 1):
            acc = acc + comb(n, j) * derangement_poly(j)
        assert acc == eulerian_poly(n), n


def test_subset_permutation_extend_standardize():
    sp = SubsetPermutation((1, 3, 4, 6), (3, 6, 4, 1))
    assert sp.extend(8) == (3, 6, 4, 1, 2, 5, 7, 8)
    assert sp.standardize() == (2, 4, 3, 1)
    full = SubsetPermutation((1, 2, 3), (2, 3, 1))
    assert full.extend(3) == (2, 3, 1)
    assert SubsetPermutation((), ()).extend(3) == (1, 2, 3)
    assert SubsetPermutation((5, 8), (8, 5)).standardize() == (2, 1)
    ident = SubsetPermutation((2, 5, 6), (2, 5, 6))
    assert ident.standardize() == (1, 2, 3)


def test_subset_permutation_validates():
    with pytest.raises(ValueError):
        SubsetPermutation((1, 2), (1, 3))
    with pytest.raises(ValueError):
        SubsetPermutation((1, 3), (1, 1))


def test_extension_and_standardization_preserve_descents():
    n = 5
    elements = range(1, n + 1)
    for size in range(0, n + 1):
        for support in combinations(elements, size):
            for one_line in permutations(support):
                sp = SubsetPermutation(support, one_line)
                inner = descent_set(one_line)
                assert descent_set(sp.standardize()) == inner
                extended = descent_set(sp.extend(n))
                assert tuple(d for d in extended if d < max(size, 1)) == inner
