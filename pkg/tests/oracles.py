"""Independent brute-force reference implementations used across the tests.

Everything here scans permutations or subsets directly from the definitions,
with no shared code paths into the package, so these stay valid as oracles
for the faster implementations.
"""

from __future__ import annotations

from itertools import combinations, permutations

from chowpoly import UniPoly


def brute_descents(seq) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(seq)) if seq[i - 1] > seq[i])


def brute_descent_census(n: int) -> dict[tuple[int, ...], int]:
    """Descent set -> number of permutations of {1..n} with exactly that set."""
    counts: dict[tuple[int, ...], int] = {}
    for w in permutations(range(1, n + 1)):
        d = brute_descents(w)
        counts[d] = counts.get(d, 0) + 1
    return counts


def brute_eulerian_poly(n: int) -> UniPoly:
    if n == 0:
        return UniPoly.one()
    coeffs = [0] * n
    for w in permutations(range(1, n + 1)):
        coeffs[len(brute_descents(w))] += 1
    return UniPoly(coeffs)


def brute_derangement_poly(n: int) -> UniPoly:
    if n == 0:
        return UniPoly.one()
    coeffs = [0] * (n + 1)
    any_derangement = False
    for w in permutations(range(1, n + 1)):
        if any(v == i for i, v in enumerate(w, start=1)):
            continue
        any_derangement = True
        coeffs[sum(1 for i, v in enumerate(w, start=1) if v > i)] += 1
    return UniPoly(coeffs) if any_derangement else UniPoly.zero()


def brute_nc_subsets(m: int, exclude_one: bool = False) -> set[tuple[int, ...]]:
    out = set()
    universe = range(2 if exclude_one else 1, m + 1)
    for size in range(len(list(universe)) + 1):
        for combo in combinations(universe, size):
            if all(b - a > 1 for a, b in zip(combo, combo[1:])):
                out.add(combo)
    return out


def brute_delta_multinomial(n: int, index_set: tuple[int, ...]) -> int:
    """Gap multinomial recomputed directly from factorials of the gap sequence."""
    from math import factorial

    if not index_set:
        return 1
    elems = sorted(index_set)
    minima = [elems[0]]
    for prev, cur in zip(elems, elems[1:]):
        if cur != prev + 1:
            minima.append(cur)
    gaps = [minima[0] - 1]
    gaps += [b - a for a, b in zip(minima, minima[1:])]
    gaps.append(n - minima[-1] + 1)
    value = factorial(n)
    for g in gaps:
        value //= factorial(g)
    return value
