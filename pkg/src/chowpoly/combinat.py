"""Descent-set combinatorics.

Positions and ground-set elements are 1-based throughout: a descent of the
sequence (a_1, ..., a_m) is a position i in 1..m-1 with a_i > a_{i+1}.

The module provides the gap multinomial attached to an index set (via its
partition into maximal consecutive runs), the no-consecutive subsets of
{1..m}, descent-set counting over the symmetric group, the Eulerian and
derangement polynomials, and permutations of subsets of {1..n} together
with their extension and standardization maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .polynomial import UniPoly


def _as_index_set(elements: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a strictly increasing tuple of positive integers."""
    elems = tuple(sorted(set(elements)))
    if elems and elems[0] < 1:
        raise ValueError(f"index sets contain positive integers only, got {elems[0]}")
    return elems


def runs_partition(index_set: Iterable[int]) -> list[tuple[int, ...]]:
    """Split a set into its maximal runs of consecutive integers.

    {2,3,5,7,8} -> [(2,3), (5,), (7,8)].  The runs are disjoint, their minima
    increase, and their union is the input.  Empty input is rejected.
    """
    elems = _as_index_set(index_set)
    if not elems:
        raise ValueError("empty set has no run partition")
    runs: list[tuple[int, ...]] = []
    start = prev = elems[0]
    for e in elems[1:]:
        if e == prev + 1:
            prev = e
            continue
        runs.append(tuple(range(start, prev + 1)))
        start = prev = e
    runs.append(tuple(range(start, prev + 1)))
    return runs


def delta_multinomial(n: int, index_set: Iterable[int]) -> int:
    """Gap multinomial of an index set I inside {1..n}.

    With I partitioned into consecutive runs I_1, ..., I_s (minima m_1 < ... <
    m_s), this is n! divided by (m_1 - 1)!, the gaps (m_{j+1} - m_j)!, and the
    remainder (n - m_s + 1)!.  The empty set yields 1.
    """
    elems = _as_index_set(index_set)
    if not elems:
        return 1
    if elems[-1] > n:
        raise ValueError(f"element {elems[-1]} exceeds ground size n={n}")
    minima = [run[0] for run in runs_partition(elems)]
    parts = [minima[0] - 1]
    parts += [b - a for a, b in zip(minima, minima[1:])]
    parts.append(n - minima[-1] + 1)
    result = factorial(n)
    for p in parts:
        result //= factorial(p)
    return result


def nc_subsets(m: int, exclude_one: bool = False) -> Iterator[tuple[int, ...]]:
    """All subsets of {1..m} with no two consecutive elements.

    Emitted by size, then lexicographically.  With ``exclude_one`` the element
    1 is additionally forbidden.  m = 0 yields only the empty set.
    """
    lo = 2 if exclude_one else 1
    # no-consecutive s-subsets of the run {lo..m} correspond to plain
    # s-subsets of {lo..m-s+1} spread out by their position
    width = m - lo + 1
    max_size = max(0, (width + 1) // 2)
    for s in range(max_size + 1):
        if s == 0:
            yield ()
            continue
        for base in combinations(range(lo, m - s + 2), s):
            yield tuple(b + j for j, b in enumerate(base))


def descent_set(seq: Sequence[int]) -> tuple[int, ...]:
    """Positions i (1-based) with seq[i] > seq[i+1]."""
    return tuple(i for i in range(1, len(seq)) if seq[i - 1] > seq[i])


def descent_count(seq: Sequence[int]) -> int:
    return len(descent_set(seq))


def descent_superset_count(n: int, dset: Sequence[int]) -> int:
    """Number of permutations of {1..n} whose descent set is contained in dset.

    Splitting positions at d_1 < ... < d_m leaves increasing blocks, so the
    count is the multinomial of the block sizes.
    """
    ds = list(dset)
    result = factorial(n)
    prev = 0
    for d in ds:
        result //= factorial(d - prev)
        prev = d
    result //= factorial(n - prev)
    return result


def eulerian_fixed_descents(n: int, dset: Iterable[int]) -> int:
    """Number of permutations of {1..n} with descent set exactly dset.

    Inclusion-exclusion over subsets of dset against the closed superset
    count (2^|dset| terms).
    """
    ds = _as_index_set(dset)
    if ds and ds[-1] > n - 1:
        raise ValueError(f"descent position {ds[-1]} out of range for n={n}")
    total = 0
    for r in range(len(ds) + 1):
        sign = (-1) ** (len(ds) - r)
        for sub in combinations(ds, r):
            total += sign * descent_superset_count(n, sub)
    return total


@lru_cache(maxsize=None)
def eulerian_poly(n: int) -> UniPoly:
    """Descent-generating polynomial over all permutations of {1..n}.

    Computed by the triangle recurrence
    T(n, j) = (j+1) T(n-1, j) + (n-j) T(n-1, j-1); both n = 0 and n = 1 give
    the constant polynomial 1.
    """
    if n < 0:
        raise ValueError(f"negative n={n}")
    if n <= 1:
        return UniPoly.one()
    prev = eulerian_poly(n - 1).coeffs
    out = [0] * (n if n > 1 else 1)
    for j in range(len(prev)):
        out[j] += (j + 1) * prev[j]
        out[j + 1] += (n - j - 1) * prev[j]
    return UniPoly(out)


_DERANGEMENT_ENUM_MAX = 10  # 10! is ~3.6M permutations, still fast to scan


@lru_cache(maxsize=None)
def derangement_poly(n: int) -> UniPoly:
    """Excedance-generating polynomial over fixpoint-free permutations of {1..n}.

    Up to n = 10 this scans all permutations directly, which keeps the
    function usable as an oracle.  Beyond that it falls back on the exact
    identity sum_j C(n, j) d_j(x) = A_n(x), where A_n is the Eulerian
    polynomial for the (equidistributed) excedance statistic.
    """
    if n < 0:
        raise ValueError(f"negative n={n}")
    if n == 0:
        return UniPoly.one()
    if n == 1:
        return UniPoly.zero()
    if n <= _DERANGEMENT_ENUM_MAX:
        counts = [0] * n
        for w in permutations(range(1, n + 1)):
            exc = 0
            fixed = False
            for i, v in enumerate(w, start=1):
                if v == i:
                    fixed = True
                    break
                if v > i:
                    exc += 1
            if not fixed:
                counts[exc] += 1
        return UniPoly(counts)
    rest = UniPoly.zero()
    for j in range(n):
        rest = rest + comb(n, j) * derangement_poly(j)
    return eulerian_poly(n) - rest


@dataclass(frozen=True)
class SubsetPermutation:
    """A bijection of a subset S of {1..n}, in one-line notation.

    With S = {s_1 < ... < s_k}, entry i of ``one_line`` is the image of s_i.
    """

    support: tuple[int, ...]
    one_line: tuple[int, ...]

    def __post_init__(self):
        support = _as_index_set(self.support)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "one_line", tuple(self.one_line))
        if tuple(sorted(self.one_line)) != support:
            raise ValueError(
                f"one-line {self.one_line} is not a permutation of {support}"
            )

    def __len__(self) -> int:
        return len(self.support)

    def descent_set(self) -> tuple[int, ...]:
        return descent_set(self.one_line)

    def extend(self, n: int) -> tuple[int, ...]:
        """One-line of the extension to {1..n}: the missing elements are
        appended in increasing order.  Preserves descents."""
        if self.support and self.support[-1] > n:
            raise ValueError(f"support {self.support} not contained in 1..{n}")
        tail = tuple(e for e in range(1, n + 1) if e not in set(self.support))
        return self.one_line + tail

    def standardize(self) -> tuple[int, ...]:
        """One-line of the order-isomorphic permutation of {1..len(S)}.
        Preserves descents."""
        relabel = {s: i for i, s in enumerate(self.support, start=1)}
        return tuple(relabel[v] for v in self.one_line)
