"""Small-matroid engine over explicit basis collections.

Ground sets are {1..n} with n capped at 16; subsets are stored as bit masks
(element e is bit e-1).  A matroid is its canonically sorted tuple of basis
masks; the basis-exchange axiom is verified on construction for n <= 12.

Besides the usual invariants (dual, loops, circuits, girth, cogirth), the
module builds the lattice of flats, labels its cover relations by the first
atom entering the upper flat (atoms ordered by their smallest new element),
and enumerates maximal chains.  Summing a gamma-shaped weight over chains
whose label sequence has no two consecutive descents yields the Chow and
augmented Chow polynomials of the matroid; this is the package's brute-force
oracle against the closed forms for uniform matroids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .combinat import SubsetPermutation, descent_set
from .polynomial import SqfMultiPoly, UniPoly

INFINITY = float("inf")

MAX_GROUND = 16
_VALIDATE_EXCHANGE_MAX = 12


class MatroidError(ValueError):
    pass


def mask_of(elements: Iterable[int], n: int) -> int:
    m = 0
    for e in elements:
        if not 1 <= e <= n:
            raise MatroidError(f"element {e} outside ground set 1..{n}")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


class Matroid:
    """Matroid given by ground-set size and the collection of basis masks."""

    def __init__(self, n: int, bases: Iterable[int], validate: bool = True):
        if not 0 <= n <= MAX_GROUND:
            raise MatroidError(f"ground size {n} not in 0..{MAX_GROUND}")
        self.n = n
        self.bases: tuple[int, ...] = tuple(sorted(set(bases)))
        if not self.bases:
            raise MatroidError("basis collection is empty")
        sizes = {b.bit_count() for b in self.bases}
        if len(sizes) > 1:
            ordered = sorted(self.bases, key=lambda m: m.bit_count())
            raise MatroidError(
                f"bases of unequal size: {elements_of(ordered[0])} and "
                f"{elements_of(ordered[-1])}"
            )
        self.rank: int = self.bases[0].bit_count()
        if validate and n <= _VALIDATE_EXCHANGE_MAX:
            self._check_exchange()

    def _check_exchange(self) -> None:
        base_set = set(self.bases)
        for b1 in self.bases:
            for b2 in self.bases:
                rem = b1 & ~b2
                add = b2 & ~b1
                while rem:
                    x = rem & -rem
                    rem ^= x
                    stripped = b1 ^ x
                    candidates = add
                    ok = False
                    while candidates:
                        y = candidates & -candidates
                        candidates ^= y
                        if stripped | y in base_set:
                            ok = True
                            break
                    if not ok:
                        raise MatroidError(
                            f"exchange axiom fails for bases {elements_of(b1)}, "
                            f"{elements_of(b2)} removing element {x.bit_length()}"
                        )

    @classmethod
    def from_bases(
        cls, n: int, bases: Iterable[Iterable[int]], validate: bool = True
    ) -> "Matroid":
        return cls(n, (mask_of(b, n) for b in bases), validate=validate)

    @classmethod
    def uniform(cls, k: int, n: int) -> "Matroid":
        """All k-subsets of {1..n} as bases."""
        if not 0 <= k <= n:
            raise MatroidError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
        masks = [mask_of(c, n) for c in combinations(range(1, n + 1), k)]
        return cls(n, masks, validate=False)

    # -- basic invariants ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _union(self) -> int:
        u = 0
        for b in self.bases:
            u |= b
        return u

    @cached_property
    def _intersection(self) -> int:
        i = self.full_mask
        for b in self.bases:
            i &= b
        return i

    def loops(self) -> tuple[int, ...]:
        """Elements contained in no basis."""
        return elements_of(self.full_mask & ~self._union)

    def coloops(self) -> tuple[int, ...]:
        """Elements contained in every basis."""
        return elements_of(self._intersection)

    @property
    def is_loopless(self) -> bool:
        return self._union == self.full_mask

    def dual(self) -> "Matroid":
        full = self.full_mask
        return Matroid(self.n, (full ^ b for b in self.bases), validate=False)

    @cached_property
    def _independent(self) -> bytearray:
        table = bytearray(1 << self.n)
        for b in self.bases:
            sub = b
            while True:
                table[sub] = 1
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return table

    def is_independent(self, elements: Iterable[int]) -> bool:
        return bool(self._independent[mask_of(elements, self.n)])

    def rank_of(self, elements: Iterable[int]) -> int:
        m = mask_of(elements, self.n)
        return max((m & b).bit_count() for b in self.bases)

    def circuits(self) -> tuple[tuple[int, ...], ...]:
        """Minimal dependent sets, sorted by (size, mask)."""
        indep = self._independent
        found = []
        for m in range(1, 1 << self.n):
            if indep[m]:
                continue
            sub = m
            minimal = True
            while sub:
                x = sub & -sub
                sub ^= x
                if not indep[m ^ x]:
                    minimal = False
                    break
            if minimal:
                found.append(m)
        found.sort(key=lambda m: (m.bit_count(), m))
        return tuple(elements_of(m) for m in found)

    def girth(self) -> int | float:
        """Size of the smallest dependent set; inf when everything is independent."""
        indep = self._independent
        best = None
        for m in range(1, 1 << self.n):
            if not indep[m]:
                c = m.bit_count()
                if best is None or c < best:
                    best = c
        return INFINITY if best is None else best

    def cogirth(self) -> int | float:
        return self.dual().girth()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self) -> int:
        return hash((self.n, self.bases))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    def bases_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(b) for b in self.bases)


def matroid_from_bases(n: int, bases: Iterable[Iterable[int]]) -> Matroid:
    return Matroid.from_bases(n, bases)


def uniform(k: int, n: int) -> Matroid:
    return Matroid.uniform(k, n)


@dataclass(frozen=True)
class MatroidInvariants:
    rank: int
    loops: tuple[int, ...]
    coloops: tuple[int, ...]
    circuits: tuple[tuple[int, ...], ...]
    girth: int | float
    cogirth: int | float
    dual: Matroid


def matroid_invariants(m: Matroid) -> MatroidInvariants:
    return MatroidInvariants(
        rank=m.rank,
        loops=m.loops(),
        coloops=m.coloops(),
        circuits=m.circuits(),
        girth=m.girth(),
        cogirth=m.cogirth(),
        dual=m.dual(),
    )


# -- lattice of flats --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FlatLattice:
    """Flats of a matroid ordered by inclusion, with cover labels.

    ``atoms`` lists the rank-1 flats ordered by their smallest element
    outside the bottom flat; ``atoms_below[f]`` is a bitmask over atom
    indices recording which atoms lie below flat f.  The label of a cover
    F < G is the smallest (1-based) atom index below G but not below F.
    """

    n: int
    rank: int
    flats: tuple[int, ...]
    flat_rank: dict
    covers: dict
    atoms: tuple[int, ...]
    atoms_below: dict
    bottom: int
    top: int

    def maximal_chain_count(self) -> int:
        counts = {self.bottom: 1}
        for f in self.flats:  # sorted by rank, so predecessors come first
            for g in self.covers[f]:
                counts[g] = counts.get(g, 0) + counts[f]
        return counts[self.top]


def flats_lattice(m: Matroid) -> FlatLattice:
    n = m.n
    nmasks = 1 << n
    rank = [0] * nmasks
    for s in range(nmasks):
        rank[s] = max((s & b).bit_count() for b in m.bases)

    def closure(s: int) -> int:
        r = rank[s]
        out = s
        rest = m.full_mask & ~s
        while rest:
            x = rest & -rest
            rest ^= x
            if rank[s | x] == r:
                out |= x
        return out

    flats = sorted(
        {s for s in range(nmasks) if closure(s) == s}, key=lambda s: (rank[s], s)
    )
    flat_rank = {f: rank[f] for f in flats}
    by_rank: dict[int, list[int]] = {}
    for f in flats:
        by_rank.setdefault(flat_rank[f], []).append(f)
    covers = {
        f: tuple(g for g in by_rank.get(flat_rank[f] + 1, ()) if g & f == f)
        for f in flats
    }
    bottom = flats[0]
    top = m.full_mask
    atoms = tuple(
        sorted(by_rank.get(1, ()), key=lambda a: (a & ~bottom & -(a & ~bottom)))
    )
    atoms_below = {
        f: sum(1 << j for j, a in enumerate(atoms) if a & f == a) for f in flats
    }
    return FlatLattice(
        n=n,
        rank=m.rank,
        flats=tuple(flats),
        flat_rank=flat_rank,
        covers=covers,
        atoms=atoms,
        atoms_below=atoms_below,
        bottom=bottom,
        top=top,
    )


def r_label(lattice: FlatLattice, lower: Iterable[int] | int, upper: Iterable[int] | int) -> int:
    """Label of the cover relation lower < upper.

    The label is the 1-based index of the first atom below ``upper`` that is
    not below ``lower``.  For uniform matroids the atoms are the singletons
    in natural order, so this is min(upper - lower).
    """
    lo = lower if isinstance(lower, int) else mask_of(lower, lattice.n)
    hi = upper if isinstance(upper, int) else mask_of(upper, lattice.n)
    if lo not in lattice.covers or hi not in lattice.covers[lo]:
        raise MatroidError(f"{elements_of(hi)} does not cover {elements_of(lo)}")
    fresh = lattice.atoms_below[hi] & ~lattice.atoms_below[lo]
    return (fresh & -fresh).bit_length()


@dataclass(frozen=True)
class LabeledChain:
    """A maximal chain of flats together with its cover-label sequence."""

    flats: tuple[int, ...]
    labels: tuple[int, ...]


def labeled_chains(lattice: FlatLattice) -> Iterator[LabeledChain]:
    """All maximal chains of the lattice, by depth-first traversal."""
    flats: list[int] = [lattice.bottom]
    labels: list[int] = []

    def walk(f: int) -> Iterator[LabeledChain]:
        if f == lattice.top:
            yield LabeledChain(tuple(flats), tuple(labels))
            return
        below_f = lattice.atoms_below[f]
        for g in lattice.covers[f]:
            fresh = lattice.atoms_below[g] & ~below_f
            flats.append(g)
            labels.append((fresh & -fresh).bit_length())
            yield from walk(g)
            flats.pop()
            labels.pop()

    yield from walk(lattice.bottom)


def chain_label_sequences(lattice: FlatLattice) -> Iterator[tuple[int, ...]]:
    """Label sequences of all maximal chains."""
    for chain in labeled_chains(lattice):
        yield chain.labels


def _has_consecutive(dset: tuple[int, ...]) -> bool:
    return any(b == a + 1 for a, b in zip(dset, dset[1:]))


def _chain_descent_weights(
    m: Matroid, augmented: bool
) -> dict[tuple[int, ...], int]:
    """Multiplicity of each admissible descent set over maximal chains."""
    if not m.is_loopless:
        raise MatroidError("oracle requires loopless input")
    if m.rank < 1:
        raise MatroidError("oracle requires rank at least 1")
    lattice = flats_lattice(m)
    weights: dict[tuple[int, ...], int] = {}
    for labels in chain_label_sequences(lattice):
        dset = descent_set(labels)
        if _has_consecutive(dset):
            continue
        if not augmented and dset and dset[0] == 1:
            continue
        weights[dset] = weights.get(dset, 0) + 1
    return weights


def chain_chow(m: Matroid, augmented: bool = False) -> UniPoly:
    """Chow (augmented: augmented Chow) polynomial summed over maximal chains
    of the lattice of flats whose label sequence has no two consecutive
    descents (and no descent in position 1 when not augmented)."""
    weights = _chain_descent_weights(m, augmented)
    base = m.rank if augmented else m.rank - 1
    result = UniPoly.zero()
    for dset, count in sorted(weights.items()):
        d = len(dset)
        result = result + UniPoly.monomial(count, d) * UniPoly.one_plus_x_power(
            base - 2 * d
        )
    return result


def chain_chow_multivariate(m: Matroid, augmented: bool = False) -> SqfMultiPoly:
    """Multivariate refinement of ``chain_chow``: each chain contributes the
    product of x_i over its descent positions i times (1 + x_i) over window
    positions i with neither i nor i+1 a descent."""
    weights = _chain_descent_weights(m, augmented)
    k = m.rank
    var_range = (0 if augmented else 1, k - 1)
    window = range(0 if augmented else 1, k)
    terms: dict[tuple[int, ...], int] = {}
    for dset, count in weights.items():
        in_d = set(dset)
        free = [i for i in window if i not in in_d and i + 1 not in in_d]
        for size in range(len(free) + 1):
            for extra in combinations(free, size):
                key = tuple(sorted(dset + extra))
                terms[key] = terms.get(key, 0) + count
    return SqfMultiPoly(var_range, terms)


def chain_label_permutations(k: int, n: int) -> Iterator[SubsetPermutation]:
    """Subset permutations realizable as chain label sequences of the rank-k
    uniform matroid on {1..n}: permutations of a k-subset S whose last entry
    v satisfies {1..v} inside S.  Deterministic (support, one-line) order."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    for support in combinations(range(1, n + 1), k):
        in_s = set(support)
        for one_line in permutations(support):
            if all(e in in_s for e in range(1, one_line[-1])):
                yield SubsetPermutation(support, one_line)


# -- JSON exchange format -----------------------------------------------------


def matroid_to_json(m: Matroid) -> dict:
    return {
        "n": m.n,
        "rank": m.rank,
        "bases": [list(b) for b in sorted(m.bases_sets())],
    }


def matroid_from_json(data: dict) -> Matroid:
    m = Matroid.from_bases(int(data["n"]), data["bases"])
    if "rank" in data and int(data["rank"]) != m.rank:
        raise MatroidError(
            f"declared rank {data['rank']} does not match basis size {m.rank}"
        )
    return m
