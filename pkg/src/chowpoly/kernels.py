"""Hot enumeration kernels, JIT-compiled when numba is available.

Two inner loops dominate the package's runtime:

* the pruned scan over permutations of {1..k} behind the permutation-sum
  closed form, and
* the relabel-and-fingerprint sweep over all (index set, permutation) pairs
  behind the census of Schubert matroids.

Each kernel has a numba implementation and a plain numpy/Python fallback.
The fallback is selected by setting ``CHOW_BACKEND=numpy`` in the
environment (or passing ``backend="numpy"``); the default is numba whenever
it imports.  Both paths produce bit-identical results; see
``benchmarks/bench_backends.py`` for a speed comparison.

Ground-set conventions: element e of {1..n} is bit e-1 of a mask, and a
collection of bases is fingerprinted as the characteristic bit vector over
all 2^n masks, packed into ceil(2^n / 64) little-endian uint64 words.  Equal
fingerprints mean equal basis collections, so deduplication is exact.
"""

from __future__ import annotations

import os
from itertools import permutations

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


_BACKENDS = ("numba", "numpy")


def backend_name(explicit: str | None = None) -> str:
    """Resolve the kernel backend: explicit argument, else CHOW_BACKEND, else
    numba when available."""
    choice = explicit or os.environ.get("CHOW_BACKEND", "").strip().lower()
    if not choice:
        return "numba" if NUMBA_AVAILABLE else "numpy"
    if choice not in _BACKENDS:
        raise ValueError(f"unknown backend {choice!r}, expected one of {_BACKENDS}")
    if choice == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError("numba backend requested but numba is not importable")
    return choice


# ---------------------------------------------------------------------------
# pruned permutation scan
# ---------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _perm_scan_numba(k, binoms, first_ascent_required):  # pragma: no cover - jitted
    agg = np.zeros(k + 1, dtype=np.int64)
    val = np.zeros(k + 1, dtype=np.int64)
    nxt = np.zeros(k + 2, dtype=np.int64)
    used = np.zeros(k + 1, dtype=np.bool_)
    desc_at = np.zeros(k + 1, dtype=np.bool_)
    ndesc = 0
    pos = 1
    nxt[1] = 1
    while pos >= 1:
        v = nxt[pos]
        while v <= k and used[v]:
            v += 1
        if v > k:
            pos -= 1
            if pos >= 1:
                u = val[pos]
                used[u] = False
                if pos >= 2 and desc_at[pos - 1]:
                    ndesc -= 1
                    desc_at[pos - 1] = False
                nxt[pos] = u + 1
            continue
        nxt[pos] = v + 1
        d = pos >= 2 and val[pos - 1] > v
        if d:
            if pos == 2 and first_ascent_required:
                continue
            if pos >= 3 and desc_at[pos - 2]:
                continue
        if pos == k:
            agg[ndesc + (1 if d else 0)] += binoms[v]
            continue
        val[pos] = v
        used[v] = True
        if pos >= 2:
            desc_at[pos - 1] = d
            if d:
                ndesc += 1
        pos += 1
        nxt[pos] = 1
    return agg


def _perm_scan_python(k: int, binoms: list[int], first_ascent_required: bool) -> list[int]:
    agg = [0] * (k + 1)
    used = [False] * (k + 1)

    def rec(pos: int, last: int, ndesc: int, prev_desc: bool) -> None:
        for v in range(1, k + 1):
            if used[v]:
                continue
            d = pos >= 2 and last > v
            if d:
                if pos == 2 and first_ascent_required:
                    continue
                if prev_desc:
                    continue
            if pos == k:
                agg[ndesc + (1 if d else 0)] += binoms[v]
                continue
            used[v] = True
            rec(pos + 1, v, ndesc + (1 if d else 0), d)
            used[v] = False

    rec(1, 0, 0, False)
    return agg


def perm_descent_aggregates(
    k: int,
    binoms: list[int],
    first_ascent_required: bool,
    backend: str | None = None,
) -> list[int]:
    """For each descent count j, sum ``binoms[last entry]`` over the
    permutations of {1..k} whose descent set has no two consecutive positions
    (and, when requested, no descent in position 1).

    ``binoms`` is indexed by value 1..k (index 0 ignored).  The numba path is
    only taken when every partial sum provably fits in int64.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    chosen = backend_name(backend)
    if chosen == "numba":
        # crude overflow bound: every leaf adds at most max(binoms), and
        # there are fewer than k! leaves
        bound = max(binoms[1:]) if k >= 1 else 0
        total = bound
        for i in range(2, k + 1):
            total *= i
        if total < 2**62:
            arr = _perm_scan_numba(
                k, np.asarray(binoms, dtype=np.int64), first_ascent_required
            )
            return [int(x) for x in arr]
    return _perm_scan_python(k, list(binoms), first_ascent_required)


# ---------------------------------------------------------------------------
# census fingerprints
# ---------------------------------------------------------------------------


def perm_table(n: int) -> np.ndarray:
    """All permutations of {1..n} in lexicographic order, one per row."""
    return np.array(list(permutations(range(1, n + 1))), dtype=np.uint8)


def relabel_table(perms: np.ndarray, n: int) -> np.ndarray:
    """table[p, m] = image of mask m under permutation row p.

    Element e (bit e-1) is sent to perms[p, e-1].  Shape (n!, 2^n), uint16.
    """
    nmasks = 1 << n
    masks = np.arange(nmasks, dtype=np.uint16)
    table = np.zeros((perms.shape[0], nmasks), dtype=np.uint16)
    for j in range(n):
        bit = ((masks >> j) & 1).astype(np.uint16)
        target = (perms[:, j].astype(np.uint16) - 1)[:, None]
        table |= bit[None, :] << target
    return table


def fingerprint_words(n: int) -> int:
    """Number of uint64 words in a basis-set fingerprint on ground size n."""
    return ((1 << n) + 63) // 64


@njit(cache=True, nogil=True)
def _census_rows_numba(table, bases_flat, offsets, out):  # pragma: no cover - jitted
    nperms = table.shape[0]
    num_sets = offsets.shape[0] - 1
    for i in range(num_sets):
        lo, hi = offsets[i], offsets[i + 1]
        base_row = i * nperms
        for p in range(nperms):
            r = base_row + p
            for t in range(lo, hi):
                m = table[p, bases_flat[t]]
                out[r, m >> 6] |= np.uint64(1) << np.uint64(m & 63)
    return out


def _census_rows_numpy(table, bases_lists, out):
    nperms = table.shape[0]
    nwords = out.shape[1]
    for i, bases in enumerate(bases_lists):
        rel = table[:, np.asarray(bases, dtype=np.intp)]
        block = out[i * nperms : (i + 1) * nperms]
        word = rel >> 6
        val = np.uint64(1) << (rel & 63).astype(np.uint64)
        for w in range(nwords):
            block[:, w] = np.bitwise_or.reduce(
                np.where(word == w, val, np.uint64(0)), axis=1
            )
    return out


def census_fingerprints(
    table: np.ndarray,
    bases_lists: list[list[int]],
    n: int,
    backend: str | None = None,
) -> np.ndarray:
    """Fingerprint every relabeled basis collection.

    Row i * n! + p holds the fingerprint of bases_lists[i] pushed through
    permutation row p of the relabel table.
    """
    nwords = fingerprint_words(n)
    out = np.zeros((len(bases_lists) * table.shape[0], nwords), dtype=np.uint64)
    if not bases_lists:
        return out
    if backend_name(backend) == "numba":
        flat = np.concatenate([np.asarray(b, dtype=np.int64) for b in bases_lists])
        offsets = np.zeros(len(bases_lists) + 1, dtype=np.int64)
        np.cumsum([len(b) for b in bases_lists], out=offsets[1:])
        return _census_rows_numba(table, flat, offsets, out)
    return _census_rows_numpy(table, bases_lists, out)


# ---------------------------------------------------------------------------
# classification of deduplicated fingerprints
# ---------------------------------------------------------------------------


def _popcounts(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.uint32)
    pc = np.zeros(1 << n, dtype=np.int64)
    for j in range(n):
        pc += (masks >> j) & 1
    return pc


def _mask_order(n: int, pc: np.ndarray) -> np.ndarray:
    """Nonzero masks sorted by popcount then value, for hitting-set scans."""
    masks = np.arange(1, 1 << n, dtype=np.int64)
    return masks[np.lexsort((masks, pc[1:]))]


@njit(cache=True, nogil=True)
def _classify_numba(rows, n, order, pc):  # pragma: no cover - jitted
    num = rows.shape[0]
    nmasks = 1 << n
    loop_counts = np.empty(num, dtype=np.int64)
    cogirths = np.empty(num, dtype=np.int64)
    bases = np.empty(nmasks, dtype=np.int64)
    for r in range(num):
        nb = 0
        union = 0
        for m in range(nmasks):
            if (rows[r, m >> 6] >> np.uint64(m & 63)) & np.uint64(1):
                bases[nb] = m
                nb += 1
                union |= m
        loop_counts[r] = n - pc[union]
        cg = -1
        for oi in range(order.shape[0]):
            cand = order[oi]
            ok = True
            for t in range(nb):
                if cand & bases[t] == 0:
                    ok = False
                    break
            if ok:
                cg = pc[cand]
                break
        cogirths[r] = cg
    return loop_counts, cogirths


def _classify_numpy(rows, n, order, pc):
    num = rows.shape[0]
    nmasks = 1 << n
    masks = np.arange(nmasks, dtype=np.int64)
    word = masks >> 6
    shift = (masks & 63).astype(np.uint64)
    loop_counts = np.empty(num, dtype=np.int64)
    cogirths = np.empty(num, dtype=np.int64)
    for r in range(num):
        bits = (rows[r][word] >> shift) & np.uint64(1)
        bases = masks[bits.astype(bool)]
        union = int(np.bitwise_or.reduce(bases)) if bases.size else 0
        loop_counts[r] = n - pc[union]
        if bases.size and bases[0] == 0:
            cogirths[r] = -1  # the empty set is a basis: nothing can hit it
            continue
        hits_all = ((order[:, None] & bases[None, :]) != 0).all(axis=1)
        idx = int(np.argmax(hits_all))
        cogirths[r] = pc[order[idx]] if hits_all[idx] else -1
    return loop_counts, cogirths


def classify_fingerprints(
    rows: np.ndarray, n: int, backend: str | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Loop counts and cogirths of fingerprinted basis collections.

    The number of loops is n minus the size of the union of the bases.  The
    cogirth is the smallest size of a subset meeting every basis (the
    smallest set dependent in the dual); -1 encodes "no such set", which
    happens exactly for the rank-0 collection {empty set}.
    """
    pc = _popcounts(n)
    order = _mask_order(n, pc)
    if backend_name(backend) == "numba":
        return _classify_numba(rows, n, order, pc)
    return _classify_numpy(rows, n, order, pc)
