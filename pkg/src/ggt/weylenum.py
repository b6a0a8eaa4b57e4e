"""Exact and sampled enumeration of reflection-group element orders.

Elements are integer matrices acting on the root lattice in the basis of
simple roots.  The breadth-first walk multiplies on the right by a simple
reflection only when that increases length (the corresponding simple-root
image is still positive), so every element is produced at its own length
level.  Each element is keyed by the tuple of root indices of its
simple-root images, packed into a single 64-bit integer; rank <= 8 and at
most 256 roots make that exact.

Matrix products run in float64 so the batched BLAS path is used; entries
of reflection-group matrices in this basis are bounded by the highest
root coefficients (at most 6), so every accumulated value stays far below
the 2^53 exact-integer window and the arithmetic is exact.

The E8 group (order 696,729,600) is out of enumeration scale; orders
there are sampled from fixed-seed random generator words.  Chunks draw
from independently spawned Philox streams, so the result is reproducible
regardless of the number of worker threads.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import ResourceBoundExceeded

__all__ = [
    "reflection_matrices",
    "enumerate_orders",
    "sampled_orders",
    "DEFAULT_E8_SEED",
    "DEFAULT_E8_SAMPLES",
]

DEFAULT_E8_SEED = 1729
DEFAULT_E8_SAMPLES = 1_000_000

_MAX_ELEMENT_ORDER = 64  # far above any reflection group of rank <= 8


def reflection_matrices(cartan: np.ndarray) -> np.ndarray:
    """Simple reflections as matrices on the root lattice, stacked (n,n,n).

    Column j of the i-th matrix is s_i(alpha_j) = alpha_j - C[j,i] alpha_i.
    """
    n = len(cartan)
    out = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        m = np.eye(n, dtype=np.int64)
        m[i, :] -= cartan[:, i]
        out[i] = m
    return out


def _pack_rows(a: np.ndarray) -> np.ndarray:
    # rows of small ints -> one uint64 per row
    if a.shape[1] > 8:
        raise ValueError("can only pack up to 8 coordinates")
    shifted = a + 64
    if shifted.min() < 0 or shifted.max() > 255:
        raise AssertionError("coordinates out of packing range")
    b = np.zeros((len(a), 8), dtype=np.uint8)
    b[:, :a.shape[1]] = shifted.astype(np.uint8)
    return np.ascontiguousarray(b).view(np.uint64).ravel()


class _RootIndexKeys:
    """Keys elements by the root indices of their simple-root images."""

    def __init__(self, roots_in_base: np.ndarray) -> None:
        packed = _pack_rows(roots_in_base)
        self.sorter = np.argsort(packed)
        self.packed_sorted = packed[self.sorter]

    def keys(self, mats: np.ndarray) -> np.ndarray:
        out = np.zeros(len(mats), dtype=np.uint64)
        for j in range(mats.shape[2]):
            col = mats[:, :, j].astype(np.int64)
            pk = _pack_rows(col)
            pos = np.searchsorted(self.packed_sorted, pk)
            pos = np.minimum(pos, len(self.packed_sorted) - 1)
            if not (self.packed_sorted[pos] == pk).all():
                raise AssertionError("a simple-root image is not a root")
            idx = self.sorter[pos].astype(np.uint64)
            out |= idx << np.uint64(8 * j)
        return out


def _batch_orders(mats: np.ndarray, tally: Counter) -> None:
    """Accumulate the multiplicative order of each matrix into the tally."""
    n = mats.shape[1]
    ident = np.eye(n)
    base = mats.astype(np.float64)
    power = base.copy()
    k = 1
    while len(power):
        done = np.all(power == ident, axis=(1, 2))
        if done.any():
            tally[k] += int(done.sum())
            keep = ~done
            power = power[keep]
            base = base[keep]
        if len(power):
            k += 1
            if k > _MAX_ELEMENT_ORDER:
                raise AssertionError("element order out of expected range")
            power = power @ base


def enumerate_orders(cartan: np.ndarray, roots_in_base: np.ndarray,
                     expected_order: int,
                     bound: int = 10_000_000) -> Counter:
    """Order tally for the full reflection group of the Cartan matrix.

    roots_in_base lists every root in simple-root coordinates (the key
    space).  The element count must come out exactly as expected_order.
    """
    if expected_order > bound:
        raise ResourceBoundExceeded(
            f"group order {expected_order} exceeds enumeration bound {bound}")
    n = len(cartan)
    refl = reflection_matrices(cartan).astype(np.float64)
    keyer = _RootIndexKeys(roots_in_base)

    ident = np.eye(n, dtype=np.float64)[None]
    seen = np.sort(keyer.keys(ident))
    frontier = ident
    tally: Counter = Counter({1: 1})
    count = 1
    while len(frontier):
        parts = []
        for i in range(n):
            # length grows iff the i-th simple-root image is still positive
            col = frontier[:, :, i]
            grows = col.sum(axis=1) > 0
            if grows.any():
                parts.append(frontier[grows] @ refl[i])
        if not parts:
            break
        cand = np.concatenate(parts)
        keys = keyer.keys(cand)
        uniq, first = np.unique(keys, return_index=True)
        pos = np.searchsorted(seen, uniq)
        pos_c = np.minimum(pos, len(seen) - 1)
        fresh = seen[pos_c] != uniq
        new = cand[first[fresh]]
        if len(new):
            count += len(new)
            if count > bound:
                raise ResourceBoundExceeded(
                    f"enumeration passed {bound} elements")
            _batch_orders(new.astype(np.int64), tally)
            seen = np.sort(np.concatenate([seen, uniq[fresh]]))
        frontier = new
    if count != expected_order or sum(tally.values()) != expected_order:
        raise AssertionError(
            f"enumerated {count} elements, expected {expected_order}")
    return tally


def _sample_chunk(refl: np.ndarray, seed_seq: np.random.SeedSequence,
                  size: int, word_length: int) -> Counter:
    rng = np.random.Generator(np.random.Philox(seed_seq))
    n = refl.shape[1]
    idx = rng.integers(0, len(refl), size=(size, word_length))
    x = np.broadcast_to(np.eye(n), (size, n, n)).copy()
    for t in range(word_length):
        for i in range(len(refl)):
            sel = idx[:, t] == i
            if sel.any():
                x[sel] = x[sel] @ refl[i]
    tally: Counter = Counter()
    _batch_orders(x, tally)
    return tally


def sampled_orders(cartan: np.ndarray, seed: int = DEFAULT_E8_SEED,
                   samples: int = DEFAULT_E8_SAMPLES,
                   word_length: int = 64,
                   chunk: int = 100_000) -> Counter:
    """Order tally from fixed-seed random words in the simple reflections.

    Deterministic for a given (seed, samples, word_length, chunk): chunks
    use independently spawned substreams and merge by summation, so the
    GGT_THREADS worker count cannot change the result.
    """
    refl = reflection_matrices(cartan).astype(np.float64)
    sizes = [chunk] * (samples // chunk)
    if samples % chunk:
        sizes.append(samples % chunk)
    seqs = np.random.SeedSequence(seed).spawn(len(sizes))
    workers = int(os.environ.get("GGT_THREADS", "1"))
    tally: Counter = Counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(
                    lambda args: _sample_chunk(refl, *args),
                    [(sq, sz, word_length) for sq, sz in zip(seqs, sizes)]):
                tally.update(part)
    else:
        for sq, sz in zip(seqs, sizes):
            tally.update(_sample_chunk(refl, sq, sz, word_length))
    return tally
