"""Bitset kernels for the double description adjacency test.

Zero sets of rays are stored as rows of a (R, W) uint64 matrix, one bit per
processed inequality.  The hot loop of the whole engine is: for a candidate
pair of rays, decide whether any third ray's zero set contains the
intersection of theirs.  That is pure machine-integer work, so it carries a
numba @njit kernel; a vectorized numpy implementation of the same loop is the
fallback, selected with CONELAB_JIT=0 (or automatically when numba is
unavailable).  Both paths return identical results.
"""

from __future__ import annotations

import os

import numpy as np

_WANT_JIT = os.environ.get("CONELAB_JIT", "1") != "0"


def _popcount_rows(a: np.ndarray) -> np.ndarray:
    """Per-row popcount of a (N, W) uint64 matrix."""
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a).sum(axis=1, dtype=np.int64)
    by = a.view(np.uint8).reshape(a.shape[0], -1)
    return np.unpackbits(by, axis=1).sum(axis=1, dtype=np.int64)


def _adjacent_numpy(Z: np.ndarray, p: int, ineg: np.ndarray, min_bits: int,
                    chunk: int = 256) -> np.ndarray:
    """Positions t (into ineg) with ray pair (p, ineg[t]) adjacent."""
    masks = Z[p][None, :] & Z[ineg]
    cand = np.nonzero(_popcount_rows(masks) >= min_bits)[0]
    if cand.size == 0:
        return cand
    keep = []
    for lo in range(0, cand.size, chunk):
        sel = cand[lo:lo + chunk]
        m = masks[sel]
        contained = ((Z[None, :, :] & m[:, None, :]) == m[:, None, :]).all(axis=2)
        contained[:, p] = False
        contained[np.arange(sel.size), ineg[sel]] = False
        keep.append(sel[~contained.any(axis=1)])
    return np.concatenate(keep) if keep else np.empty(0, dtype=np.int64)


_adjacent_numba = None
if _WANT_JIT:
    try:
        from numba import njit

        @njit(nogil=True, cache=True)
        def _adjacent_numba_impl(Z, p, ineg, min_bits):  # pragma: no cover - jitted
            R, W = Z.shape
            out = np.empty(ineg.shape[0], np.int64)
            mask = np.empty(W, np.uint64)
            k = 0
            for t in range(ineg.shape[0]):
                m = ineg[t]
                pc = 0
                for w in range(W):
                    x = Z[p, w] & Z[m, w]
                    mask[w] = x
                    while x:
                        x &= x - np.uint64(1)
                        pc += 1
                if pc < min_bits:
                    continue
                ok = True
                for r in range(R):
                    if r == p or r == m:
                        continue
                    cont = True
                    for w in range(W):
                        if (Z[r, w] & mask[w]) != mask[w]:
                            cont = False
                            break
                    if cont:
                        ok = False
                        break
                if ok:
                    out[k] = t
                    k += 1
            return out[:k]

        _adjacent_numba = _adjacent_numba_impl
    except ImportError:  # pragma: no cover
        _adjacent_numba = None


def backend() -> str:
    return "numba" if _adjacent_numba is not None else "numpy"


def adjacent_negatives(Z: np.ndarray, p: int, ineg: np.ndarray, min_bits: int,
                       force: str | None = None) -> np.ndarray:
    """Positions into ineg whose ray is adjacent to ray p.

    Adjacency is the combinatorial test: no ray other than the two parents has
    a zero set containing the intersection of theirs.  min_bits is the valid
    cardinality prefilter (pointed dimension minus 2).
    """
    use = force or backend()
    if use == "numba" and _adjacent_numba is not None:
        res = _adjacent_numba(Z, p, ineg, min_bits)
    else:
        res = _adjacent_numpy(Z, p, ineg, min_bits)
    return np.asarray(res, dtype=np.int64)


def pack_zsets(zsets, words: int) -> np.ndarray:
    """Python-int bitmasks -> (R, words) uint64 matrix."""
    Z = np.zeros((len(zsets), words), dtype=np.uint64)
    full = (1 << 64) - 1
    for i, z in enumerate(zsets):
        for w in range(words):
            Z[i, w] = (z >> (64 * w)) & full
    return Z
