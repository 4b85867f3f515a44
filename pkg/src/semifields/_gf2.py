"""Bit-packed GF(2) elimination for group-developed incidence matrices."""
from __future__ import annotations

import numba as nb
import numpy as np


@nb.njit(cache=True)
def _lowbit(v):
    b = 0
    while (v & np.uint64(1)) == 0:
        v >>= np.uint64(1)
        b += 1
    return b


@nb.njit(cache=True)
def _eliminate_dev_rows(points, nbits, basis, slot_of, rank, g_start):
    """Insert rows g_start, g_start+1, ... into a reduced row echelon basis.

    Row g has ones at columns g ^ pt for pt in points.  Because the basis is
    fully reduced, a fresh row is cleared by XOR-ing only the basis rows whose
    pivot columns it hits, at most len(points) of them.  Stops when the basis
    storage is full; returns (rank, next row).
    """
    N = 1 << nbits
    W = basis.shape[1]
    cap = basis.shape[0]
    row = np.zeros(W, np.uint64)
    g = g_start
    while g < N:
        if rank == cap:
            return rank, g
        row[:] = 0
        for pt in points:
            c = pt ^ g
            row[c >> 6] ^= np.uint64(1) << np.uint64(c & 63)
        for pt in points:
            s = slot_of[pt ^ g]
            if s >= 0:
                br = basis[s]
                for k in range(W):
                    row[k] ^= br[k]
        w = 0
        while w < W and row[w] == 0:
            w += 1
        if w < W:
            c = (w << 6) + _lowbit(row[w])
            cw = c >> 6
            cb = np.uint64(1) << np.uint64(c & 63)
            for s in range(rank):
                if basis[s, cw] & cb:
                    br = basis[s]
                    for k in range(W):
                        br[k] ^= row[k]
            basis[rank, :] = row
            slot_of[c] = rank
            rank += 1
        g += 1
    return rank, g


def dev_rank(points: np.ndarray, nbits: int, initial_capacity: int = 4096) -> int:
    """GF(2) rank of the matrix A[u, v] = [u ^ v in points] on {0,1}^nbits."""
    N = 1 << nbits
    points = np.asarray(points, dtype=np.int64)
    if nbits < 6:
        # pad the column space to one full word; padded columns stay zero
        words = 1
    else:
        words = N >> 6
    cap = min(N, initial_capacity)
    basis = np.zeros((cap, words), dtype=np.uint64)
    slot_of = np.full(max(N, 64), -1, dtype=np.int64)
    rank, g = 0, 0
    while True:
        rank, g = _eliminate_dev_rows(points, nbits, basis, slot_of, rank, g)
        if g >= N or rank == N:
            return int(rank)
        grown = np.zeros((min(N, 2 * basis.shape[0]), words), dtype=np.uint64)
        grown[:rank] = basis[:rank]
        basis = grown
