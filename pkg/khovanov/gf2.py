"""
Rank over F2.

Matrices arrive as rows of column index sets or as parallel (row, column)
entry arrays. Blocks below DENSE_LIMIT are bit-packed with numpy and
eliminated by XOR-ing whole packed rows; larger ones go through integer bitsets.
"""
import logging

import numpy as np

logger = logging.getLogger(__name__)

# rows * columns above which packing would allocate too much
DENSE_LIMIT = 64_000_000


def pack_rows(rows, n_cols):
    """Pack rows given as iterables of column indices into a uint8 bit matrix"""
    dense = np.zeros((len(rows), max(n_cols, 1)), dtype=np.uint8)
    for r, row in enumerate(rows):
        for c in row:
            dense[r, c] ^= 1
    return np.packbits(dense, axis=1)


def packed_rank(packed, n_cols):
    """Gaussian elimination on a packed matrix; the argument is consumed"""
    m = packed.shape[0]
    if m == 0 or n_cols == 0:
        return 0
    pivot_row = 0
    for col in range(n_cols):
        byte, mask = divmod(col, 8)
        mask = np.uint8(0x80 >> mask)
        hits = np.nonzero(packed[pivot_row:, byte] & mask)[0]
        if hits.size == 0:
            continue
        found = pivot_row + hits[0]
        if found != pivot_row:
            packed[[pivot_row, found]] = packed[[found, pivot_row]]
        below = pivot_row + 1 + np.nonzero(packed[pivot_row + 1:, byte] & mask)[0]
        if below.size:
            packed[below] ^= packed[pivot_row]
        pivot_row += 1
        if pivot_row == m:
            break
    return pivot_row


def rank_of_rows(rows, n_cols, dense_limit=DENSE_LIMIT):
    """Rank of a matrix whose rows are sets of column indices"""
    rows = [row for row in rows if row]
    if not rows:
        return 0
    if len(rows) * n_cols <= dense_limit:
        return packed_rank(pack_rows(rows, n_cols), n_cols)
    return bitset_rank(rows)


def bitset_rank(rows):
    """Elimination with Python integers as bitsets, keyed by leading bit"""
    pivots = {}
    for row in rows:
        value = 0
        for c in row:
            value ^= 1 << c
        while value:
            lead = value.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = value
                break
            value ^= pivots[lead]
    return len(pivots)


def rank_of_pairs(row_ids, cols, n_rows, n_cols, dense_limit=DENSE_LIMIT):
    """
    Rank of the n_rows x n_cols matrix with a 1 at every (row_ids[e], cols[e]);
    repeated entries cancel.
    """
    row_ids = np.asarray(row_ids, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    if row_ids.size == 0 or n_rows == 0 or n_cols == 0:
        return 0
    if n_rows * n_cols <= dense_limit:
        packed = np.zeros((n_rows, (n_cols + 7) // 8), dtype=np.uint8)
        bits = (0x80 >> (cols & 7)).astype(np.uint8)
        np.bitwise_xor.at(packed, (row_ids, cols >> 3), bits)
        return packed_rank(packed, n_cols)
    rows = [set() for _ in range(n_rows)]
    for r, c in zip(row_ids.tolist(), cols.tolist()):
        rows[r] ^= {c}
    return bitset_rank(row for row in rows if row)
