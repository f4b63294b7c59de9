"""Vectorized linear algebra over F_q via the field's lookup tables.

Matrices are numpy uint8 arrays of element encodings.  The subspace
enumeration walks reduced row echelon forms: pivot column sets in
lexicographic order, free entries in odometer order (last position
fastest), which fixes a canonical global index for every subspace.
"""

from __future__ import annotations

import itertools

import numpy as np

from .gf import FieldSpec, make_field
from .runtime import run_chunks, split_chunks


def matmul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product over F_q; a has shape (..., k), b has shape (k, n)."""
    add, mul = field.add_table, field.mul_table
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    out = np.zeros(a.shape[:-1] + (b.shape[1],), dtype=np.uint8)
    for t in range(b.shape[0]):
        out = add[out, mul[a[..., t][..., None], b[t][(None,) * (a.ndim - 1)]]]
    return out


def row_reduce(field: FieldSpec, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    add, mul = field.add_table, field.mul_table
    inv, neg = field.inv_table, field.neg_table
    m = np.array(mat, dtype=np.uint8, copy=True)
    rows, cols = m.shape
    pivots: list[int] = []
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        nz = np.nonzero(m[pr:, c])[0]
        if nz.size == 0:
            continue
        swap = pr + int(nz[0])
        if swap != pr:
            m[[pr, swap]] = m[[swap, pr]]
        m[pr] = mul[inv[m[pr, c]], m[pr]]
        for rr in range(rows):
            if rr != pr and m[rr, c]:
                m[rr] = add[m[rr], mul[neg[m[rr, c]], m[pr]]]
        pivots.append(c)
        pr += 1
    return m, pivots


def rank(field: FieldSpec, mat: np.ndarray) -> int:
    return len(row_reduce(field, mat)[1])


def eval_matrix(field: FieldSpec, mons, points) -> np.ndarray:
    """Rows indexed by monomials, columns by points; entry = value."""
    mons = list(mons)
    points = list(points)
    n = len(points)
    if not mons:
        return np.zeros((0, n), dtype=np.uint8)
    coords = np.array(points, dtype=np.uint8).T  # (vars, n)
    max_exp = max((max(mon) for mon in mons if mon), default=0)
    pows = field.pow_table(max_exp)
    mul = field.mul_table
    out = np.empty((len(mons), n), dtype=np.uint8)
    for idx, mon in enumerate(mons):
        w = np.ones(n, dtype=np.uint8)
        for t, a in enumerate(mon):
            if a:
                w = mul[w, pows[coords[t], a]]
        out[idx] = w
    return out


def free_positions(pivots: tuple[int, ...], k: int) -> tuple[list[int], list[int]]:
    """Row/column indices of the unconstrained entries of a pivot pattern."""
    taken = set(pivots)
    rows, cols = [], []
    for i, p in enumerate(pivots):
        for c in range(p + 1, k):
            if c not in taken:
                rows.append(i)
                cols.append(c)
    return rows, cols


def pivot_patterns(k: int, r: int) -> list[tuple[int, ...]]:
    """All pivot column sets, lexicographic."""
    return list(itertools.combinations(range(k), r))


def pattern_size(pivots: tuple[int, ...], k: int, q: int) -> int:
    return q ** len(free_positions(pivots, k)[0])


def rref_batches(q: int, k: int, pivots: tuple[int, ...], cap: int = 4096):
    """Yield (offset, block) pairs covering every RREF matrix with the
    given pivot columns; block has shape (fill count, r, k)."""
    rows, cols = free_positions(pivots, k)
    nf = len(rows)
    total = q**nf
    base = np.zeros((len(pivots), k), dtype=np.uint8)
    for i, p in enumerate(pivots):
        base[i, p] = 1
    weights = q ** np.arange(nf - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, cap):
        idx = np.arange(start, min(start + cap, total), dtype=np.int64)
        block = np.repeat(base[None, :, :], len(idx), axis=0)
        if nf:
            block[:, rows, cols] = ((idx[:, None] // weights[None, :]) % q).astype(np.uint8)
        yield start, block


def zero_column_counts(field: FieldSpec, blocks: np.ndarray, mat: np.ndarray) -> np.ndarray:
    """For each (r, k) slice of blocks, the number of columns of
    slice @ mat that vanish identically."""
    prod = matmul(field, blocks, mat)  # (..., r, n)
    return (prod == 0).all(axis=-2).sum(axis=-1)


def _zero_scan_chunk(args):
    q, mat, k, combos, combo_ids, offsets, bounds = args
    field = make_field(q)
    best_count, best_gidx, best_rref = -1, -1, None
    enumerated = 0
    violations = []
    for pos, pivots in enumerate(combos):
        limit = None if bounds is None else bounds[pos]
        for off, block in rref_batches(q, k, pivots):
            counts = zero_column_counts(field, block, mat)
            enumerated += counts.size
            arg = int(np.argmax(counts))
            count = int(counts[arg])
            if count > best_count:
                best_count = count
                best_gidx = offsets[pos] + off + arg
                best_rref = block[arg].copy()
            if limit is not None:
                for oi in np.nonzero(counts > limit)[0]:
                    violations.append((combo_ids[pos], offsets[pos] + off + int(oi),
                                       int(counts[oi]), limit))
    return best_count, best_gidx, best_rref, enumerated, violations


def scan_max_zero_columns(q: int, mat: np.ndarray, r: int, workers: int = 1, bounds=None):
    """Maximize the zero-column count of B @ mat over every r-dimensional
    row space B of F_q^k, k = mat rows.

    Returns (count, rref witness, subspaces enumerated, violations); the
    witness is the earliest maximizer in the canonical enumeration, so the
    result does not depend on the worker count.  bounds, when given, is a
    per-pivot-pattern ceiling; subspaces exceeding it are reported as
    violations (combo id, global index, count, ceiling).
    """
    k = mat.shape[0]
    combos = pivot_patterns(k, r)
    sizes = [pattern_size(c, k, q) for c in combos]
    offsets = list(itertools.accumulate(sizes, initial=0))
    chunked = split_chunks(list(range(len(combos))), workers)
    args = [(q, mat, k,
             [combos[i] for i in ids], ids, [offsets[i] for i in ids],
             None if bounds is None else [bounds[i] for i in ids])
            for ids in chunked]
    best_count, best_gidx, best_rref = -1, -1, None
    enumerated = 0
    violations = []
    for count, gidx, rref, part, viol in run_chunks(_zero_scan_chunk, args, workers):
        enumerated += part
        if count > best_count or (count == best_count and gidx < best_gidx):
            best_count, best_gidx, best_rref = count, gidx, rref
        violations.extend(viol)
    violations.sort(key=lambda v: v[1])
    return best_count, best_rref, enumerated, violations
