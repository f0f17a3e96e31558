"""Row reduction, subspace objects, and canonical subspace enumeration.

Vectors are tuples of element codes.  A subspace is stored by its reduced
row echelon basis, which makes equality a tuple comparison and gives every
subspace of F_q^m exactly one representation.

Enumeration order matters for reproducibility: subspaces stream in
(pivot-column set, free-entry code) order, pivot sets lexicographic,
free entries filled row major with the earliest cell most significant.
The count per pivot set is a power of q and the total is the Gaussian
binomial, which doubles as a cheap cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .config import check_cap
from .field import Field


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^ambient held as a reduced row echelon basis."""

    ambient: int
    dim: int
    basis: tuple
    pivots: tuple

    def __iter__(self):
        return iter(self.basis)


def rref(field: Field, rows):
    """Reduced row echelon form of an iterable of equal-length vectors.

    Returns (rows, rank, pivots) where rows contains only the nonzero
    rows.  An empty input (or all-zero input) gives ((), 0, ()).
    """
    mat = [list(row) for row in rows]
    if not mat:
        return (), 0, ()
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        lead = mat[rank][col]
        if lead != 1:
            inv = field.inv(lead)
            mat[rank] = [field.mul(inv, x) for x in mat[rank]]
        for i in range(len(mat)):
            c = mat[i][col]
            if i != rank and c != 0:
                mat[i] = [
                    field.sub(x, field.mul(c, y)) for x, y in zip(mat[i], mat[rank])
                ]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    out = tuple(tuple(row) for row in mat[:rank])
    return out, rank, tuple(pivots)


def subspace_from_vectors(field: Field, vectors, ambient: int) -> Subspace:
    """Span of the given vectors, canonicalized."""
    basis, rank, pivots = rref(field, vectors)
    return Subspace(ambient=ambient, dim=rank, basis=basis, pivots=pivots)


def zero_subspace(ambient: int) -> Subspace:
    return Subspace(ambient=ambient, dim=0, basis=(), pivots=())


def contains(field: Field, sub: Subspace, vec) -> bool:
    """Membership test against an RREF basis.

    The only candidate coordinates are the entries of vec at the pivot
    columns, so one reconstruction settles it.
    """
    if sub.dim == 0:
        return all(x == 0 for x in vec)
    recon = [0] * sub.ambient
    for i, p in enumerate(sub.pivots):
        c = vec[p]
        if c != 0:
            row = sub.basis[i]
            recon = [field.add(x, field.mul(c, y)) for x, y in zip(recon, row)]
    return tuple(recon) == tuple(vec)


def null_space(field: Field, rows, m: int) -> Subspace:
    """Right kernel {x in F_q^m : row . x = 0 for every row}."""
    reduced, rank, pivots = rref(field, rows)
    pivset = set(pivots)
    free = [j for j in range(m) if j not in pivset]
    vectors = []
    for f in free:
        v = [0] * m
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = field.neg(reduced[i][f])
        vectors.append(v)
    return subspace_from_vectors(field, vectors, m)


def dual(field: Field, sub: Subspace) -> Subspace:
    """Orthogonal complement under the standard bilinear form."""
    return null_space(field, sub.basis, sub.ambient)


def sum_space(field: Field, a: Subspace, b: Subspace) -> Subspace:
    return subspace_from_vectors(field, a.basis + b.basis, a.ambient)


def intersection(field: Field, a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: reduce rows (u|u) for u in A and (v|0) for v in B;
    rows whose left half vanishes carry an intersection basis on the right."""
    m = a.ambient
    block = [tuple(u) + tuple(u) for u in a.basis]
    block += [tuple(v) + (0,) * m for v in b.basis]
    reduced, _, _ = rref(field, block)
    inter = [row[m:] for row in reduced if all(x == 0 for x in row[:m])]
    return subspace_from_vectors(field, inter, m)


def support(v) -> frozenset:
    """1-based coordinates where v is nonzero."""
    return frozenset(i + 1 for i, x in enumerate(v) if x != 0)


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^m, exact.

    Each prefix of the product is itself a Gaussian binomial, so the
    stepwise integer division never truncates.
    """
    if r < 0 or r > m:
        return 0
    count = 1
    for i in range(r):
        count = count * (q ** (m - i) - 1) // (q ** (i + 1) - 1)
    return count


@lru_cache(maxsize=32)
def subspace_bases_array(q: int, m: int, r: int):
    """All canonical r-by-m RREF bases over GF(q) as one int64 array.

    Shape (N, r, m) with N the Gaussian binomial.  Entries are element
    codes; the construction is purely combinatorial so it serves prime
    and extension fields alike.  The array is frozen and shared, callers
    must not write to it.
    """
    total = gaussian_binomial(m, r, q)
    out = np.zeros((total, r, m), dtype=np.int64)
    pos = 0
    for pivots in combinations(range(m), r):
        pivset = set(pivots)
        free = [
            (i, j)
            for i in range(r)
            for j in range(pivots[i] + 1, m)
            if j not in pivset
        ]
        nfree = len(free)
        count = q**nfree
        block = np.zeros((count, r, m), dtype=np.int64)
        for i, p in enumerate(pivots):
            block[:, i, p] = 1
        if nfree:
            codes = np.arange(count, dtype=np.int64)
            for idx, (i, j) in enumerate(free):
                block[:, i, j] = (codes // q ** (nfree - 1 - idx)) % q
        out[pos : pos + count] = block
        pos += count
    assert pos == total
    out.setflags(write=False)
    return out


def enumerate_subspaces(field: Field, m: int, r: int, max_enum=None):
    """Yield every r-dimensional subspace of F_q^m in canonical order.

    Refuses to start when the subspace count exceeds the enumeration cap.
    """
    total = gaussian_binomial(m, r, field.q)
    check_cap(total, max_enum, what=f"{r}-dim subspaces of dimension-{m} space")
    bases = subspace_bases_array(field.q, m, r)
    for block in bases:
        basis = tuple(tuple(int(x) for x in row) for row in block)
        pivots = tuple(next(j for j, x in enumerate(row) if x != 0) for row in basis)
        yield Subspace(ambient=m, dim=r, basis=basis, pivots=pivots)
