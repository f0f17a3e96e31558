"""Brute-force baselines that trust nothing but definitions.

The weight oracle walks every r-dimensional subcode: message subspaces
are enumerated through canonical bases of F_q^k, each is pushed through
a full-rank generator, and the support is counted column by column.  No
duality, no counting identities, no shortcuts besides batching the
matrix products.  Deliberately boring, so it can sit on the other side
of an equality check from the closed forms and the subspace search.

The avoidance oracle answers the same question as the paired-extension
construction: the largest dimension of a subspace meeting each of the
given subspaces only in zero.  It enumerates every subspace of the
ambient sum, largest dimension first, and tests disjointness on raw
vector sets.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .code import LinearCode, WeightHierarchy, _matmul
from .config import check_cap
from .field import Field
from .linalg import (
    Subspace,
    gaussian_binomial,
    rref,
    subspace_bases_array,
    subspace_from_vectors,
)
from .simplicial import codes_to_matrix

_CHUNK = 4096


def ghw_definitional(code: LinearCode, r: int, max_enum=None) -> int:
    """Smallest support size over all r-dimensional subcodes."""
    if not 1 <= r <= code.k:
        raise ValueError(f"r must lie in 1..{code.k}, got {r}")
    field = code.field
    rows = [tuple(int(x) for x in row) for row in code.generator]
    reduced, rank, _ = rref(field, rows)
    assert rank == code.k
    gen = np.asarray(reduced, dtype=np.int64)  # (k, n)
    total = gaussian_binomial(code.k, r, field.q)
    check_cap(total, max_enum, what=f"{r}-dim subcodes")
    bases = subspace_bases_array(field.q, code.k, r)
    best = None
    for s in range(0, total, _CHUNK):
        chunk = bases[s : s + _CHUNK]
        words = _matmul(field, chunk, gen)  # (c, r, n)
        supports = np.any(words != 0, axis=1).sum(axis=1)
        low = int(supports.min())
        if best is None or low < best:
            best = low
    return best


def hierarchy_definitional(code: LinearCode, max_enum=None) -> WeightHierarchy:
    values = tuple(ghw_definitional(code, r, max_enum) for r in range(1, code.k + 1))
    return WeightHierarchy(
        spec=code.spec,
        n=code.n,
        k=code.k,
        values=values,
        provenance=tuple("definitional" for _ in values),
        method="definitional",
    )


# ----------------------------------------------------------------------
# exhaustive subspace avoidance


@lru_cache(maxsize=8)
def _subspaces_by_dim(q: int, s: int):
    """All subspaces of F_q^s as (dim, frozenset of nonzero vector codes),
    dimension ascending, canonical order within a dimension.  Prime q only;
    the matmul below is plain modular arithmetic."""
    out = [(0, frozenset())]
    weights = q ** np.arange(s - 1, -1, -1, dtype=np.int64)
    for r in range(1, s + 1):
        coeffs = codes_to_matrix(range(1, q**r), q, r)  # (q^r - 1, r)
        for block in subspace_bases_array(q, s, r):
            vecs = (coeffs @ block) % q
            out.append((r, frozenset(int(c) for c in vecs @ weights)))
    return tuple(out)


def _span_codes(field: Field, sub: Subspace, pivots, s: int):
    """Nonzero vectors of a subspace, written in coordinates of the ambient
    sum space and packed into integer codes."""
    q = field.q
    if sub.dim == 0:
        return frozenset()
    coeffs = codes_to_matrix(range(1, q**sub.dim), q, sub.dim)
    basis = np.asarray(sub.basis, dtype=np.int64)
    vecs = _matmul(field, coeffs, basis)  # (q^dim - 1, ambient)
    coords = vecs[:, list(pivots)]  # coefficients against the sum space basis
    weights = q ** np.arange(s - 1, -1, -1, dtype=np.int64)
    return frozenset(int(c) for c in coords @ weights)


def lemma1_brute_multi(field: Field, spaces, max_enum=None) -> int:
    """Largest dimension of a subspace of the sum meeting every given
    subspace only in zero, by exhaustive search."""
    if not spaces:
        raise ValueError("at least one subspace is required")
    m = spaces[0].ambient
    if any(sp.ambient != m for sp in spaces):
        raise ValueError("subspaces live in different ambient spaces")
    total = subspace_from_vectors(
        field, [row for sp in spaces for row in sp.basis], m
    )
    s = total.dim
    q = field.q
    count = sum(gaussian_binomial(s, r, q) for r in range(s + 1))
    check_cap(count, max_enum, what="candidate subspaces")
    if field.e > 1:
        # vector generation below leans on prime arithmetic
        raise NotImplementedError("avoidance search only runs over prime fields")
    forbidden = [_span_codes(field, sp, total.pivots, s) for sp in spaces]
    best = 0
    for dim, codes in _subspaces_by_dim(q, s):
        if dim <= best:
            continue
        if all(codes.isdisjoint(f) for f in forbidden):
            best = dim
    return best


def lemma1_brute(field: Field, u_space: Subspace, v_space: Subspace, max_enum=None) -> int:
    """Two-subspace case of the exhaustive avoidance search."""
    return lemma1_brute_multi(field, [u_space, v_space], max_enum)
