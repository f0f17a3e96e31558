"""Evaluation codes from defining sets, and the subspace-search method
for their generalized Hamming weights.

The code attached to a defining set D in F_q^m is the image of
x -> (x . d for d in D), one coordinate per defining vector, columns in
ascending code order.  Its dimension is m minus the dimension of
K = (span D) orthogonal.

The weight d_r equals n minus the largest value of |D meet H-perp| over
r-dimensional subspaces H meeting K trivially.  Writing D as the whole
set or the complement of the union U of coordinate subspaces, both cases
reduce to counting f(H) = |U meet H-perp|:

    without complement flag:  d_r = n - max f(H)
    with complement flag:     d_r = n - q^(m-r) + min f(H)

since |H-perp| = q^(m-r) splits between the union and its complement.
The search therefore scans whichever of the two sides is smaller, and
never constructs H-perp itself: v lies in H-perp exactly when B v = 0
for the basis matrix B of H, which batches into integer matmuls.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .config import check_cap
from .field import Field, op_tables
from .linalg import (
    Subspace,
    gaussian_binomial,
    subspace_bases_array,
    subspace_from_vectors,
)
from .simplicial import (
    ComplexSpec,
    cardinality,
    codes_to_matrix,
    k_space,
    member_codes,
)

_CHUNK = 4096


@dataclass(eq=False)
class LinearCode:
    """A concrete generator matrix together with its defining data."""

    field: Field
    spec: ComplexSpec
    codes: tuple
    generator: np.ndarray  # m rows, one column per defining vector
    n: int
    k: int
    kernel: Subspace  # orthogonal complement of the span of the columns


def build_code(field: Field, spec: ComplexSpec, max_enum=None) -> LinearCode:
    codes = member_codes(spec, field.q, max_enum)
    if not codes:
        raise ValueError(f"defining set {spec.describe()} is empty")
    defining = codes_to_matrix(codes, field.q, spec.m)
    kernel = k_space(spec, field, max_enum)
    k = spec.m - kernel.dim
    return LinearCode(
        field=field,
        spec=spec,
        codes=tuple(codes),
        generator=defining.T.copy(),
        n=len(codes),
        k=k,
        kernel=kernel,
    )


@dataclass(frozen=True)
class WeightHierarchy:
    """d_1 < d_2 < ... < d_k with a provenance tag per entry."""

    spec: ComplexSpec
    n: int
    k: int
    values: tuple
    provenance: tuple
    method: str

    def __post_init__(self):
        if len(self.values) != self.k:
            raise ValueError(
                f"expected {self.k} weights, got {len(self.values)}"
            )
        if len(self.provenance) != len(self.values):
            raise ValueError("one provenance tag per weight is required")
        for a, b in zip(self.values, self.values[1:]):
            if not a < b:
                raise ValueError(f"weights must strictly increase, got {self.values}")
        if self.values and not 1 <= self.values[0]:
            raise ValueError("weights must be positive")
        if self.values and self.values[-1] > self.n:
            raise ValueError(
                f"top weight {self.values[-1]} exceeds length {self.n}"
            )


# ----------------------------------------------------------------------
# subspace search


@dataclass(eq=False)
class _SearchContext:
    field: Field
    spec: ComplexSpec
    n: int
    k: int
    kernel: Subspace
    small: np.ndarray  # (Ns, m) matrix of the smaller side
    small_is_union: bool
    kernel_vectors: np.ndarray  # nonzero vectors of the kernel, (t, m)
    max_enum: int | None = None


def _nonzero_span_vectors(field: Field, sub: Subspace, max_enum=None) -> np.ndarray:
    """Every nonzero vector of a subspace, as an array of element codes."""
    if sub.dim == 0:
        return np.zeros((0, sub.ambient), dtype=np.int64)
    q = field.q
    check_cap(q**sub.dim, max_enum, what="kernel vectors")
    coeffs = codes_to_matrix(range(1, q**sub.dim), q, sub.dim)
    basis = np.asarray(sub.basis, dtype=np.int64)
    return _matmul(field, coeffs, basis)


def _matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a @ b in the field; a is (..., s), b is (s, t)."""
    if field.e == 1:
        return (a @ b) % field.p
    add, mul = op_tables(field)
    acc = np.zeros(a.shape[:-1] + (b.shape[1],), dtype=np.int64)
    for j in range(a.shape[-1]):
        term = mul[a[..., j, None], b[None, j, :]]
        acc = add[acc, term]
    return acc


def _orthogonal_counts(field: Field, bases: np.ndarray, vectors: np.ndarray):
    """For each candidate basis B in the stack, count vectors v with Bv = 0."""
    if field.e == 1:
        prods = (bases @ vectors.T) % field.p
    else:
        add, mul = op_tables(field)
        c, r, m = bases.shape
        acc = np.zeros((c, r, vectors.shape[0]), dtype=np.int64)
        for j in range(m):
            term = mul[bases[:, :, j, None], vectors[None, None, :, j]]
            acc = add[acc, term]
        prods = acc
    zeros = ~np.any(prods, axis=1)
    return zeros.sum(axis=1)


def _valid_mask(field: Field, bases: np.ndarray, kernel_vectors: np.ndarray):
    """True where the candidate meets the kernel only in zero.

    A vector sits in the row space of an RREF basis exactly when the
    combination read off at the pivot columns reproduces it, so one
    reconstruction per (candidate, kernel vector) pair settles the mask.
    Pivot columns are recovered per candidate as the first nonzero entry
    of each basis row, which RREF guarantees is a leading one.
    """
    c, r, m = bases.shape
    if kernel_vectors.shape[0] == 0:
        return np.ones(c, dtype=bool)
    pivcols = np.argmax(bases != 0, axis=2)  # (c, r)
    t = kernel_vectors.shape[0]
    coeffs = kernel_vectors[:, pivcols]  # (t, c, r)
    coeffs = np.transpose(coeffs, (1, 0, 2))  # (c, t, r)
    if field.e == 1:
        recon = np.einsum("ctr,crm->ctm", coeffs, bases) % field.p
    else:
        add, mul = op_tables(field)
        recon = np.zeros((c, t, m), dtype=np.int64)
        for i in range(r):
            term = mul[coeffs[:, :, i, None], bases[:, None, i, :]]
            recon = add[recon, term]
    inside = np.all(recon == kernel_vectors[None, :, :], axis=2)  # (c, t)
    return ~inside.any(axis=1)


def _search_context(field: Field, spec: ComplexSpec, max_enum=None) -> _SearchContext:
    union_spec = ComplexSpec(m=spec.m, sets=spec.sets, complement=False)
    compl_spec = ComplexSpec(m=spec.m, sets=spec.sets, complement=True)
    q = field.q
    union_size = cardinality(union_spec, q)
    compl_size = q**spec.m - union_size
    n = compl_size if spec.complement else union_size
    if n == 0:
        raise ValueError(f"defining set {spec.describe()} is empty")
    small_spec = union_spec if union_size <= compl_size else compl_spec
    small = codes_to_matrix(member_codes(small_spec, q, max_enum), q, spec.m)
    kernel = k_space(spec, field, max_enum)
    return _SearchContext(
        field=field,
        spec=spec,
        n=n,
        k=spec.m - kernel.dim,
        kernel=kernel,
        small=small,
        small_is_union=not small_spec.complement,
        kernel_vectors=_nonzero_span_vectors(field, kernel, max_enum),
        max_enum=max_enum,
    )


def _search(ctx: _SearchContext, r: int, threads: int = 1):
    """Best f over valid candidates: (value, index of first optimum)."""
    field, spec = ctx.field, ctx.spec
    q, m = field.q, spec.m
    total = gaussian_binomial(m, r, q)
    check_cap(total, ctx.max_enum, what=f"{r}-dim subspaces of dimension-{m} space")
    bases = subspace_bases_array(q, m, r)
    per_h = q ** (m - r)
    maximize = not spec.complement
    # the zero vector always lands in the union side, never the complement
    bound = per_h if maximize else 1

    def score(chunk):
        counts = _orthogonal_counts(field, chunk, ctx.small)
        f = counts if ctx.small_is_union else per_h - counts
        valid = _valid_mask(field, chunk, ctx.kernel_vectors)
        return f, valid

    best = None
    best_idx = None

    def absorb(f, valid, offset):
        nonlocal best, best_idx
        if not valid.any():
            return False
        vals = f[valid]
        idxs = np.flatnonzero(valid)
        pos = int(np.argmax(vals)) if maximize else int(np.argmin(vals))
        cand = int(vals[pos])
        better = best is None or (cand > best if maximize else cand < best)
        if better:
            best = cand
            best_idx = offset + int(idxs[pos])
        return best == bound

    starts = range(0, total, _CHUNK)
    if threads <= 1:
        for s in starts:
            f, valid = score(bases[s : s + _CHUNK])
            if absorb(f, valid, s):
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [(s, pool.submit(score, bases[s : s + _CHUNK])) for s in starts]
            for s, fut in futures:  # fixed order keeps the result thread-safe
                f, valid = fut.result()
                if absorb(f, valid, s):
                    break
    if best is None:
        raise ValueError(
            f"no {r}-dim subspace avoids the kernel; r exceeds the dimension {ctx.k}"
        )
    return best, best_idx


def ghw_prop1(field: Field, spec: ComplexSpec, r: int, threads: int = 1, max_enum=None):
    """r-th generalized Hamming weight by exhaustive subspace search.

    Returns (value, witness) where the witness is the first subspace in
    canonical order attaining the optimum.
    """
    ctx = _search_context(field, spec, max_enum)
    return _ghw_from_context(ctx, r, threads)


def _ghw_from_context(ctx: _SearchContext, r: int, threads: int = 1):
    if not 1 <= r <= ctx.k:
        raise ValueError(f"r must lie in 1..{ctx.k}, got {r}")
    best, best_idx = _search(ctx, r, threads)
    q, m = ctx.field.q, ctx.spec.m
    if ctx.spec.complement:
        value = ctx.n - q ** (m - r) + best
    else:
        value = ctx.n - best
    bases = subspace_bases_array(q, m, r)
    rows = [tuple(int(x) for x in row) for row in bases[best_idx]]
    witness = subspace_from_vectors(ctx.field, rows, m)
    return value, witness


def hierarchy_prop1(
    field: Field, spec: ComplexSpec, threads: int = 1, max_enum=None
) -> WeightHierarchy:
    """Full weight hierarchy by subspace search, one search per rank."""
    ctx = _search_context(field, spec, max_enum)
    values = []
    for r in range(1, ctx.k + 1):
        value, _ = _ghw_from_context(ctx, r, threads)
        values.append(value)
    return WeightHierarchy(
        spec=spec,
        n=ctx.n,
        k=ctx.k,
        values=tuple(values),
        provenance=tuple("prop1-search" for _ in values),
        method="prop1-search",
    )
