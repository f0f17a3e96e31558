import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ghw.config import ResourceCapError
from ghw.field import field_new
from ghw.linalg import (
    contains,
    dual,
    enumerate_subspaces,
    gaussian_binomial,
    intersection,
    null_space,
    rref,
    subspace_bases_array,
    subspace_from_vectors,
    sum_space,
    support,
)

F2 = field_new(2)
F3 = field_new(3)
F4 = field_new(2, 2)


# ---- row reduction ----------------------------------------------------


def test_rref_known_matrix():
    # determinant 1 mod 3, so the reduction must reach the identity
    rows, rank, pivots = rref(F3, [(1, 2, 1), (2, 1, 0), (1, 1, 1)])
    assert rank == 3
    assert pivots == (0, 1, 2)
    assert rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_rref_scalar_multiple_row():
    # the second row is twice the first, so only two pivots survive
    rows, rank, pivots = rref(F3, [(1, 2, 1), (2, 1, 2), (0, 0, 1)])
    assert rank == 2
    assert pivots == (0, 2)
    assert rows == ((1, 2, 0), (0, 0, 1))


def test_rref_drops_dependent_rows():
    rows, rank, pivots = rref(F2, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert rank == 2
    assert pivots == (0, 1)
    assert rows == ((1, 0, 1), (0, 1, 1))


def test_rref_empty_and_zero():
    assert rref(F2, []) == ((), 0, ())
    assert rref(F2, [(0, 0), (0, 0)]) == ((), 0, ())


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(*[st.integers(0, 2)] * 4),
        min_size=1,
        max_size=5,
    )
)
def test_rref_idempotent_over_gf3(rows):
    reduced, rank, pivots = rref(F3, rows)
    assert len(pivots) == rank == len(reduced)
    again, rank2, pivots2 = rref(F3, reduced)
    assert (again, rank2, pivots2) == (reduced, rank, pivots)
    for i, p in enumerate(pivots):
        assert reduced[i][p] == 1
        assert all(reduced[j][p] == 0 for j in range(rank) if j != i)


# ---- subspace algebra -------------------------------------------------


def test_null_space_annihilates():
    rows = [(1, 1, 0, 1), (0, 1, 1, 0)]
    ker = null_space(F2, rows, 4)
    assert ker.dim == 2
    for v in ker.basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) % 2 == 0


def test_dual_is_involutive():
    rng = random.Random(7)
    for _ in range(20):
        vecs = [tuple(rng.randrange(3) for _ in range(4)) for _ in range(2)]
        s = subspace_from_vectors(F3, vecs, 4)
        assert dual(F3, dual(F3, s)) == s
        assert dual(F3, s).dim == 4 - s.dim


def test_contains_matches_explicit_span():
    s = subspace_from_vectors(F2, [(1, 0, 1), (0, 1, 1)], 3)
    members = {(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 0)}
    for v in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]:
        assert contains(F2, s, v) == (v in members)


def test_intersection_and_sum_dimensions():
    rng = random.Random(11)
    for _ in range(30):
        u = subspace_from_vectors(
            F3, [tuple(rng.randrange(3) for _ in range(5)) for _ in range(2)], 5
        )
        v = subspace_from_vectors(
            F3, [tuple(rng.randrange(3) for _ in range(5)) for _ in range(2)], 5
        )
        inter = intersection(F3, u, v)
        total = sum_space(F3, u, v)
        assert u.dim + v.dim == inter.dim + total.dim
        for w in inter.basis:
            assert contains(F3, u, w) and contains(F3, v, w)


def test_intersection_over_extension_field():
    u = subspace_from_vectors(F4, [(1, 0, 2), (0, 1, 3)], 3)
    v = subspace_from_vectors(F4, [(1, 0, 2)], 3)
    inter = intersection(F4, u, v)
    assert inter == v


def test_support_is_one_based():
    assert support((0, 1, 0, 2)) == {2, 4}
    assert support((0, 0)) == frozenset()


# ---- counting and enumeration -----------------------------------------


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(6, 3, 3) == 33880
    assert gaussian_binomial(5, 0, 2) == 1
    assert gaussian_binomial(3, 4, 2) == 0
    for m in range(1, 7):
        for r in range(m + 1):
            assert gaussian_binomial(m, r, 3) == gaussian_binomial(m, m - r, 3)


def test_enumeration_order_is_pinned():
    first = [s.basis for s in enumerate_subspaces(F2, 2, 1)]
    assert first == [((1, 0),), ((1, 1),), ((0, 1),)]


def test_enumerated_subspaces_are_canonical_and_distinct():
    for r in range(5):
        seen = set()
        for s in enumerate_subspaces(F2, 4, r):
            assert s.dim == r and s.ambient == 4
            reduced, rank, pivots = rref(F2, s.basis)
            assert reduced == s.basis and pivots == s.pivots
            seen.add(s.basis)
        assert len(seen) == gaussian_binomial(4, r, 2)


def test_enumeration_respects_cap():
    with pytest.raises(ResourceCapError):
        list(enumerate_subspaces(F2, 5, 2, max_enum=10))


def test_bases_array_is_cached_and_frozen():
    a = subspace_bases_array(2, 4, 2)
    b = subspace_bases_array(2, 4, 2)
    assert a is b
    with pytest.raises(ValueError):
        a[0, 0, 0] = 1
    assert a.dtype == np.int64
