import random

import pytest

from ghw.code import build_code, hierarchy_prop1
from ghw.config import ResourceCapError
from ghw.field import field_new
from ghw.formulas import lemma1_dim
from ghw.linalg import intersection, subspace_from_vectors
from ghw.oracle import (
    ghw_definitional,
    hierarchy_definitional,
    lemma1_brute,
    lemma1_brute_multi,
)
from ghw.simplicial import normalize

F2 = field_new(2)
F3 = field_new(3)
F4 = field_new(2, 2)


def _axis(field, i, m):
    return subspace_from_vectors(field, [tuple(int(j == i) for j in range(m))], m)


# ---- subcode enumeration ---------------------------------------------------


def test_definitional_tiny_code_by_hand():
    # two single points plus the origin: three columns, one per vector of
    # weight at most one, so the lightest codeword has weight 1 and the
    # zero column never contributes
    code = build_code(F2, normalize(2, [[1], [2]], False))
    assert (code.n, code.k) == (3, 2)
    hier = hierarchy_definitional(code)
    assert hier.values == (1, 2)
    assert hier.method == "definitional"


def test_definitional_rank_validation():
    code = build_code(F2, normalize(2, [[1], [2]], False))
    with pytest.raises(ValueError):
        ghw_definitional(code, 0)
    with pytest.raises(ValueError):
        ghw_definitional(code, 3)


def test_definitional_known_flag_code():
    code = build_code(F2, normalize(5, [[1, 2, 3], [3, 4, 5]], False))
    assert (code.n, code.k) == (14, 5)
    assert hierarchy_definitional(code).values == (4, 6, 10, 12, 13)


def test_definitional_agrees_with_subspace_search():
    rng = random.Random(20240214)
    cases = 0
    while cases < 8:
        field = rng.choice((F2, F3))
        m = rng.randrange(2, 5)
        l = rng.randrange(1, 3)
        sets = [rng.sample(range(1, m + 1), rng.randrange(1, m)) for _ in range(l)]
        comp = rng.random() < 0.5
        spec = normalize(m, sets, comp)
        try:
            code = build_code(field, spec)
        except ValueError:
            continue
        searched = hierarchy_prop1(field, spec)
        for r in range(1, code.k + 1):
            assert ghw_definitional(code, r) == searched.values[r - 1], spec
        cases += 1


def test_definitional_extension_field():
    spec = normalize(3, [[1, 2], [2, 3]], False)
    code = build_code(F4, spec)
    hier = hierarchy_definitional(code)
    assert hier.values == (12, 24, 27)
    assert hier.values == hierarchy_prop1(F4, spec).values


# ---- exhaustive avoidance search -------------------------------------------


def test_avoidance_axis_pins():
    e1, e2, e3 = (_axis(F2, i, 3) for i in range(3))
    assert lemma1_brute(F2, e1, e2) == 1
    assert lemma1_brute_multi(F2, [e1, e2, e3]) == 2


def test_avoidance_disjoint_blocks():
    u = subspace_from_vectors(F2, [(1, 0, 0)], 3)
    v = subspace_from_vectors(F2, [(0, 1, 0), (0, 0, 1)], 3)
    assert lemma1_brute(F2, u, v) == 1
    u4 = subspace_from_vectors(F2, [(1, 0, 0, 0), (0, 1, 0, 0)], 4)
    v4 = subspace_from_vectors(F2, [(0, 0, 1, 0), (0, 0, 0, 1)], 4)
    assert lemma1_brute(F2, u4, v4) == 2


def test_avoidance_matches_dimension_count():
    rng = random.Random(77)
    for field, m in ((F2, 4), (F3, 3)):
        for _ in range(12):
            u = subspace_from_vectors(
                field,
                [tuple(rng.randrange(field.q) for _ in range(m)) for _ in range(2)],
                m,
            )
            v = subspace_from_vectors(
                field,
                [tuple(rng.randrange(field.q) for _ in range(m)) for _ in range(2)],
                m,
            )
            d = intersection(field, u, v).dim
            assert lemma1_brute(field, u, v) == lemma1_dim(u.dim, v.dim, d)


def test_avoidance_resource_cap():
    m = 12
    u = subspace_from_vectors(F2, [tuple(int(j == i) for j in range(m)) for i in range(6)], m)
    v = subspace_from_vectors(F2, [tuple(int(j == i) for j in range(m)) for i in range(6, 12)], m)
    with pytest.raises(ResourceCapError):
        lemma1_brute(F2, u, v)
    with pytest.raises(ResourceCapError):
        lemma1_brute_multi(F2, [_axis(F2, 0, 3), _axis(F2, 1, 3)], max_enum=2)


def test_avoidance_rejects_extension_fields():
    u = _axis(F4, 0, 2)
    v = _axis(F4, 1, 2)
    with pytest.raises(NotImplementedError):
        lemma1_brute(F4, u, v)


def test_avoidance_input_validation():
    with pytest.raises(ValueError):
        lemma1_brute_multi(F2, [])
    with pytest.raises(ValueError):
        lemma1_brute_multi(F2, [_axis(F2, 0, 2), _axis(F2, 0, 3)])
