"""Defining sets built from unions of coordinate subspaces of F_q^m.

A specification lists generating supports S_1, ..., S_l inside {1, ..., m}.
The set it denotes is {v : supp(v) is contained in some S_i}, or the
complement of that set inside F_q^m when the complement flag is on.
Membership never needs the field structure, only supports.

Normalization dedupes the generators, drops any generator contained in
another, and orders the survivors by (size, lexicographic).  Everything
downstream (formula dispatch, provenance strings, column order) assumes
a normalized specification.

Vectors map to integer codes with coordinate 1 as the most significant
base-q digit, so ascending code order is lexicographic order on tuples,
and the column order of every generator matrix is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .config import check_cap
from .field import Field
from .linalg import Subspace, null_space, subspace_from_vectors


@dataclass(frozen=True)
class ComplexSpec:
    """Normalized defining-set description: generators plus complement flag."""

    m: int
    sets: tuple
    complement: bool

    def describe(self) -> str:
        body = ";".join(",".join(str(x) for x in s) for s in self.sets)
        return f"<{body}>^c in F^{self.m}" if self.complement else f"<{body}> in F^{self.m}"


def parse_sets(text: str):
    """Parse "1,2,3;3,4,5" into [[1,2,3],[3,4,5]].  Whitespace is ignored."""
    groups = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty generator in set list")
        members = []
        for item in chunk.split(","):
            item = item.strip()
            if not item:
                raise ValueError(f"empty coordinate in generator {chunk!r}")
            try:
                members.append(int(item))
            except ValueError:
                raise ValueError(f"coordinate {item!r} is not an integer") from None
        groups.append(members)
    return groups


def normalize_sets(sets):
    """Canonical generator list: dedup, drop contained sets, sort by (size, lex).

    Returns (kept, dropped) so callers can report what was discarded.
    """
    cleaned = [tuple(sorted(set(s))) for s in sets]
    kept = []
    dropped = []
    for s in sorted(cleaned, key=lambda t: (-len(t), t)):
        if any(set(s) <= set(t) for t in kept):
            dropped.append(s)
        else:
            kept.append(s)
    kept.sort(key=lambda t: (len(t), t))
    return tuple(kept), dropped


def normalize(m: int, sets, complement: bool) -> ComplexSpec:
    """Validate and canonicalize a defining-set description."""
    if m < 1:
        raise ValueError(f"ambient dimension must be positive, got {m}")
    if not sets:
        raise ValueError("at least one generating set is required")
    for s in sets:
        if not s:
            raise ValueError("generating sets must be nonempty")
        for x in s:
            if not 1 <= int(x) <= m:
                raise ValueError(f"coordinate {x} outside 1..{m}")
    kept, _ = normalize_sets(sets)
    return ComplexSpec(m=m, sets=kept, complement=bool(complement))


def member(spec: ComplexSpec, v) -> bool:
    """Is v in the defining set?  Pure support arithmetic."""
    supp = {i + 1 for i, x in enumerate(v) if x != 0}
    inside = any(supp <= set(s) for s in spec.sets)
    return not inside if spec.complement else inside


def _union_cardinality(sets, q: int) -> int:
    """Inclusion-exclusion over the generators; intersections of coordinate
    subspaces are coordinate subspaces, so each term is a power of q."""
    total = 0
    l = len(sets)
    for size in range(1, l + 1):
        for chosen in combinations(range(l), size):
            common = set(sets[chosen[0]])
            for i in chosen[1:]:
                common &= set(sets[i])
            total += (-1) ** (size + 1) * q ** len(common)
    return total


def cardinality(spec: ComplexSpec, q: int) -> int:
    inside = _union_cardinality(spec.sets, q)
    return q**spec.m - inside if spec.complement else inside


def member_codes(spec: ComplexSpec, q: int, max_enum=None):
    """Sorted integer codes of every member.  Capped before any work."""
    m = spec.m
    if spec.complement:
        check_cap(q**m, max_enum, what="vectors of the ambient space")
    else:
        check_cap(_union_cardinality(spec.sets, q), max_enum, what="defining vectors")
    inside = set()
    for s in spec.sets:
        weights = [q ** (m - pos) for pos in s]
        for digits in product(range(q), repeat=len(s)):
            inside.add(sum(w * d for w, d in zip(weights, digits)))
    if spec.complement:
        codes = sorted(set(range(q**m)) - inside)
    else:
        codes = sorted(inside)
    return codes


def codes_to_matrix(codes, q: int, m: int):
    """Decode integer codes into an (N, m) int64 matrix of element codes."""
    arr = np.asarray(codes, dtype=np.int64).reshape(-1, 1)
    weights = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return (arr // weights) % q


def enumerate_members(spec: ComplexSpec, field: Field, max_enum=None):
    """Members as coordinate tuples, ascending code order."""
    codes = member_codes(spec, field.q, max_enum)
    mat = codes_to_matrix(codes, field.q, spec.m)
    return [tuple(int(x) for x in row) for row in mat]


def k_space(spec: ComplexSpec, field: Field, max_enum=None) -> Subspace:
    """Orthogonal complement of the span of the defining set.

    Without the complement flag the span is the coordinate subspace on
    the union of the generators, so its complement is the coordinate
    subspace on the leftover positions.  With the flag the span has to
    be grown vector by vector, stopping as soon as it fills the space.
    """
    m = spec.m
    if not spec.complement:
        union = set()
        for s in spec.sets:
            union |= set(s)
        leftovers = sorted(set(range(1, m + 1)) - union)
        rows = []
        for pos in leftovers:
            v = [0] * m
            v[pos - 1] = 1
            rows.append(tuple(v))
        return subspace_from_vectors(field, rows, m)

    codes = member_codes(spec, field.q, max_enum)
    mat = codes_to_matrix(codes, field.q, m)
    rows = []
    pivots = []
    for raw in mat:
        w = [int(x) for x in raw]
        for row, p in zip(rows, pivots):
            c = w[p]
            if c:
                w = [field.sub(x, field.mul(c, y)) for x, y in zip(w, row)]
        lead = next((j for j, x in enumerate(w) if x != 0), None)
        if lead is None:
            continue
        if w[lead] != 1:
            inv = field.inv(w[lead])
            w = [field.mul(inv, x) for x in w]
        rows.append(w)
        pivots.append(lead)
        if len(rows) == m:
            break
    return null_space(field, rows, m)
