"""Sparse exact row reduction over Q and Q(d): rank, nullspace, membership."""

from fractions import Fraction

from hypothesis import given, strategies as st

from variety_forge.linalg import (PolyDomain, RowBasis, SparseVector,
                                  nullspace, rank, sampled_delta_points)
from variety_forge.scalar import DELTA

from conftest import seeded

F = Fraction
d = DELTA

# the relation matrices of the self-dual linkage family and the mixed
# family, in the fixed arity-3 mixed-block ordering
DP_MIXED = [  # entries in Z[d]; columns in the fixed arity-3 mixed order
    {0: (1,), 4: (0, -1), 5: (0, -1)},
    {1: (1,), 3: (0, -1), 5: (0, 1)},
    {2: (1,), 3: (0, 1), 4: (0, 1)},
]
MP_MIXED = [
    {0: 1, 4: 1, 5: -1},
    {0: 1, 4: -1, 5: 1},
    {1: 1, 3: -1, 5: -1},
    {1: 1, 3: 1, 5: 1},
    {2: 1, 3: 1, 4: -1},
    {2: 1, 3: -1, 4: 1},
]


def _dense_rank_oracle(rows, ncols):
    """Independent dense Gaussian elimination over Fraction."""
    mat = [[F(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rk = 0
    for col in range(ncols):
        piv = next((r for r in mat if r[col]), None)
        if piv is None:
            continue
        mat.remove(piv)
        rk += 1
        for r in mat:
            if r[col]:
                f = r[col] / piv[col]
                for c in range(ncols):
                    r[c] -= f * piv[c]
    return rk


def test_reduce_insert_examples():
    basis = RowBasis(4)
    basis, inserted = basis.reduce_insert(SparseVector(4, {0: F(1), 2: F(2)}))
    assert inserted and basis.rank == 1
    basis, inserted = basis.reduce_insert(SparseVector(4, {0: F(2), 2: F(4)}))
    assert not inserted and basis.rank == 1
    basis, inserted = basis.reduce_insert(SparseVector(4, {1: F(1)}))
    assert inserted and basis.rank == 2


def test_reference_matrix_ranks():
    assert rank(DP_MIXED, 6, PolyDomain) == 3
    # the six-row matrix has full mixed rank (a hand reduction gives e1, e2,
    # e3 from the row sums and an invertible 3x3 block on the rest)
    assert rank(MP_MIXED, 6) == 6
    assert _dense_rank_oracle(MP_MIXED, 6) == 6
    assert rank([], 3) == 0
    assert rank([{0: 1}, {1: 1}, {2: 1}], 3) == 3


def test_nullspace_examples():
    assert nullspace([{0: 1}, {1: 1}, {2: 1}], 3).rank == 0
    ns = nullspace([{0: 1, 1: 1}], 2)
    assert ns.rank == 1
    (vec,) = ns.field_rows()
    assert vec.entries[0] / vec.entries[1] == -1
    # the generic mixed block has a 3-dimensional kernel
    assert nullspace(DP_MIXED, 6, PolyDomain).rank == 3


def test_contains_examples():
    full = RowBasis(3)
    for i in range(3):
        full.insert({i: 1})
    assert full.contains({0: 5, 2: -7})
    empty = RowBasis(3)
    assert empty.contains({})
    e2_only = RowBasis(3)
    e2_only.insert({1: 1})
    assert not e2_only.contains({0: 1})


def test_canonical_rows_are_span_invariants():
    b1 = RowBasis(3)
    b1.insert({0: 2, 1: 2})
    b1.insert({1: 3, 2: 3})
    b2 = RowBasis(3)
    b2.insert({0: 1, 2: -1})   # (1,1,0)-(0,1,1)
    b2.insert({1: 5, 2: 5})
    assert b1.canonical_rows() == b2.canonical_rows()
    assert b1 == b2


def _random_sparse_rows(rng, nrows, ncols, poly):
    from variety_forge.scalar import pnormalize
    rows = []
    for _ in range(nrows):
        row = {}
        for c in range(ncols):
            if rng.random() < 0.5:
                if poly:
                    v = pnormalize(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
                    if v:
                        row[c] = v
                else:
                    v = rng.randint(-4, 4)
                    if v:
                        row[c] = v
        rows.append(row)
    return rows


@given(st.integers(0, 10 ** 6))
def test_rank_nullity_over_q(seed):
    rng = seeded(seed)
    ncols = rng.randint(2, 8)
    rows = _random_sparse_rows(rng, rng.randint(1, 6), ncols, poly=False)
    rk = rank(rows, ncols)
    assert rk == _dense_rank_oracle(rows, ncols)
    assert rk + nullspace(rows, ncols).rank == ncols
    # kernel vectors annihilate every row
    for vec in nullspace(rows, ncols).field_rows():
        for r in rows:
            assert sum(F(v) * vec.entries.get(c, F(0)) for c, v in r.items()) == 0


@given(st.integers(0, 10 ** 6))
def test_rank_nullity_over_qd(seed):
    rng = seeded(seed)
    ncols = rng.randint(2, 6)
    rows = _random_sparse_rows(rng, rng.randint(1, 5), ncols, poly=True)
    rk = rank(rows, ncols, PolyDomain)
    assert rk + nullspace(rows, ncols, PolyDomain).rank == ncols


@given(st.integers(0, 10 ** 6))
def test_rank_invariance_under_scaling_and_permutation(seed):
    rng = seeded(seed)
    ncols = rng.randint(2, 7)
    rows = _random_sparse_rows(rng, rng.randint(1, 5), ncols, poly=False)
    rk = rank(rows, ncols)
    scaled = []
    for r in rows:
        factor = rng.choice([1, 2, -3, 5])
        scaled.append({c: v * factor for c, v in r.items()})
    rng.shuffle(scaled)
    assert rank(scaled, ncols) == rk


@given(st.integers(0, 10 ** 6))
def test_generic_vs_specialized_rank(seed):
    # Schwartz-Zippel style: specialization never raises the rank, and at
    # least one of a handful of samples attains it
    rng = seeded(seed)
    ncols = rng.randint(2, 6)
    rows = _random_sparse_rows(rng, rng.randint(1, 4), ncols, poly=True)
    generic = rank(rows, ncols, PolyDomain)
    attained = []
    for q in sampled_delta_points(5, seed=seed % 1000):
        rows_at_q = []
        for r in rows:
            row = {}
            for c, p in r.items():
                val = sum(F(coef) * q ** i for i, coef in enumerate(p))
                if val:
                    row[c] = val
            rows_at_q.append({c: int(v * _common_den(row)) for c, v in row.items()})
        rk = rank(rows_at_q, ncols)
        assert rk <= generic
        attained.append(rk)
    assert max(attained, default=0) == generic


def _common_den(row):
    lcm = 1
    for v in row.values():
        lcm = lcm * v.denominator // __import__("math").gcd(lcm, v.denominator)
    return lcm


def test_sampled_points_avoid_degenerate_values():
    pts = sampled_delta_points(8)
    banned = {F(0), F(1), F(-1), F(1, 2), F(1, 3)}
    assert banned.isdisjoint(pts)
    assert len(set(pts)) == 8
    assert pts == sampled_delta_points(8)  # deterministic
