"""Quadratic presentations, Koszul duals, Hilbert series, free bases."""

from fractions import Fraction

import pytest

from variety_forge.catalog import presentation, variety
from variety_forge.engine import dim_multilinear, equivalent
from variety_forge.exprs import format_element
from variety_forge.operads import (OperadError, QuadraticPresentation, Series,
                                   block_basis, compose, dual_relation_matrix,
                                   free_delta_p_basis, hilbert_series,
                                   identity_series, koszul_dual,
                                   koszulness_witness)
from variety_forge.scalar import DELTA
from variety_forge.terms import OpSymbol

F = Fraction
d = DELTA


def test_printed_mixed_matrix_of_the_self_dual_family():
    rows = dual_relation_matrix(presentation("delta-poisson"), "mixed")
    expected = [
        [1, 0, 0, 0, -d, -d],
        [0, 1, 0, -d, 0, d],
        [0, 0, 1, d, d, 0],
    ]
    assert [[c for c in row] for row in rows] == \
        [[x if hasattr(x, "num") else (d - d + x) for x in row] for row in expected]


def test_printed_mixed_matrix_of_mixed_poisson():
    rows = dual_relation_matrix(presentation("mixed-poisson"), "mixed")
    expected = [
        [1, 0, 0, 0, 1, -1],
        [1, 0, 0, 0, -1, 1],
        [0, 1, 0, -1, 0, -1],
        [0, 1, 0, 1, 0, 1],
        [0, 0, 1, 1, -1, 0],
        [0, 0, 1, -1, 1, 0],
    ]
    assert [[c.as_fraction() for c in row] for row in rows] == \
        [[F(x) for x in row] for row in expected]


def test_pure_blocks_and_empty_matrix():
    dp = presentation("delta-poisson")
    assert [[c.as_fraction() for c in r] for r in dual_relation_matrix(dp, "pure-dot")] \
        == [[1, 0, -1]]
    assert [[c.as_fraction() for c in r] for r in dual_relation_matrix(dp, "pure-bracket")] \
        == [[1, -1, 1]]
    no_mixed = presentation("com-lie")
    assert dual_relation_matrix(no_mixed, "mixed") == []
    with pytest.raises(OperadError):
        dual_relation_matrix(dp, "sideways")


def test_block_basis_order():
    dp = presentation("delta-poisson")
    assert [str(m) for m in block_basis(dp, "mixed")] == [
        "bracket(dot(x1,x2),x3)", "bracket(dot(x1,x3),x2)", "bracket(dot(x2,x3),x1)",
        "dot(bracket(x1,x2),x3)", "dot(bracket(x1,x3),x2)", "dot(bracket(x2,x3),x1)"]


def test_self_duality_of_the_linkage_family():
    dp = presentation("delta-poisson")
    for q in (F(-1), F(1, 2), F(2)):
        dual = koszul_dual(dp.with_delta(q))
        assert equivalent(dual.variety(), variety("delta-poisson", delta=q), 3)
    tp = presentation("transposed-delta-poisson")
    for q in (F(-1), F(1, 2), F(2)):
        dual = koszul_dual(tp.with_delta(q))
        assert equivalent(dual.variety(), variety("transposed-delta-poisson", delta=q), 3)


def test_mixed_poisson_dual_is_pure():
    dual = koszul_dual(presentation("mixed-poisson"))
    assert all(len(rel.op_names()) == 1 for rel in dual.relations)
    dv = dual.variety()
    assert equivalent(dv, variety("com-lie"), 3)
    assert [dim_multilinear(dv, n) for n in (2, 3, 4)] == [2, 9, 67]


def test_com_lie_duality_and_biduality():
    com = presentation("com")
    dual = koszul_dual(com)
    (op,) = dual.generators
    assert op.symmetry == "antisymmetric"
    assert equivalent(dual.variety(), _rename_variety(variety("lie"), op.name), 3)
    again = koszul_dual(dual)
    assert equivalent(again.variety(), _rename_variety(variety("com"), op.name), 3)


def _rename_variety(v, new_name):
    from variety_forge.engine import Variety
    from variety_forge.exprs import format_element, parse_expr
    (op,) = v.ops
    renamed = OpSymbol(new_name, op.symmetry)
    idents = [parse_expr(format_element(e).replace(op.name + "(", new_name + "("),
                         (renamed,)) for e in v.identities]
    return Variety((renamed,), idents, delta=v.delta, name=v.name)


def test_biduality_of_two_operation_presentations():
    for name in ("mixed-poisson", "com-lie"):
        p = presentation(name)
        assert equivalent(koszul_dual(koszul_dual(p)).variety(), p.variety(), 3)
    ap = presentation("delta-poisson").with_delta(F(-1))
    assert equivalent(koszul_dual(koszul_dual(ap)).variety(), ap.variety(), 3)


def test_dimension_duality_at_arity_three():
    from variety_forge.engine import consequences
    for name, q in (("delta-poisson", F(-1)), ("mixed-poisson", None),
                    ("com-lie", None), ("transposed-delta-poisson", F(2))):
        p = presentation(name)
        if q is not None:
            p = p.with_delta(q)
        dual = koszul_dual(p)
        r1 = consequences(p.variety(), 3).rank
        r2 = consequences(dual.variety(), 3).rank
        assert r1 + r2 == 12


def test_dual_rejects_bad_presentations():
    with pytest.raises(OperadError):
        QuadraticPresentation((OpSymbol("m", "none"),), ())
    from variety_forge.catalog import identity
    with pytest.raises(OperadError):
        QuadraticPresentation((OpSymbol("dot", "symmetric"),), (identity("xyzt-1"),))


def test_hilbert_series_values():
    h = hilbert_series([1, 2, 6, 12, 31])
    assert h == Series([F(-1), F(1), F(-1), F(1, 2), F(-31, 120)])
    assert hilbert_series([1]) == Series([F(-1)])
    # derived by plugging (n-1)!+1 into (-1)^n dim/n!
    assert hilbert_series([1, 2, 3, 7, 25]) == \
        Series([F(-1), F(1), F(-1, 2), F(7, 24), F(-5, 24)])


def test_compose_examples():
    h = hilbert_series([1, 2, 6, 12, 31])
    c = compose(h, h, 5)
    assert c == Series([F(1), 0, 0, 0, F(91, 60)])
    f = Series([F(3), F(-2), F(5)])
    assert compose(f, identity_series(3), 3) == f
    assert compose(Series([-1]), Series([-1]), 1) == Series([1])


def test_koszulness_witnesses():
    w = koszulness_witness(variety("anti-poisson"), 5)
    assert not w.consistent
    assert w.deviation_order == 5 and w.deviation == F(91, 60)
    assert "deviation=91/60" in w.to_lines()
    assert "order=5" in w.to_lines()

    w2 = koszulness_witness(variety("mixed-poisson"), 5)
    assert w2.consistent
    assert w2.dims == (1, 2, 3, 7, 25)
    assert w2.dual_dims == (1, 2, 9, 67, 695)

    w3 = koszulness_witness(variety("com"), 4)
    assert w3.consistent
    assert w3.dims == (1, 1, 1, 1) and w3.dual_dims == (1, 1, 2, 6)


def test_koszulness_witness_sampled_flag():
    w = koszulness_witness(variety("delta-poisson"), 3, mode="sampled")
    assert w.probabilistic
    assert "probabilistic=yes" in w.to_lines()


def test_free_basis_counts():
    expected = {1: (1,), 2: (1, 1), 3: (2, 3, 1), 4: (6, 2, 3, 1),
                5: (24, 6, 1), 6: (120, 24, 1)}
    for n, counts in expected.items():
        report = free_delta_p_basis(n)
        assert report.counts == counts
        assert report.total == sum(counts)
    assert free_delta_p_basis(5).total == 31
    assert free_delta_p_basis(6).total == 145


def test_free_basis_is_complement_of_the_ideal():
    from variety_forge.engine import consequences, get_context
    ap = variety("anti-poisson")
    space = consequences(ap, 5)
    ctx = get_context(ap.ops, 5)
    basis = space.basis.copy()
    added = 0
    for _, monos in free_delta_p_basis(5).families:
        for m in monos:
            if basis.insert({ctx.index[m]: 1}):
                added += 1
    assert added == 31
    assert basis.rank == len(ctx.monomials)
