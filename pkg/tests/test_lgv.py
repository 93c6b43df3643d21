import pytest

from ncschur.combinat import SkewShape, perm_compose, skew, ssyt
from ncschur.lgv import (
    LatticePath,
    all_path_tuples,
    common_points,
    enumerate_path_tuples,
    fixed_points_to_ssyt,
    is_self_intersecting,
    lgv_swap,
    monomial,
    path,
    path_tuple,
    signed_ledger,
    tuple_to_tableau,
)


def worked_example():
    shape = SkewShape((3, 3, 2), (1, 1))
    return path_tuple(
        shape,
        (2, 1, 3),
        [path(-1, (2, 2, 3)), path(0, (3,)), path(-3, (1, 3))],
    )


def test_path_validation():
    with pytest.raises(ValueError):
        path(0, (2, 1))
    with pytest.raises(ValueError):
        path(0, (0, 1))
    assert path(3, ()).end_x == 3


def test_path_geometry():
    p = path(0, (1, 1, 3))
    assert p.x_range(1) == (0, 2)
    assert p.x_range(2) == (2, 2)
    assert p.x_range(3) == (2, 3)
    assert p.visits(2, 2)
    assert not p.visits(0, 3)


def test_path_tuple_start_and_end_validation():
    shape = SkewShape((2, 1), ())
    with pytest.raises(ValueError):
        path_tuple(shape, (1, 2), [path(0, (1,)), path(-2, ())])
    good = path_tuple(shape, (1, 2), [path(-1, (1, 1)), path(-2, (1,))])
    assert good.label_heights() == (1, 1, 1)


def test_common_points_ordered_by_coordinate_sum():
    p = path(0, (1, 3))
    q = path(-1, (1, 1, 2))
    pts = common_points(p, q)
    sums = [x + y for x, y in pts]
    assert sums == sorted(sums)
    assert all(p.visits(x, y) and q.visits(x, y) for x, y in pts[:-1] or pts)


def test_worked_example_swap():
    P = worked_example()
    P2, xi = lgv_swap(P)
    assert xi == (3, 4, 2, 1, 5, 6)
    assert P2 != P
    assert P2.sign() == -P.sign()


def test_worked_example_monomial():
    P = worked_example()
    assert monomial((3, 1, 5, 4, 6, 2), P) == (3, 2, 1, 3, 3, 2)
    assert monomial((1, 2, 3, 4, 5, 6), P) == P.label_heights()


def test_swap_preserves_monomial_through_relabelling():
    P = worked_example()
    P2, xi = lgv_swap(P)
    delta = (3, 1, 5, 4, 6, 2)
    assert monomial(delta, P) == monomial(perm_compose(xi, delta), P2)


def test_swap_is_a_sign_reversing_involution():
    shape = skew((2, 2), (1,))
    for P in all_path_tuples(shape, 3):
        P2, xi = lgv_swap(P)
        if is_self_intersecting(P):
            assert P2 != P
            assert P2.sign() == -P.sign()
            P3, xi2 = lgv_swap(P2)
            assert P3 == P
            assert perm_compose(xi, xi2) == tuple(range(1, len(xi) + 1))
        else:
            assert P2 == P


def test_enumeration_skips_impossible_matchings():
    # with this matching one path would need a negative number of east steps
    shape = skew((3, 1), (2,))
    assert list(enumerate_path_tuples(shape, (2, 1), 2)) == []


def test_fixed_point_counts():
    pairs = fixed_points_to_ssyt(skew((2, 1)), 2)
    assert len(pairs) == len(list(ssyt(skew((2, 1)), 2))) == 2
    for k in (1, 2, 4):
        assert len(fixed_points_to_ssyt(skew((1,)), k)) == k


def test_fixed_points_match_tableaux():
    for shape in [skew((2, 1)), skew((2, 2), (1,)), skew((3, 1))]:
        for cap in (2, 3):
            pairs = fixed_points_to_ssyt(shape, cap)
            for P, t in pairs:
                assert tuple_to_tableau(P).rows == t.rows
                assert not is_self_intersecting(P)


def test_signed_ledger_shape():
    rows = signed_ledger(skew((2,)), 2)
    assert all(len(row) == 4 for row in rows)
    assert {row[0] for row in rows} <= {1, -1}
    fixed = [row for row in rows if row[3]]
    assert len(fixed) == len(list(ssyt(skew((2,)), 2)))


def test_signed_ledger_cancellation():
    # signed monomials of non-fixed tuples cancel in pairs
    for shape in [skew((2, 1)), skew((2, 2), (1,))]:
        totals = {}
        for sgn, word, _, fixed in signed_ledger(shape, 2):
            if not fixed:
                word = tuple(sorted(word))
                totals[word] = totals.get(word, 0) + sgn
        assert all(v == 0 for v in totals.values())
