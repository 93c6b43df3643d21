from fractions import Fraction

from ncschur.combinat import compositions, concat, near_concat, ribbon_shape
from ncschur.ncsym import NCSymExpr, to_m
from ncschur.nsym import NSymExpr, chi, immaculate_to_H, iota, ribbon_to_H
from ncschur.schur import ribbon_source, source_skew_schur
from ncschur.sym import SymExpr


def test_ribbon_12_in_H():
    assert ribbon_to_H((1, 2)) == {
        (1, 2): Fraction(1),
        (3,): Fraction(-1),
    }


def test_ribbon_coarsening_signs():
    assert ribbon_to_H((1, 1, 1)) == {
        (1, 1, 1): Fraction(1),
        (2, 1): Fraction(-1),
        (1, 2): Fraction(-1),
        (3,): Fraction(1),
    }
    assert ribbon_to_H((3,)) == {(3,): Fraction(1)}


def test_immaculate_one_row_is_H():
    for n in range(1, 5):
        assert immaculate_to_H((n,)) == {(n,): Fraction(1)}


def test_immaculate_21():
    assert immaculate_to_H((2, 1)) == {
        (2, 1): Fraction(1),
        (3,): Fraction(-1),
    }


def test_immaculate_12():
    assert immaculate_to_H((1, 2)) == {
        (1, 2): Fraction(1),
        (2, 1): Fraction(-1),
    }


def test_H_product_concatenates():
    f = NSymExpr.single("H", (2, 1))
    g = NSymExpr.single("H", (3,))
    assert f * g == NSymExpr.single("H", (2, 1, 3))


def test_product_distributes_over_to_H():
    f = NSymExpr.single("R", (1, 2))
    g = NSymExpr.single("R", (2,))
    assert (f * g).to_H() == f.to_H() * g.to_H()


def test_ribbon_product_two_term_rule():
    # R_alpha R_beta = R_(alpha.beta) + R_(alpha ⊙ beta)
    def glue(alpha, beta):
        return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]

    for n in range(2, 7):
        for total_alpha in range(1, n):
            for alpha in compositions(total_alpha):
                for beta in compositions(n - total_alpha):
                    lhs = (
                        NSymExpr.single("R", alpha) * NSymExpr.single("R", beta)
                    ).to_H()
                    rhs = (
                        NSymExpr.single("R", alpha + beta)
                        + NSymExpr.single("R", glue(alpha, beta))
                    ).to_H()
                    assert lhs == rhs, (alpha, beta)


def test_iota_of_H_12():
    got = iota(NSymExpr.single("H", (1, 2)))
    assert got == NCSymExpr(
        "h", {((1,), (2, 3)): Fraction(1, 2)}
    )


def test_iota_is_an_algebra_map_on_H():
    f = NSymExpr.single("H", (2,))
    g = NSymExpr.single("H", (1, 1))
    assert iota(f * g) == iota(f) * iota(g)


def test_iota_of_ribbon_matches_skew_source():
    # iota sends the ribbon basis element to the skew source element of
    # the corresponding ribbon shape, up to the same normalization.
    for n in range(1, 6):
        for alpha in compositions(n):
            lhs = to_m(iota(NSymExpr.single("R", alpha)))
            rhs = to_m(ribbon_source(alpha))
            assert lhs == rhs, alpha


def test_ribbon_source_12():
    assert to_m(ribbon_source((1, 2))) == to_m(
        source_skew_schur(ribbon_shape((1, 2)))
    )


def test_chi_sorts_H():
    f = NSymExpr.single("H", (1, 3, 2))
    assert chi(f) == SymExpr.single("h", (3, 2, 1))


def test_chi_is_an_algebra_map():
    f = NSymExpr.single("H", (2,)) + NSymExpr.single("H", (1, 1)).scale(Fraction(1, 2))
    g = NSymExpr.single("H", (3,))
    assert chi(f * g) == chi(f) * chi(g)


def test_concat_vs_near_concat_shapes_disagree():
    assert concat((2, 1), (2,)) != near_concat((2, 1), (2,))


def test_json_round_trip():
    f = NSymExpr(
        "R", {(1, 2): Fraction(1), (3,): Fraction(-1, 2)}
    )
    assert NSymExpr.from_json(f.to_json()) == f


def test_str_rendering():
    f = NSymExpr("H", {(1, 2): Fraction(1), (3,): Fraction(-1)})
    assert "H[1.2]" in str(f) and "H[3]" in str(f)
