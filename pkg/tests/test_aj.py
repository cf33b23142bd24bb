"""Annihilator construction, closed forms at t = -1, and the A-polynomial match."""

import importlib.resources

import pytest

import ajcable.aj as aj
from ajcable.algebra import IntLaurent2, RationalM, RationalTM, limit_t_minus1
from ajcable.aj import (
    LPolynomialOverM,
    b_minus1_closed_form,
    build_ab,
    build_annihilator,
    cabled_a_polynomial,
    cabled_a_polynomial_factors,
    case_l_degree,
    case_tag,
    compare_aj,
    default_grid,
    determinant_check,
    determinant_closed_form,
    evaluate_annihilator_at_minus1,
    f_poly,
    g_poly,
    verify_tuple,
)
from ajcable.jones import BadParams, CablingParams, cable_sequence
from ajcable.qtorus import check_annihilation, skew_multiply

# one representative tuple per construction regime
REPRESENTATIVES = {
    "S_EQ_2": CablingParams(3, 2, 13, 2),
    "S_EVEN_GT2": CablingParams(5, 3, 121, 4),
    "S_ODD_Q2": CablingParams(3, 2, 31, 3),
    "S_ODD_QGT2": CablingParams(5, 3, 76, 5),
}

NEGATIVE_P = (
    CablingParams(-5, 3, -1, 2),
    CablingParams(-3, 2, -1, 3),
    CablingParams(-3, 2, -7, 4),
    CablingParams(-5, 3, -7, 3),
)


def mono(c, e):
    return RationalM.monomial(c, e)


def lp(d):
    return LPolynomialOverM(
        {i: c if isinstance(c, RationalM) else RationalM.from_int(c) for i, c in d.items()}
    )


def monic(f):
    lead = f.coeffs[f.l_degree()]
    return LPolynomialOverM({i: c / lead for i, c in f.coeffs.items()})


# --- case dispatch -----------------------------------------------------------

def test_case_tags():
    assert case_tag(CablingParams(3, 2, 13, 2)) == "S_EQ_2"
    assert case_tag(CablingParams(5, 3, 121, 4)) == "S_EVEN_GT2"
    assert case_tag(CablingParams(3, 2, 31, 3)) == "S_ODD_Q2"
    assert case_tag(CablingParams(5, 3, 76, 5)) == "S_ODD_QGT2"
    assert case_tag(CablingParams(-5, 3, -7, 3)) == "S_ODD_QGT2"


def test_case_l_degrees():
    assert case_l_degree("S_EQ_2") == 3
    assert case_l_degree("S_EVEN_GT2") == 4
    assert case_l_degree("S_ODD_Q2") == 4
    assert case_l_degree("S_ODD_QGT2") == 5


# --- classical A-polynomial factors -------------------------------------------

def test_f_poly_frozen():
    assert f_poly(3, 2) == lp({1: mono(1, 6), 0: 1})
    assert f_poly(-3, 2) == lp({1: 1, 0: mono(1, 6)})
    assert f_poly(5, 3) == lp({2: mono(1, 30), 0: -1})
    assert f_poly(-5, 3) == lp({2: 1, 0: mono(-1, 30)})


def test_g_poly_frozen():
    assert g_poly(3, 2) == lp({1: mono(1, 6), 0: -1})
    assert g_poly(-3, 2) == lp({1: 1, 0: mono(-1, 6)})
    assert g_poly(5, 3) == lp({1: mono(1, 15), 0: -1})


def test_fg_poly_guards():
    with pytest.raises(BadParams):
        f_poly(4, 2)
    with pytest.raises(BadParams):
        g_poly(0, 3)
    with pytest.raises(BadParams):
        f_poly(3, 1)


def test_cabled_a_polynomial_frozen():
    expected = lp({1: 1, 0: -1}) * lp({1: mono(1, 26), 0: 1}) * lp({1: mono(1, 24), 0: -1})
    assert cabled_a_polynomial(CablingParams(3, 2, 13, 2)) == expected

    expected = lp({1: 1, 0: -1}) * lp({2: mono(1, 186), 0: -1}) * lp({1: mono(1, 54), 0: 1})
    assert cabled_a_polynomial(CablingParams(3, 2, 31, 3)) == expected

    expected = lp({1: 1, 0: -1}) * lp({1: 1, 0: mono(1, 2)}) * lp({1: mono(1, 60), 0: -1})
    assert cabled_a_polynomial(CablingParams(5, 3, -1, 2)) == expected


def test_cabled_a_polynomial_factor_shapes():
    facs = cabled_a_polynomial_factors(CablingParams(5, 3, 76, 5))
    assert len(facs) == 3
    assert facs[0] == lp({1: 1, 0: -1})
    # odd s: the companion factor is the two-step torus factor at M^(s^2)
    assert facs[2] == lp({2: mono(1, 750), 0: -1})


# --- the composed relation's coefficients ---------------------------------------

def test_build_ab_frozen_s2():
    a, b = build_ab(CablingParams(3, 2, 13, 2))
    assert a == IntLaurent2({(-74, -37): 1, (-78, -39): -1})
    assert b.den == IntLaurent2.one()
    assert b.num == IntLaurent2(
        {(-42, -22): 1, (-30, -14): -1, (-22, -10): -1, (-2, -2): 1}
    )
    # value at t = -1: every t-exponent is even, so signs survive unchanged
    assert limit_t_minus1(b) == RationalM({-22: 1, -14: -1, -10: -1, -2: 1})


def test_b_limit_matches_closed_form_everywhere():
    for params in list(REPRESENTATIVES.values()) + list(NEGATIVE_P):
        b = build_ab(params)[1]
        value = limit_t_minus1(b)
        assert value == b_minus1_closed_form(params), params
        assert not value.is_zero(), params


def test_a_regular_nonzero_at_minus1():
    for params in REPRESENTATIVES.values():
        a = build_ab(params)[0]
        value = limit_t_minus1(RationalTM.from_poly(a))
        assert not value.is_zero(), params


# --- bundle structure and annihilation ---------------------------------------

@pytest.mark.parametrize("tag", sorted(REPRESENTATIVES))
def test_bundle_structure_and_annihilation(tag):
    params = REPRESENTATIVES[tag]
    bundle = build_annihilator(params)
    assert bundle.case_tag == tag
    assert bundle.P.l_degree() == case_l_degree(tag)
    # the recorded factors multiply out (skew product) to P
    prod = bundle.factors[0]
    for fac in bundle.factors[1:]:
        prod = skew_multiply(prod, fac)
    assert prod == bundle.P
    # the denominator-free chain annihilates the cable sequence exactly
    report = check_annihilation(bundle.cleared_chain(), cable_sequence(params), 1, 12)
    assert report["pass"], report


def test_negative_p_annihilation():
    for params in NEGATIVE_P:
        bundle = build_annihilator(params)
        report = check_annihilation(bundle.cleared_chain(), cable_sequence(params), 1, 8)
        assert report["pass"], (params, report)


# --- determinant checks -----------------------------------------------------

def test_determinant_check_all_cases():
    for params in list(REPRESENTATIVES.values()) + list(NEGATIVE_P):
        report = determinant_check(params)
        assert report["pass"], (params, report)
        assert report["b_matches_closed_form"] and report["b_nonzero"]
        if report["case_tag"] == "S_EQ_2":
            assert report["determinant_applicable"] is False
        else:
            assert report["determinant_applicable"] is True
            assert report["determinant_matches"] and report["determinant_nonzero"]


def test_determinant_closed_form_s2_unavailable():
    with pytest.raises(BadParams):
        determinant_closed_form(CablingParams(3, 2, 13, 2))


# --- AJ comparison ------------------------------------------------------------

NAMED_MATCHES = (
    CablingParams(3, 2, 31, 3),
    CablingParams(5, 3, 76, 5),
    CablingParams(5, 3, 121, 4),
    CablingParams(3, 2, 13, 2),
    CablingParams(-5, 3, -7, 4),
)


def test_compare_aj_named_tuples():
    for params in NAMED_MATCHES:
        report = compare_aj(params)
        assert report["pass"], (params, report)
        assert report["projective_match"] and report["zero_pattern_equal"]
        assert report["ratio"] is not None


def test_compare_aj_negative_control(monkeypatch):
    # flipping one sign in the classical polynomial must break the match
    real = cabled_a_polynomial

    def perturbed(params):
        f = real(params)
        flipped = dict(f.coeffs)
        low = min(flipped)
        flipped[low] = RationalM.from_int(0) - flipped[low]
        return LPolynomialOverM(flipped)

    monkeypatch.setattr(aj, "cabled_a_polynomial", perturbed)
    report = compare_aj(CablingParams(3, 2, 13, 2))
    assert not report["pass"]
    assert not report["projective_match"]


def test_minus1_shapes_by_case():
    # the evaluated operator is a rational multiple of an explicit product
    shapes = {
        "S_EQ_2": lp({1: 1, 0: -1})
        * lp({1: 1, 0: mono(-1, -24)})
        * lp({1: 1, 0: mono(1, -26)}),
        "S_ODD_Q2": lp({1: 1, 0: -1})
        * lp({1: 1, 0: mono(1, -54)})
        * lp({2: 1, 0: mono(-1, -186)}),
        "S_EVEN_GT2": lp({1: 1, 0: -1})
        * lp({1: 1, 0: mono(-1, -240)})
        * lp({2: 1, 0: mono(-1, -968)}),
        "S_ODD_QGT2": lp({1: 1, 0: -1})
        * lp({2: 1, 0: mono(-1, -750)})
        * lp({2: 1, 0: mono(-1, -760)}),
    }
    for tag, params in REPRESENTATIVES.items():
        evaluated = evaluate_annihilator_at_minus1(build_annihilator(params))
        assert monic(evaluated) == monic(shapes[tag]), tag


def test_minus1_shape_matches_classical_polynomial_monically():
    for params in REPRESENTATIVES.values():
        evaluated = evaluate_annihilator_at_minus1(build_annihilator(params))
        assert monic(evaluated) == monic(cabled_a_polynomial(params)), params


# --- per-tuple pipeline and the stock grid --------------------------------------

def test_verify_tuple_record():
    record = verify_tuple(CablingParams(3, 2, 13, 2), nmax=6, with_identities=True)
    for key in (
        "params",
        "case_tag",
        "L_degree",
        "annihilates",
        "n_checked",
        "b_at_minus1",
        "aj_match",
        "determinant_ok",
        "theorem_applies",
        "identities_pass",
        "identities",
        "pass",
    ):
        assert key in record, key
    assert record["pass"]
    assert record["case_tag"] == "S_EQ_2"
    assert record["L_degree"] == 3
    assert record["n_checked"] == [1, 6]
    assert record["theorem_applies"] is True  # r = 13 lies above pqs = 12


def test_default_grid_shape():
    grid = default_grid()
    assert len(grid) == 88
    assert len(set(grid)) == 88
    assert sum(1 for g in grid if g.p > 0) == 48
    assert sum(1 for g in grid if g.p < 0) == 40
    applicable = [g for g in grid if g.theorem_applies]
    assert len(applicable) == 72


def test_default_grid_file_matches_programmatic():
    text = importlib.resources.files("ajcable").joinpath("data/default_grid.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        p, q, r, s = map(int, line.split())
        rows.append(CablingParams(p, q, r, s))
    assert rows == default_grid()
