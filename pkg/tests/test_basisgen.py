from fractions import Fraction

import pytest

from mwsextic.basisgen import (TABLE4_HEIGHTS, BasisReport, IrrationalRadical, instantiate_template,
                               rational_basis, verify_basis)
from mwsextic.ellcurve import Curve, CurvePoint, parse_point
from mwsextic.exactnum import ZeroInput
from mwsextic.heightlat import determinant, naive_height


def _pts(*texts):
    return [parse_point(s) for s in texts]


def _same_up_to_sign(got, want):
    key = lambda p: (str(p.x), str(p.y))
    flip = lambda p: CurvePoint(p.x, -p.y)
    return all(key(p) in {key(q) for q in want} or key(flip(p)) in {key(q) for q in want}
               for p in got) and len(got) == len(want)


def test_example_27_16():
    rep = rational_basis(27, 16)
    assert rep.rank == 2 and rep.verified
    assert _same_up_to_sign(rep.basis, _pts("(-3*t^2, 4)", "(9/4*t^4, 27/8*t^6 + 4)"))
    assert rep.gram == [[2, 0], [0, 4]]
    assert rep.lattice_type == "<2>+<4>"
    assert rep.case_label == "YNYY / B=sq"


def test_example_1_16():
    rep = rational_basis(1, 16)
    want = _pts("(-t^2, 4)", "(2*t, t^3 + 4)", "(-2*t, t^3 - 4)")
    assert _same_up_to_sign(rep.basis, want)
    assert rep.gram == [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
    assert rep.lattice_type == "<2>+<2>+<2>"


def test_example_1_1():
    rep = rational_basis(1, 1)
    assert _same_up_to_sign(rep.basis, _pts("(-1, t^3)", "(-t^2, 1)"))
    assert rep.gram == [[2, 0], [0, 2]]


def test_rank_zero():
    rep = rational_basis(162, 6)
    assert rep.rank == 0 and rep.basis == [] and rep.gram == []
    assert verify_basis(rep)


def test_zero_input():
    with pytest.raises(ZeroInput):
        rational_basis(0, 3)


# one pair per rank-2/3 case, with the lattice type declared for it
CASES = [
    ((27, 16), "YNYY / B=sq", "<2>+<4>"),
    ((27, -432), "YNYY / B=-3sq", "<2>+<4>"),
    ((16, 27), "NYYY / A=sq", "<2>+<4>"),
    ((-432, 27), "NYYY / A=-3sq", "<2>+<4>"),
    ((4, 4), "NNYNN / A=sq, B=sq", "<2>+<2>"),
    ((-16875, 400), "NNYNN / A=-3sq, B=sq", "A2(2)"),
    ((4, -6912), "NNYNN / A=sq, B=-3sq", "A2(2)"),
    ((-16875, -10800), "NNYNN / A=-3sq, B=-3sq", "<6>+<6>"),
    ((1, 1), "NNNYY / A=sq, B=sq", "<2>+<2>"),
    ((1, -27), "NNNYY / A=sq, B=-3sq", "<2>+<6>"),
    ((-27, 1), "NNNYY / A=-3sq, B=sq", "<2>+<6>"),
    ((-27, -27), "NNNYY / A=-3sq, B=-3sq", "<6>+<6>"),
    ((1, 16), "NNYY / A=sq, B=sq", "<2>+<2>+<2>"),
    ((-27, 16), "NNYY / A=-3sq, B=sq", "<2>+A2(2)"),
    ((1, -432), "NNYY / A=sq, B=-3sq", "<2>+<2>+<2>"),
    ((-27, -432), "NNYY / A=-3sq, B=-3sq", "<2>+A2(2)"),
    ((16, 1), "NNYNY / A=sq, B=sq", "<2>+<2>+<2>"),
    ((16, -27), "NNYNY / A=sq, B=-3sq", "<2>+A2(2)"),
    ((-432, 1), "NNYNY / A=-3sq, B=sq", "<2>+<2>+<2>"),
    ((-432, -27), "NNYNY / A=-3sq, B=-3sq", "<2>+A2(2)"),
]
DETS = {"<2>+<4>": 8, "<2>+<2>": 4, "A2(2)": 12, "<6>+<6>": 36, "<2>+<6>": 12,
        "<2>+<2>+<2>": 8, "<2>+A2(2)": 24}


@pytest.mark.parametrize("pair,label,ltype", CASES, ids=[c[1] for c in CASES])
def test_case(pair, label, ltype):
    A, B = pair
    rep = rational_basis(A, B)
    assert rep.case_label == label
    assert rep.lattice_type == ltype
    assert determinant(rep.gram) == DETS[ltype]
    assert rep.verified and verify_basis(rep)
    curve = Curve.sextic(A, B)
    assert all(curve.on_curve(p) for p in rep.basis)
    assert [naive_height(A, B, p) for p in rep.basis] == [rep.gram[i][i] for i in range(rep.rank)]


# rank 1: the generator is the template of the single non-zero module, at its tabulated height
@pytest.mark.parametrize("pair,height", [
    ((4, 1), 2), ((-18252, 1), 6), ((1, 4), 2), ((1, -13824), 2), ((-13824, 1), 2),
    ((4, 32), 4), ((-12, -36), 12), ((32, 4), 4), ((-36, -12), 12),
])
def test_rank_one(pair, height):
    rep = rational_basis(*pair)
    assert rep.rank == 1 and rep.verified
    assert rep.gram == [[height]]


def test_sixth_power_scaling():
    rep = rational_basis(27 * 64, 16)
    assert rep.rank == 2 and rep.verified and rep.lattice_type == "<2>+<4>"


def test_negated_point_still_verifies():
    rep = rational_basis(27, 16)
    p = rep.basis[1]
    flipped = BasisReport(rep.certificate, [rep.basis[0], CurvePoint(p.x, -p.y)], rep.gram,
                          rep.lattice_type, True, rep.case_label)
    assert verify_basis(flipped)


def test_tampered_gram_fails():
    rep = rational_basis(27, 16)
    bad = BasisReport(rep.certificate, rep.basis, [[2, 0], [0, 6]], rep.lattice_type, True,
                      rep.case_label)
    diag = []
    assert not verify_basis(bad, diag)
    assert diag


def test_non_saturated_basis_fails():
    # R + S and R - S span an index-2 sublattice at (1, 1)-type NNYNN pairs
    rep = rational_basis(4, 4)
    r, s = rep.basis
    from mwsextic.ellcurve import add
    sub = [add(r, s), add(r, -s)]
    bad = BasisReport(rep.certificate, sub, [[4, 0], [0, 4]], "<4>+<4>", True, rep.case_label)
    from mwsextic.heightlat import gram_matrix
    assert gram_matrix(4, 4, sub) == [[4, 0], [0, 4]]
    assert not verify_basis(bad)


def test_instantiate_examples():
    assert instantiate_template("P", 1, 1) == parse_point("(-1, t^3)") or \
        instantiate_template("P", 1, 1) == parse_point("(-1, -t^3)")
    q = instantiate_template("Q", 27, 16)
    assert (q.x, abs(q.y.num.c[0])) == (parse_point("(-3*t^2, 4)").x, 4)
    d = instantiate_template("RmS", 27, 16)
    assert d.x == parse_point("(9/4*t^4, 0)").x
    assert d.y in (parse_point("(0, -27/8*t^6 - 4)").y, parse_point("(0, 27/8*t^6 + 4)").y)


@pytest.mark.parametrize("name,pair", [
    ("RpS", (1, 16)), ("RmS", (1, 16)), ("P2Ps", (-27, 1)), ("Q2Qs", (1, -27)),
    ("RpS2", (-27, 16)), ("RmS2", (16, -27)),
])
def test_template_heights(name, pair):
    pt = instantiate_template(name, *pair)
    assert Curve.sextic(*pair).on_curve(pt)
    assert naive_height(*pair, pt) == TABLE4_HEIGHTS[name]


def test_irrational_template():
    with pytest.raises(IrrationalRadical):
        instantiate_template("P", 2, 3)


def test_every_branch_of_a_template_is_on_curve():
    for branch in [(0, 0, 0), (3, 0, 0), (0, 3, 0)]:
        pt = instantiate_template("Q", 1, 1, branch)
        assert Curve.sextic(1, 1).on_curve(pt)
