from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st
from numpy.polynomial import Polynomial as P

from loopfront.cauchy import AbcData, jet_abc
from loopfront.classify import LABELS, classify_abc, classify_jet, rotate_jet, swap_xy
from loopfront.classify.jet import swallowtail_cubic, coefficients
from loopfront.errors import DegenerateData, NotOnCurve, OrderTooLow
from loopfront.jets import JetCoeffs

# (a, b, c) coefficient lists in increasing powers of t, parameter at index [0]
FAMILIES = {
    "CuspidalLips": ([0, 0, 1], [-1], [0, -1]),
    "CuspidalBeaks": ([0, 0, 1], [-1], [0, 1]),
    "CuspidalButterfly": ([0, 0, 0, 1], [-1], [1]),
    "TwoFiveCuspidalEdge": ([0, 1], [0, 1], [0.1]),
    "Shcherbak": ([0, 0, 1], [0, 1], [-1]),
}


def abc(a, b, c, A=None):
    return AbcData(P(a), P(b), P(c), None if A is None else P(A))


def test_example_jets(example_jets):
    for label, row in example_jets.items():
        rep = classify_jet(JetCoeffs.from_table(row))
        assert rep.label == label
        assert all(isinstance(c.value, Fraction) for c in rep.conditions)


def test_swallowtail_cubic_value(example_jets):
    rep = classify_jet(JetCoeffs.from_table(example_jets["Swallowtail"]))
    assert rep.value("swallowtail cubic") == 12
    assert rep.value("cusp") == 0


def test_lips_beaks_discriminants(example_jets):
    assert classify_jet(JetCoeffs.from_table(example_jets["CuspidalLips"])).value("Morse discriminant") == 9
    assert classify_jet(JetCoeffs.from_table(example_jets["CuspidalBeaks"])).value("Morse discriminant") == -27


def test_butterfly_is_zero_padded(example_jets):
    c = JetCoeffs.from_table(example_jets["CuspidalButterfly"])
    assert "zero-padded" in classify_jet(c).note
    with pytest.raises(OrderTooLow):
        classify_jet(c, strict=True)


def test_regular_and_rank0():
    assert classify_jet(JetCoeffs.from_table([1, 0, 0, 1])).label == "Regular"
    assert classify_jet(JetCoeffs.from_table([0, 1, 0, 1, 0, 1, 0, 1])).label == "Rank0"


def test_report_serializes(example_jets):
    d = classify_jet(JetCoeffs.from_table(example_jets["Swallowtail"])).to_dict()
    assert d["label"] == "Swallowtail" and d["codimension"] == 0
    assert {"id": "swallowtail cubic", "value": 12, "verdict": "nonzero"} in d["conditions"]


rat = st.fractions(min_value=-3, max_value=3, max_denominator=4)
jet3 = st.lists(rat, min_size=12, max_size=12).map(JetCoeffs.from_table)


@given(jet3)
@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_label_invariant_under_swap(c):
    assert classify_jet(swap_xy(c)).label == classify_jet(c).label


@given(jet3)
@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_label_invariant_under_rotation(c):
    assert classify_jet(rotate_jet(c)).label == classify_jet(c).label


def test_swap_is_involution(example_jets):
    c = JetCoeffs.from_table(example_jets["CuspidalBeaks"])
    assert swap_xy(swap_xy(c)) == c


@pytest.mark.parametrize("label", list(FAMILIES))
def test_abc_families_at_zero(label):
    rep = classify_abc(abc(*FAMILIES[label]), 0.0)
    assert rep.label == label


def test_abc_family_values():
    beaks = classify_abc(abc(*FAMILIES["CuspidalBeaks"]), 0.0)
    assert beaks.value("det Hess a") == pytest.approx(-3)
    tf = classify_abc(abc(*FAMILIES["TwoFiveCuspidalEdge"]), 0.0)
    assert tf.value("a'b''-b'a''+2c(a'^2+b'^2)") == pytest.approx(0.4)
    sh = classify_abc(abc(*FAMILIES["Shcherbak"]), 0.0)
    assert sh.value("b'c") == pytest.approx(-1)


@pytest.mark.parametrize("r", [0.2, -0.2])
def test_families_off_zero(r):
    a, b, c = FAMILIES["CuspidalLips"]
    rep = classify_abc(abc([r] + a[1:], b, c), 0.0)
    assert rep.label == "Regular"
    a, b, c = FAMILIES["Shcherbak"]
    assert classify_abc(abc([r] + a[1:], b, c), 0.0).label == "Regular"


def test_abc_general_speed():
    # A = 2 rescales the diagonal parameter; the label does not change
    a, b, c = FAMILIES["CuspidalBeaks"]
    assert classify_abc(abc(a, b, c, [2.0]), 0.0).label == "CuspidalBeaks"


def test_abc_errors():
    with pytest.raises(NotOnCurve):
        classify_abc(abc([0], [-1], [0]), 3.0)
    with pytest.raises(DegenerateData):
        classify_abc(abc([0, 1], [-1], [0], [0.0]), 0.0)


def test_abc_callables_match_polynomials():
    # finite-difference path agrees with the exact polynomial path
    a, b, c = FAMILIES["CuspidalLips"]
    d = AbcData(lambda t: t ** 2, lambda t: -1 + 0 * t, lambda t: -t)
    assert classify_abc(d, 0.0).label == "CuspidalLips"


@pytest.mark.parametrize("label", ["CuspidalEdge", "Swallowtail", "CuspidalLips", "CuspidalBeaks"])
def test_jet_and_abc_paths_agree(example_jets, label):
    c = JetCoeffs.from_table(example_jets[label])
    assert classify_abc(jet_abc(c, order=6, interval=(-0.3, 0.3)), 0.0).label == label
