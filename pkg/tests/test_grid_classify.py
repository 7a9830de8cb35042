import dataclasses

import numpy as np
import pytest

from loopfront.classify import classify_grid, find_swallowtails, refine_eta_root
from loopfront.errors import NotSingular


@pytest.mark.parametrize("label", ["CuspidalEdge", "Swallowtail", "CuspidalButterfly",
                                   "CuspidalLips", "CuspidalBeaks"])
def test_grid_agrees_with_jet(surface, label):
    assert classify_grid(surface(label), (0.0, 0.0)).label == label


def test_regular_point_raises(surface):
    with pytest.raises(NotSingular):
        classify_grid(surface("CuspidalEdge"), (0.3, 0.3))


def test_swallowtail_located(surface):
    sw = find_swallowtails(surface("Swallowtail"))
    assert len(sw) == 1 and np.hypot(*sw[0].point) < 1e-6
    assert find_swallowtails(surface("CuspidalEdge")) == []


def test_eta_root_snaps_to_base(surface):
    s = surface("Swallowtail")
    p = refine_eta_root(s, (0.01, -0.01))   # within the default radius 2h
    assert p is not None and np.hypot(*p) < 1e-6


def test_eta_root_none_far_away(surface):
    assert refine_eta_root(surface("Swallowtail"), (0.3, -0.3)) is None
