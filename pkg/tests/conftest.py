import pytest

from harmonic_zeros import AnalyticPoly, HarmonicPoly, HarmonicTrinomial


def harmonic(h_desc, g_desc, general=False):
    """HarmonicPoly from descending coefficient lists, as written on paper."""
    return HarmonicPoly(AnalyticPoly.from_descending(h_desc), AnalyticPoly.from_descending(g_desc), general=general)


@pytest.fixture
def pc_half():
    return HarmonicTrinomial(5, 3, 0.5)


@pytest.fixture
def pc_two():
    return HarmonicTrinomial(5, 3, 2.0)
