import mpmath as mp
import numpy as np
import pytest

from wavechange._coefficients import SCALING_FILTERS
from wavechange.errors import UnsupportedFilter
from wavechange.filter_design import (
    coiflet_refine,
    coiflet_residuals,
    coiflet_search,
    daubechies_scaling,
    least_asymmetric_scaling,
)
from wavechange.filters import (
    Family,
    FilterPair,
    filter_catalog,
    frequency_response,
    get_filter,
    qmf_from_scaling,
    supported_filters,
    validate_filter,
)

CATALOG = [filter_catalog(fam, order) for fam, order in supported_filters()]


def test_haar_coefficients():
    f = filter_catalog("haar")
    np.testing.assert_allclose(f.g, [1 / np.sqrt(2)] * 2, rtol=0, atol=1e-15)
    np.testing.assert_allclose(f.h, [1 / np.sqrt(2), -1 / np.sqrt(2)], rtol=0, atol=1e-15)


def test_daubechies_2_closed_form():
    s3 = np.sqrt(3.0)
    expected = np.array([1 + s3, 3 + s3, 3 - s3, 1 - s3]) / (4 * np.sqrt(2.0))
    np.testing.assert_allclose(filter_catalog("daubechies", 2).g, expected, atol=1e-15)


def test_la8_is_standard_orientation():
    g = filter_catalog("least_asymmetric", 8).g
    expected = [-0.0757657147893, -0.0296355276459, 0.4976186676324, 0.8037387518052,
                0.2978577956055, -0.0992195435769, -0.0126039672622, 0.0322231006040]
    np.testing.assert_allclose(g, expected, atol=1e-12)


@pytest.mark.parametrize("f", CATALOG, ids=lambda f: f.name)
def test_catalog_filter_validates(f):
    rep = validate_filter(f)
    assert rep.passed, rep.to_dict()


@pytest.mark.parametrize("f", CATALOG, ids=lambda f: f.name)
def test_qmf_relation_exact(f):
    assert np.array_equal(f.h, qmf_from_scaling(f.g))


def test_qmf_of_haar_example():
    np.testing.assert_array_equal(qmf_from_scaling([1, 1]), [1, -1])


def test_lengths_and_moments():
    assert filter_catalog("daubechies", 4).length == 8
    assert filter_catalog("least_asymmetric", 12).vanishing_moments == 6
    c = filter_catalog("coiflet", 3)
    assert c.length == 18 and c.vanishing_moments == 6


def test_names_and_aliases():
    assert get_filter("LA8") is filter_catalog("least_asymmetric", 8)
    assert get_filter("sym8") is get_filter("la8")
    assert get_filter("db1") is get_filter("haar")
    assert get_filter("coif2").name == "coif2"
    f = get_filter("db4")
    assert get_filter(f) is f


@pytest.mark.parametrize("bad", ["db11", "la7", "la22", "coif6", "foo", "haar2", "db", ""])
def test_unsupported(bad):
    with pytest.raises(UnsupportedFilter):
        get_filter(bad)


def test_unknown_family_and_bad_order():
    with pytest.raises(UnsupportedFilter):
        filter_catalog("meyer", 4)
    with pytest.raises(UnsupportedFilter):
        filter_catalog("daubechies", 2.5)


def test_filters_are_immutable_and_hashable():
    f = get_filter("db3")
    with pytest.raises(ValueError):
        f.g[0] = 0.0
    assert {f: 1}[get_filter("db3")] == 1
    assert f == FilterPair(f.g.copy(), f.h.copy(), Family.DAUBECHIES, 3, 3)


def test_validation_detects_broken_filter():
    f = get_filter("db4")
    g = f.g.copy()
    g[0] += 1e-6
    broken = FilterPair(g, f.h, f.family, f.order, f.vanishing_moments)
    rep = validate_filter(broken)
    assert not rep.passed
    failed = {c.name for c in rep.checks if not c.passed}
    assert "qmf_relation" in failed and "sum_g_sqrt2" in failed


def test_validation_odd_length():
    f = FilterPair(np.ones(3), np.ones(3), Family.HAAR, 1, 1)
    assert not validate_filter(f).passed


def test_frequency_response_lowpass():
    nu, mag = frequency_response(get_filter("db2").g, 64)
    assert nu[0] == 0 and nu[-1] == 0.5
    assert mag[0] == pytest.approx(np.sqrt(2), abs=1e-14)
    assert mag[-1] == pytest.approx(0.0, abs=1e-14)


# -- regeneration of the embedded tables -------------------------------------


@pytest.mark.parametrize("n", range(2, 11))
def test_daubechies_table_regenerates(n):
    fresh = np.array([float(v) for v in daubechies_scaling(n)])
    np.testing.assert_allclose(fresh, SCALING_FILTERS[("daubechies", n)], rtol=0, atol=1e-15)


@pytest.mark.parametrize("length", range(8, 21, 2))
def test_least_asymmetric_table_regenerates(length):
    fresh = np.array([float(v) for v in least_asymmetric_scaling(length)])
    np.testing.assert_allclose(fresh, SCALING_FILTERS[("least_asymmetric", length)], rtol=0, atol=1e-15)


@pytest.mark.parametrize("order", range(1, 6))
def test_coiflet_table_satisfies_equations(order):
    with mp.workdps(40):
        g = [mp.mpf(v) for v in SCALING_FILTERS[("coiflet", order)]]
        worst = max(abs(r) for r in coiflet_residuals(g, order))
    assert worst < 1e-15


@pytest.mark.parametrize("order", [1, 2])
def test_coiflet_search_regenerates(order):
    g = coiflet_refine(coiflet_search(order), order)
    fresh = np.array([float(v) for v in g])
    np.testing.assert_allclose(fresh, SCALING_FILTERS[("coiflet", order)], rtol=0, atol=1e-15)
