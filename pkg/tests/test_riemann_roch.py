from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from t237.exact_algebra import UniPoly
from t237.intersection_calc import QDivisor, pullback, pullback_canonical, self_intersection, t237_config, type_one_config
from t237.quotient_sing import HJChain
from t237.riemann_roch import (
    NonIntegralEulerCharacteristic,
    PlurigeneraTable,
    SurfaceRRData,
    chi_of_multiple,
    hilbert_numerator,
    hypersurface_hilbert,
    min_volume,
    plurigenera,
    min_volume_surface_data,
    boundary_pair_data,
)

from reference_tables import CANONICAL_RUNS, PAIR_RUNS, expand

F = Fraction
DATASETS = {
    "canonical": (min_volume_surface_data, (1, 11, 26, 39), 78, CANONICAL_RUNS),
    "pair": (boundary_pair_data, (1, 6, 14, 21), 42, PAIR_RUNS),
}


def test_chi_examples():
    assert chi_of_multiple(boundary_pair_data(), 1) == 1
    assert chi_of_multiple(min_volume_surface_data(), 2) == 1
    assert chi_of_multiple(min_volume_surface_data(), 0) == 2
    assert chi_of_multiple(boundary_pair_data(), 0) == 2


@pytest.mark.parametrize("name", DATASETS)
def test_chi_integral_up_to_150(name):
    data = DATASETS[name][0]()
    for n in range(151):
        assert isinstance(chi_of_multiple(data, n), int)


def test_inconsistent_data_detected():
    bad = SurfaceRRData(2, F(1, 2), 1, "canonical", (HJChain((3,)),))
    with pytest.raises(NonIntegralEulerCharacteristic):
        chi_of_multiple(bad, 2)
    with pytest.raises(ValueError):
        SurfaceRRData(2, 0, 1, "canonical")
    with pytest.raises(ValueError):
        SurfaceRRData(2, 1, 1, "pair", (HJChain((2,)),))


@pytest.mark.parametrize("name", DATASETS)
def test_tables_match_published_runs(name):
    make, _, _, runs = DATASETS[name]
    table = plurigenera(make(), runs[-1][1])
    assert table.runs() == runs
    assert table[0] == 1
    expected = expand(runs)
    assert all(table[n] == v for n, v in expected.items())


def test_smooth_surface():
    data = SurfaceRRData(2, 1, 1, "canonical")
    t = plurigenera(data, 20)
    assert t[1] == 1
    assert all(t[n] == 2 + n * (n - 1) // 2 for n in range(2, 21))


@pytest.mark.parametrize("name", DATASETS)
def test_numerator_and_streams(name):
    make, weights, d, _ = DATASETS[name]
    table = plurigenera(make(), 150)
    num = hilbert_numerator(table, weights, 150)
    assert num == UniPoly([1] + [0] * (d - 1) + [-1])
    assert list(hypersurface_hilbert(weights, d, 150).coeffs) == list(table.values)
    assert all(x >= 0 for x in table.values)
    assert all(a <= b for a, b in zip(table.values, table.values[1:]))


def test_hilbert_examples():
    assert hilbert_numerator(PlurigeneraTable((1,) * 31), [1], 30) == 1
    assert hypersurface_hilbert((1, 6, 14, 21), 42, 10)[5] == 1
    assert hypersurface_hilbert((1, 11, 26, 39), 78, 20)[11] == 2
    conic = hypersurface_hilbert((1, 1), 2, 30)
    assert [conic[n] for n in range(2, 31)] == [2] * 29
    with pytest.raises(ValueError):
        hilbert_numerator([1, 1], [1], 5)


def test_min_volume_breakpoints():
    assert min_volume(1) == F(1, 143)
    c = F(7, 13)
    assert c * c / 42 == -F(11, 6) * c * c + 2 * c - F(7, 13) == F(7, 1014) == min_volume(c)
    c = F(6, 11)
    assert -F(11, 6) * c * c + 2 * c - F(7, 13) == F(1, 143) == min_volume(c)
    for bad in (0, F(11, 10), -1):
        with pytest.raises(ValueError):
            min_volume(bad)


@given(st.builds(F, st.integers(1, 10**4), st.integers(1, 10**4)), st.builds(F, st.integers(1, 10**4), st.integers(1, 10**4)))
def test_min_volume_monotone(a, b):
    a, b = sorted((a, b))
    if not (0 < a and b <= 1):
        return
    if b <= F(6, 11) and a < b:
        assert min_volume(a) < min_volume(b)
    assert min_volume(a) <= min_volume(b)


def test_volumes_agree_with_intersection_calculus():
    config = t237_config()
    D = pullback(config, [f"Theta{i}" for i in range(10) if i != 6], QDivisor({"Theta6": 1}))
    assert self_intersection(config, D) == boundary_pair_data().vol
    config = type_one_config()
    K = pullback_canonical(config, [f"Theta{i}" for i in range(10)], QDivisor({"E": 1}))
    assert self_intersection(config, K) == min_volume_surface_data().vol
