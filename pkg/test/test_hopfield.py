import numpy as np
import pytest
from scipy.constants import c, hbar, pi

from src.hopfield import (
    CouplingSpec,
    bulk_polaritons,
    bulk_wavevector_squared,
    cavity_mode,
    cavity_polaritons,
    coulomb_coupling,
    polariton_gap,
    single_mode_levels,
    single_mode_polaritons,
    single_mode_relative,
    single_mode_shift,
)
from src.utils import DomainError, omega_cavity

# Constants for tests
OMEGA0 = 2.0e15
L = 100e-9


def test_bulk_polaritons_resonant():
    pair = bulk_polaritons(1.0 / c, CouplingSpec(1.0, 0.2, 1.0))
    assert pair.omega_plus == pytest.approx(1.21981, abs=1e-5)
    assert pair.omega_minus == pytest.approx(0.81980, abs=1e-5)
    assert pair.omega_plus * pair.omega_minus == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize(
    "ck, expected",
    [(0.5, (1.0, 0.5)), (2.0, (2.0, 1.0))],
    ids=["below-resonance", "above-resonance"],
)
def test_bulk_polaritons_uncoupled(ck, expected):
    pair = bulk_polaritons(ck / c, CouplingSpec(1.0, 0.0, 1.0))
    assert (pair.omega_plus, pair.omega_minus) == pytest.approx(expected)


def test_bulk_polaritons_domain():
    with pytest.raises(DomainError):
        bulk_polaritons(0.0, CouplingSpec(1.0, 0.2, 1.0))


def test_root_identities_on_random_samples():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        omega0 = 10 ** rng.uniform(13, 16)
        g = omega0 * 10 ** rng.uniform(-3, 1)
        length = 10 ** rng.uniform(-8, -5)
        spec = CouplingSpec.for_length(omega0, g, length)
        q = 10 ** rng.uniform(4, 8, size=100)
        n = rng.integers(1, 10, size=100)
        pair = cavity_polaritons(q, n, length, spec)
        mode = cavity_mode(q, n, length)
        plus, minus = pair.omega_plus, pair.omega_minus

        np.testing.assert_allclose(plus * minus, omega0 * mode, rtol=1e-12)
        np.testing.assert_allclose(
            plus**2 + minus**2, mode**2 + omega0**2 + 4 * g**2, rtol=1e-12
        )
        for w in (plus, minus):
            residual = (w**2 - mode**2) * (w**2 - omega0**2) - 4 * g**2 * w**2
            scale = (w**2 + mode**2) * (w**2 + omega0**2) + 4 * g**2 * w**2
            assert np.all(np.abs(residual) <= 1e-10 * scale)


def test_cavity_polaritons_reduce_to_single_mode():
    spec = CouplingSpec.for_length(OMEGA0, 0.3 * OMEGA0, L)
    pair = cavity_polaritons(0.0, 1, L, spec)
    single = single_mode_polaritons(spec)
    assert pair.omega_plus == pytest.approx(single.omega_plus, rel=1e-14)
    assert pair.omega_minus == pytest.approx(single.omega_minus, rel=1e-14)


def test_cavity_polaritons_detuned_asymptote():
    spec = CouplingSpec.for_length(OMEGA0, 0.2 * OMEGA0, L)
    q = 1e4 * pi / L
    pair = cavity_polaritons(q, 1, L, spec)
    assert pair.omega_plus == pytest.approx(cavity_mode(q, 1, L), rel=1e-6)
    assert OMEGA0 * (1 - 1e-6) < pair.omega_minus < OMEGA0


def test_cavity_polariton_layout():
    omega_l = omega_cavity(L)
    spec = CouplingSpec(2 * omega_l, 0.4 * omega_l, omega_l)
    q = np.linspace(0.0, 4 * pi / L, 81)
    upper_edge = np.sqrt(spec.omega0**2 + 4 * spec.g**2)
    for n in range(1, 5):
        pair = cavity_polaritons(q, n, L, spec)
        assert np.all(pair.omega_minus < spec.omega0)
        assert np.all(pair.omega_plus > upper_edge)


@pytest.mark.parametrize(
    "q, n", [(-1.0, 1), (1.0, 0)], ids=["negative-q", "zero-band"]
)
def test_cavity_polaritons_domain(q, n):
    with pytest.raises(DomainError):
        cavity_polaritons(q, n, L, CouplingSpec(OMEGA0, 0.0, omega_cavity(L)))


def test_single_mode_shift_small_cavity():
    g = 0.01 * OMEGA0
    length = 0.01 * pi * c / OMEGA0
    spec = CouplingSpec.for_length(OMEGA0, g, length)
    assert single_mode_shift(spec) == pytest.approx(
        hbar * g**2 * length / (pi * c), rel=1e-2
    )


def test_single_mode_shift_large_cavity():
    spec = CouplingSpec.for_length(OMEGA0, OMEGA0, 100 * pi * c / OMEGA0)
    assert single_mode_shift(spec) == pytest.approx(
        hbar * polariton_gap(spec) / 2, rel=1e-2
    )


def test_single_mode_shift_matches_branches():
    spec = CouplingSpec.for_length(OMEGA0, 0.7 * OMEGA0, L)
    pair = single_mode_polaritons(spec)
    direct = 0.5 * hbar * (
        pair.omega_plus + pair.omega_minus - spec.omega0 - spec.omegaL
    )
    assert single_mode_shift(spec) == pytest.approx(direct, rel=1e-10)
    assert single_mode_shift(CouplingSpec(OMEGA0, 0.0, OMEGA0)) == 0.0


def test_single_mode_relative():
    assert single_mode_relative(CouplingSpec(1.0, 0.0, 1.0)) == 0.0
    weak = CouplingSpec(1.0, 0.01, 1.0)
    assert single_mode_relative(weak) == pytest.approx(5.0e-5, abs=1e-7)
    # photon frequency far below the resonance
    spec = CouplingSpec(1.0, 0.5, 1e-12)
    assert single_mode_relative(spec) == pytest.approx(
        np.sqrt(2.0) - 1.0, rel=1e-9
    )


gap_cases = [
    ("uncoupled", 0.0, 0.0),
    ("half", 0.5, np.sqrt(2.0) - 1.0),
    ("deep-strong", 100.0, 199.0),
]


@pytest.mark.parametrize(
    "test_id, g, expected",
    gap_cases,
    ids=[case[0] for case in gap_cases],
)
def test_polariton_gap(test_id, g, expected):
    assert polariton_gap(CouplingSpec(1.0, g, 1.0)) == pytest.approx(
        expected, rel=1e-2, abs=1e-15
    )


def test_bulk_gap_has_no_propagating_solution():
    spec = CouplingSpec(1.0, 0.5, 1.0)
    inside = np.linspace(1.01, 1.41, 41)
    assert np.all(bulk_wavevector_squared(inside, spec) < 0)
    outside = np.array([0.5, 0.9, 1.5, 3.0])
    assert np.all(bulk_wavevector_squared(outside, spec) > 0)


@pytest.mark.parametrize("omega", [0.8, 1.6], ids=["lower", "upper"])
def test_bulk_dispersion_agrees_with_permittivity(omega):
    spec = CouplingSpec(1.0, 0.5, 1.0)
    k = np.sqrt(bulk_wavevector_squared(omega, spec))
    pair = bulk_polaritons(k, spec)
    branch = pair.omega_minus if omega < 1.0 else pair.omega_plus
    assert branch == pytest.approx(omega, rel=1e-12)


def test_single_mode_levels():
    spec = CouplingSpec(1.0, 0.3, 1.2)
    levels = single_mode_levels(spec, 2, 1)
    pair = single_mode_polaritons(spec)
    assert len(levels) == 6
    assert levels[0] == (
        0,
        0,
        pytest.approx(0.5 * (pair.omega_plus + pair.omega_minus)),
    )
    with pytest.raises(DomainError):
        single_mode_levels(spec, -1, 0)


def test_coulomb_coupling():
    spec = CouplingSpec(1.0, 0.4, 1.0)
    assert coulomb_coupling(spec, 4.0) == pytest.approx(0.2)
    with pytest.raises(DomainError):
        coulomb_coupling(spec, 0.0)


@pytest.mark.parametrize(
    "args",
    [(0.0, 0.1, 1.0), (1.0, -0.1, 1.0), (1.0, 0.1, 0.0)],
    ids=["omega0", "g", "omegaL"],
)
def test_coupling_spec_validation(args):
    with pytest.raises(DomainError):
        CouplingSpec(*args)
