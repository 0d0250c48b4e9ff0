import numpy as np
import pytest

from src.dielectric import (
    VACUUM,
    ConstantDielectric,
    DrudeMetal,
    LorentzMedium,
    PerfectConductor,
    eps_imag,
    eps_real,
    gold,
    has_real_pole,
    is_lossy,
    material_from_record,
    named_material,
    water_with,
)
from src.utils import ConfigError, DomainError, SpecialCaseError

# Constants for tests
LOSSLESS = LorentzMedium(omega0=1.0, g=0.5)
LOSSY = LorentzMedium(omega0=1.0, g=0.5, gamma=0.1)
CONTEXT = {"omegaL": 3.0e15}

imaginary_axis_cases = [
    ("lorentz-static", LOSSLESS, 0.0, 2.0),
    ("lorentz-lossy", LOSSY, 1.0, 1.0 + 1.0 / 2.1),
    ("lorentz-far", LOSSLESS, 1e9, 1.0),
    ("constant", ConstantDielectric(2.1), 5.0, 2.1),
    ("drude", DrudeMetal(omega_p=2.0, gamma=1.0), 1.0, 3.0),
]


@pytest.mark.parametrize(
    "test_id, material, xi, expected",
    imaginary_axis_cases,
    ids=[case[0] for case in imaginary_axis_cases],
)
def test_eps_imag(test_id, material, xi, expected):
    assert eps_imag(material, xi) == pytest.approx(expected, rel=1e-12)


def test_eps_imag_keeps_array_shape():
    xi = np.linspace(0.0, 10.0, 7)
    eps = eps_imag(LOSSY, xi)
    assert eps.shape == xi.shape
    assert np.all(np.diff(eps) <= 0)
    assert np.all(eps >= LOSSY.eps_inf)


def test_eps_imag_decays_to_eps_inf():
    medium = LorentzMedium(omega0=1.0, g=2.0, eps_inf=1.77)
    assert eps_imag(medium, 1e8) == pytest.approx(1.77, rel=1e-12)


def test_eps_imag_matches_eps_real_on_the_imaginary_axis():
    rng = np.random.default_rng(7)
    for _ in range(100):
        omega0, g, gamma, xi = rng.uniform(0.1, 5.0, size=4)
        material = LorentzMedium(omega0, g, gamma, rng.uniform(1.0, 3.0))
        assert eps_real(material, 1j * xi) == pytest.approx(
            eps_imag(material, xi), rel=1e-13
        )
    metal = gold()
    for xi in metal.omega_p * np.geomspace(1e-4, 10.0, 20):
        assert eps_real(metal, 1j * xi).real == pytest.approx(
            eps_imag(metal, xi), rel=1e-13
        )


real_axis_cases = [
    ("lorentz-static", LOSSLESS, 0.0, 2.0 + 0j),
    ("lorentz-resonance", LOSSY, 1.0, 1.0 + 10j),
    ("constant", ConstantDielectric(2.1), 3.0, 2.1 + 0j),
]


@pytest.mark.parametrize(
    "test_id, material, omega, expected",
    real_axis_cases,
    ids=[case[0] for case in real_axis_cases],
)
def test_eps_real(test_id, material, omega, expected):
    assert eps_real(material, omega) == pytest.approx(expected, rel=1e-12)


def test_eps_real_is_passive_for_lossy_media():
    omega = np.linspace(0.01, 3.0, 300)
    assert np.all(np.imag(eps_real(LOSSY, omega)) > 0)
    assert np.all(np.imag(eps_real(gold(), omega * 1e15)) > 0)


domain_error_cases = [
    ("negative-xi", lambda: eps_imag(LOSSLESS, -1.0), DomainError),
    ("nan-xi", lambda: eps_imag(LOSSLESS, float("nan")), DomainError),
    ("pec-imag", lambda: eps_imag(PerfectConductor(), 1.0), DomainError),
    ("pec-real", lambda: eps_real(PerfectConductor(), 1.0), DomainError),
    ("drude-static", lambda: eps_imag(gold(), 0.0), SpecialCaseError),
    ("drude-real-static", lambda: eps_real(gold(), 0.0), SpecialCaseError),
    ("lossless-pole", lambda: eps_real(LOSSLESS, 1.0), DomainError),
    ("lower-half-plane", lambda: eps_real(LOSSY, 1.0 - 0.1j), DomainError),
]


@pytest.mark.parametrize(
    "test_id, call, error",
    domain_error_cases,
    ids=[case[0] for case in domain_error_cases],
)
def test_permittivity_domain(test_id, call, error):
    with pytest.raises(error):
        call()


def test_special_case_is_a_domain_error():
    assert issubclass(SpecialCaseError, DomainError)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"omega0": 0.0},
        {"omega0": 1.0, "g": -0.1},
        {"omega0": 1.0, "gamma": -1.0},
        {"omega0": 1.0, "eps_inf": 0.5},
    ],
    ids=["zero-omega0", "negative-g", "negative-gamma", "eps-inf-below-one"],
)
def test_lorentz_validation(kwargs):
    with pytest.raises(DomainError):
        LorentzMedium(**kwargs)


def test_lorentz_static_quantities():
    medium = LorentzMedium(omega0=2.0, g=1.0, eps_inf=1.5)
    assert medium.strength == 4.0
    assert medium.static_eps() == pytest.approx(2.5)
    assert medium.screening_factor() == pytest.approx(1 / np.sqrt(2.5))
    assert medium.with_coupling(0.0).static_eps() == pytest.approx(1.5)


def test_oscillator_strength():
    medium = LorentzMedium.from_oscillator_strength(1.0, f=0.25, omega_p=4.0)
    assert medium.strength == pytest.approx(0.25 * 4.0**2)


def test_loss_and_named_materials():
    assert not is_lossy(LOSSLESS)
    assert is_lossy(LOSSY)
    assert is_lossy(gold())
    assert not is_lossy(VACUUM)
    assert has_real_pole(LOSSLESS)
    assert has_real_pole(gold())
    assert not has_real_pole(LorentzMedium(omega0=1.0, g=0.0))
    assert not has_real_pole(ConstantDielectric(2.1))
    assert not has_real_pole(PerfectConductor())
    assert named_material("Gold") == gold()
    assert named_material("unobtanium") is None
    assert water_with(LOSSLESS).eps_inf == pytest.approx(1.77)


def test_material_from_record_resolves_relative_units():
    record = {
        "kind": "lorentz",
        "omega0": "1 omegaL",
        "g": "0.5 omega0",
        "gamma": "0.05 omega0",
        "eps_inf": "1.77",
    }
    medium = material_from_record(record, "gap", CONTEXT)
    assert medium.omega0 == pytest.approx(3.0e15)
    assert medium.g == pytest.approx(1.5e15)
    assert medium.gamma == pytest.approx(1.5e14)
    assert medium.eps_inf == pytest.approx(1.77)


record_error_cases = [
    ("unknown-kind", {"kind": "plasma"}, "gap.kind"),
    ("missing-omega0", {"kind": "lorentz"}, "gap.omega0"),
    ("negative-g", {"kind": "lorentz", "omega0": "1 eV", "g": "-1 eV"}, "gap"),
    ("drude-missing-gamma", {"kind": "drude", "omega_p": "9 eV"}, "gap.gamma"),
]


@pytest.mark.parametrize(
    "test_id, record, field",
    record_error_cases,
    ids=[case[0] for case in record_error_cases],
)
def test_material_from_record_errors(test_id, record, field):
    with pytest.raises(ConfigError) as info:
        material_from_record(record, "gap", CONTEXT)
    assert info.value.field == field


def test_material_from_record_named_and_simple_kinds():
    glass = material_from_record({"kind": "glass"}, "m")
    assert glass == ConstantDielectric(2.1)
    assert material_from_record({"kind": "pec"}, "m") == PerfectConductor()
    assert material_from_record(
        {"kind": "constant", "eps": "4"}, "m"
    ) == ConstantDielectric(4.0)
