import logging

import pytest
from scipy.constants import N_A

from src.utils import (
    EV,
    EXIT_CONFIG_ERROR,
    EXIT_CONVERGENCE_ERROR,
    EXIT_OK,
    Config,
    ConfigError,
    ConvergenceError,
    DomainError,
    handle_exceptions,
    parse_grid,
    parse_quantity,
)

# Constants for tests
OMEGA0 = 2.0e15
DEFAULTS = {
    "cavity": {"L": "100 nm", "T": "0 K"},
    "quadrature": {"rel_tol": "1e-8"},
}
USER_INI = """
[cavity]
L = 250 nm

[gap]
kind = lorentz
omega0 = 0.1 eV
"""

quantity_cases = [
    ("length-nm", "100 nm", "length", None, 1e-7),
    ("length-um-no-space", "2.5um", "length", None, 2.5e-6),
    ("frequency-ev", "1 eV", "frequency", None, EV),
    ("frequency-mev", "100 meV", "frequency", None, 0.1 * EV),
    ("frequency-relative", "0.5 omega0", "frequency", {"omega0": OMEGA0}, 1e15),
    ("temperature", "300 K", "temperature", None, 300.0),
    ("temperature-bare", "0", "temperature", None, 0.0),
    ("temperature-bare-decimal", "4.2", "temperature", None, 4.2),
    ("density-molar", "1 M", "density", None, 1e3 * N_A),
    ("number", "1.77", "number", None, 1.77),
]


@pytest.mark.parametrize(
    "test_id, text, kind, context, expected",
    quantity_cases,
    ids=[case[0] for case in quantity_cases],
)
def test_parse_quantity(test_id, text, kind, context, expected):
    assert parse_quantity(text, kind, "field", context) == pytest.approx(
        expected, rel=1e-15
    )


bad_quantity_cases = [
    ("missing-unit", "100", "length", None),
    ("wrong-kind-unit", "100 eV", "length", None),
    ("garbage", "one hundred nm", "length", None),
    ("unresolved-relative", "0.5 omega0", "frequency", None),
    ("unit-on-number", "2 nm", "number", None),
]


@pytest.mark.parametrize(
    "test_id, text, kind, context",
    bad_quantity_cases,
    ids=[case[0] for case in bad_quantity_cases],
)
def test_parse_quantity_rejects(test_id, text, kind, context):
    with pytest.raises(ConfigError) as info:
        parse_quantity(text, kind, "cavity.L", context)
    assert info.value.field == "cavity.L"
    assert str(info.value).startswith("cavity.L:")


def test_parse_grid_linspace():
    values = parse_grid("linspace(0, 1, 3) nm", "length", "sweep.values")
    assert values == pytest.approx([0.0, 0.5e-9, 1e-9])


def test_parse_grid_geomspace_relative():
    values = parse_grid(
        "geomspace(1, 100, 3) omegaL", "frequency", "f", {"omegaL": 2.0}
    )
    assert values == pytest.approx([2.0, 20.0, 200.0])


def test_parse_grid_list_shares_trailing_unit():
    values = parse_grid("0, 77, 300 K", "temperature", "sweep.series_values")
    assert values == [0.0, 77.0, 300.0]


@pytest.mark.parametrize(
    "text",
    ["geomspace(0, 1, 3) nm", "linspace(0, 1) nm", "linspace(0, 1, 0) nm", ""],
    ids=["geomspace-zero", "two-args", "empty-linspace", "empty"],
)
def test_parse_grid_rejects(text):
    with pytest.raises(ConfigError):
        parse_grid(text, "length", "sweep.values")


def test_config_layers_file_over_defaults(tmp_path):
    path = tmp_path / "scenario.ini"
    path.write_text(USER_INI, encoding="utf-8")

    config = Config(str(path), defaults=DEFAULTS)

    assert config.get_config("cavity", "L") == "250 nm"
    assert config.get_config("cavity", "T") == "0 K"
    assert config.get_quantity("cavity", "L", "length") == pytest.approx(
        250e-9
    )
    assert config.items("gap") == {"kind": "lorentz", "omega0": "0.1 eV"}
    assert config.get_config("gap", "missing") is None


def test_config_set_clears_cache():
    config = Config(defaults=DEFAULTS)
    assert config.get_config("quadrature", "rel_tol") == "1e-8"

    config.set("quadrature", "rel_tol", "1e-4")
    config.set("output", "format", "json")

    assert config.get_config("quadrature", "rel_tol") == "1e-4"
    assert config.get_config("output", "format") == "json"
    assert "rel_tol = 1e-4" in config.to_ini()


def test_config_require_reports_field():
    config = Config(defaults=DEFAULTS)
    with pytest.raises(ConfigError) as info:
        config.require("gap", "kind")
    assert info.value.field == "gap.kind"


def test_config_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        Config(str(tmp_path / "absent.ini"))


def test_config_malformed_file(tmp_path):
    path = tmp_path / "broken.ini"
    path.write_text("L = 100 nm\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="error reading"):
        Config(str(path))


exit_code_cases = [
    ("ok-none", None, EXIT_OK),
    ("ok-explicit", 2, 2),
    (
        "config-error",
        ConfigError("cavity.L", "length must be > 0"),
        EXIT_CONFIG_ERROR,
    ),
    ("domain-error", DomainError("L must be > 0"), EXIT_CONFIG_ERROR),
    (
        "unwritable-output",
        PermissionError(13, "Permission denied", "/results/out.csv"),
        EXIT_CONFIG_ERROR,
    ),
    (
        "convergence-error",
        ConvergenceError("did not converge", -1.0, 1e-3, 10),
        EXIT_CONVERGENCE_ERROR,
    ),
]


@pytest.mark.parametrize(
    "test_id, outcome, expected",
    exit_code_cases,
    ids=[case[0] for case in exit_code_cases],
)
def test_handle_exceptions_exit_codes(test_id, outcome, expected, caplog):
    @handle_exceptions
    def command():
        if isinstance(outcome, Exception):
            raise outcome
        return outcome

    with caplog.at_level(logging.ERROR):
        assert command() == expected
    if isinstance(outcome, Exception):
        assert "command" in caplog.text


def test_convergence_error_keeps_partial_value():
    error = ConvergenceError("Matsubara sum did not converge", -2.5, 1e-4, 7)
    assert error.partial_value == -2.5
    assert error.rel_tol_achieved == 1e-4
    assert error.terms_used == 7
    assert "partial value" in str(error)
