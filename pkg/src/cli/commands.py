import argparse
import json
import logging
import sys
from typing import List, Optional

import pandas as pd

from .. import __version__
from ..cli.runner import pressure_finite_difference, run_scenario
from ..cli.scenario import FORMATS
from ..cli.scenarios import SCENARIOS
from ..cli.tables import FLOAT_FORMAT
from ..dielectric.materials import LorentzMedium
from ..fresnel.stack import MirrorStack, gold_mirror
from ..lifshitz.config import CavityConfig, QuadratureSpec
from ..lifshitz.energy import delta_U
from ..ssa.screening import ssa_relative_shift
from ..ui.setup_logging import setup_logging
from ..utils.exceptions import ConfigError, DomainError
from ..utils.handle_exceptions import handle_exceptions
from ..utils.units import omega_cavity, parse_quantity

logger = logging.getLogger(__name__)

MIRRORS = {
    "pec": MirrorStack.pec,
    "gold": gold_mirror,
    "gold-bulk": lambda: gold_mirror(None),
}


def _coupling(text: str, omega0: float) -> float:
    """--g takes a multiple of omega0 or a frequency with a unit."""
    try:
        return float(text) * omega0
    except ValueError:
        return parse_quantity(text, "frequency", "--g", {"omega0": omega0})


@handle_exceptions
def run_command(args: argparse.Namespace) -> int:
    return run_scenario(
        args.config,
        rel_tol=args.rel_tol,
        fmt=args.format,
        output=args.output,
        workers=args.threads,
    )


@handle_exceptions
def energy_command(args: argparse.Namespace) -> Optional[int]:
    """One cavity point: coupled and uncoupled energy and their difference."""
    length = parse_quantity(args.L, "length", "--L")
    if not length > 0:
        raise ConfigError("--L", "length must be > 0")
    temperature = parse_quantity(args.T, "temperature", "--T")
    if temperature < 0:
        raise ConfigError("--T", "temperature must be >= 0")
    context = {"omegaL": omega_cavity(length)}
    omega0 = parse_quantity(args.omega0, "frequency", "--omega0", context)
    g = _coupling(args.g, omega0)
    try:
        gap = LorentzMedium(omega0, g, eps_inf=args.eps_inf)
        cavity = CavityConfig(
            length,
            gap,
            MIRRORS[args.material](),
            MIRRORS[args.material](),
            temperature,
        )
        spec = QuadratureSpec(rel_tol=args.rel_tol or 1e-8)
    except DomainError as e:
        raise ConfigError("arguments", str(e))

    result = delta_U(cavity, g, 0.0, spec, args.threads)
    record = {
        "version": __version__,
        "material": args.material,
        "L_m": length,
        "T_K": temperature,
        "omega0_rad_per_s": omega0,
        "g_over_omega0": g / omega0,
        "eps_inf": args.eps_inf,
        "U_uncoupled": result.uncoupled.u_per_area,
        "U_coupled": result.coupled.u_per_area,
        "delta_U": result.delta,
        "relative_shift": 1.0
        - result.coupled.u_per_area / result.uncoupled.u_per_area,
        "ssa_relative_shift": ssa_relative_shift(omega0, g, args.eps_inf),
        "rel_tol_achieved": result.rel_tol_achieved,
        "matsubara_terms": result.coupled.matsubara_terms_used,
    }
    if args.pressure_dL is not None:
        dL = parse_quantity(args.pressure_dL, "length", "--pressure-dL")
        pressure = pressure_finite_difference(cavity, dL, spec, args.threads)
        record["pressure"] = pressure.pressure
        record["pressure_extrapolated"] = pressure.extrapolated
        record["pressure_error"] = pressure.error_estimate

    if args.format == "csv":
        frame = pd.DataFrame([record])
        text = frame.to_csv(index=False, float_format=FLOAT_FORMAT)
    else:
        text = json.dumps(record, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"Wrote {args.output}")
    else:
        sys.stdout.write(text)
    return None


def list_command(args: argparse.Namespace) -> int:
    for name, defaults in SCENARIOS.items():
        kind = defaults.sections["scenario"]["kind"]
        sys.stdout.write(f"{name:8s} {kind:10s} {defaults.description}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cavity",
        description="Casimir-Lifshitz energies of molecular Fabry-Perot "
        "cavities",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Debug logging."
    )
    parser.add_argument(
        "-q", "--quiet", action="count", default=0, help="Warnings only."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--rel-tol", type=float, help="Relative tolerance.")
        sub.add_argument("--format", choices=FORMATS, help="Output format.")
        sub.add_argument("--output", help="Output path.")
        sub.add_argument(
            "--threads",
            "--workers",
            dest="threads",
            type=int,
            help="Maximum worker threads.",
        )

    run = commands.add_parser(
        "run", help="Run a scenario file or a built-in scenario by name."
    )
    run.add_argument("config", help="INI file or scenario name.")
    common(run)
    run.set_defaults(func=run_command)

    single = commands.add_parser("energy", help="Evaluate a single cavity.")
    single.add_argument("--L", required=True, help="Gap length, e.g. 100nm.")
    single.add_argument(
        "--g", default="0", help="Coupling in units of omega0, or with a unit."
    )
    single.add_argument(
        "--material", choices=sorted(MIRRORS), default="pec", help="Mirrors."
    )
    single.add_argument("--T", default="0K", help="Temperature, e.g. 300K.")
    single.add_argument(
        "--omega0", default="1 omegaL", help="Resonance, e.g. 0.1eV."
    )
    single.add_argument("--eps-inf", type=float, default=1.0)
    single.add_argument("--pressure-dL", help="Also compute -dU/dL, e.g. 1nm.")
    common(single)
    single.set_defaults(func=energy_command, format="csv")

    listing = commands.add_parser("list-scenarios", help="List scenarios.")
    listing.set_defaults(func=list_command)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose - args.quiet)
    return args.func(args)
