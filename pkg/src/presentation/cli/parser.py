from __future__ import annotations

import argparse

from src.application.contracts import OutputFormat, SimulationMode
from src.domain.majorana import PolynomialVariant

CSV_COLUMNS_HELP = """CSV columns:
  decompose    index, alpha, beta
  reconstruct  m, re, im
  coherent     m, re, im
  transprob    beta, M, P[M'=...] per M'
  equiv        S, twice_s, M, M_prime, alpha, beta, lhs, rhs, delta, pass
  simulate     M_prime, count, frequency, exact
"""


def seed_value(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"neplatný seed: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed musí ležet v rozsahu 0 až 2^64 - 1")
    return value


def non_negative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"neplatné číslo: {text!r}") from None
    if not value >= 0.0:
        raise argparse.ArgumentTypeError("tolerance nesmí být záporná")
    return value


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"neplatné celé číslo: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("hodnota musí být kladné celé číslo")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Path to settings.yaml (created with defaults if missing)")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level to stderr")
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=None,
        help="Output format; defaults to the settings value",
    )
    common.add_argument("--out", help="Output path; stdout when omitted")
    common.add_argument(
        "--degrees",
        action="store_true",
        help="Read --alpha/--beta in degrees instead of radians",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="spinstar",
        description="Majorana constellations, symmetric embeddings and measurement cascades of spin-S states.",
        epilog=CSV_COLUMNS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    decompose = commands.add_parser("decompose", parents=[common], help="State file -> constellation")
    decompose.add_argument("state_file")
    decompose.add_argument(
        "--variant",
        choices=[v.value for v in PolynomialVariant],
        default=PolynomialVariant.MAJORANA.value,
    )
    decompose.add_argument("--tol", type=non_negative_float, default=None)

    reconstruct = commands.add_parser(
        "reconstruct", parents=[common], help="Constellation file -> state"
    )
    reconstruct.add_argument("constellation_file")
    reconstruct.add_argument("--tol", type=non_negative_float, default=None)

    coherent = commands.add_parser("coherent", parents=[common], help="Write a coherent state file")
    coherent.add_argument("--spin-twice", type=int, required=True)
    coherent.add_argument("--m", required=True)
    coherent.add_argument("--alpha", type=float, default=0.0)
    coherent.add_argument("--beta", type=float, default=0.0)

    transprob = commands.add_parser(
        "transprob", parents=[common], help="Transition probability table over a beta grid"
    )
    transprob.add_argument("--spin-twice", type=int, required=True)
    transprob.add_argument("--m", default=None, help="Emit only the row of this M")
    transprob.add_argument("--beta", type=float, nargs="*", default=None)
    transprob.add_argument(
        "--grid", type=positive_int, default=7, help="Evenly spaced betas in [0, pi] when --beta is absent"
    )

    equiv = commands.add_parser(
        "equiv", parents=[common], help="Spin-S vs symmetrized tensor probabilities"
    )
    equiv.add_argument("--spin-twice", type=int, nargs="+", required=True)
    equiv.add_argument("--m", default=None)
    equiv.add_argument("--m-prime", default=None)
    equiv.add_argument("--samples", type=positive_int, default=20)
    equiv.add_argument("--seed", type=seed_value, default=None)
    equiv.add_argument("--tol", type=non_negative_float, default=None)

    simulate = commands.add_parser(
        "simulate", parents=[common], help="Monte Carlo of the measurement cascade"
    )
    simulate.add_argument(
        "--mode",
        choices=[m.value for m in SimulationMode],
        default=SimulationMode.QUANTUM.value,
    )
    simulate.add_argument("--spin-twice", type=int, default=None)
    simulate.add_argument("--m", default=None)
    simulate.add_argument("--state", default=None, help="State file instead of (S, M)")
    simulate.add_argument("--alpha", type=float, default=0.0)
    simulate.add_argument("--beta", type=float, default=0.0)
    simulate.add_argument("--trials", type=int, default=None)
    simulate.add_argument("--seed", type=seed_value, default=None)

    return parser
