from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

import numpy as np

from src.application.bootstrap import AppContainer
from src.application.contracts import SimulationMode
from src.application.dto import Report
from src.domain.majorana import PolynomialVariant
from src.domain.spin import MagneticQuantumNumber, Spin

EXIT_OK = 0
EXIT_SWEEP_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_ROUND_TRIP_FAILED = 3
EXIT_CAPACITY = 4


@dataclass(frozen=True, slots=True)
class CommandOutcome:
    report: Report
    exit_code: int = EXIT_OK
    write_output: bool = True
    diagnostic: str | None = None


class CliController:
    def __init__(self, container: AppContainer) -> None:
        self._container = container

    def dispatch(self, args: argparse.Namespace) -> CommandOutcome:
        handlers = {
            "decompose": self.decompose,
            "reconstruct": self.reconstruct,
            "coherent": self.coherent,
            "transprob": self.transprob,
            "equiv": self.equiv,
            "simulate": self.simulate,
        }
        return handlers[args.command](args)

    def decompose(self, args: argparse.Namespace) -> CommandOutcome:
        result = self._container.decompose_state_use_case.execute(
            args.state_file,
            variant=PolynomialVariant(args.variant),
            tol=args.tol,
        )
        if not result.passed:
            return CommandOutcome(
                report=result,
                exit_code=EXIT_ROUND_TRIP_FAILED,
                write_output=False,
                diagnostic=f"round-trip overlap {result.round_trip_overlap!r} < 1 - {result.tol!r}",
            )
        return CommandOutcome(report=result)

    def reconstruct(self, args: argparse.Namespace) -> CommandOutcome:
        result = self._container.reconstruct_state_use_case.execute(
            args.constellation_file,
            tol=args.tol,
        )
        if not result.passed:
            return CommandOutcome(
                report=result,
                exit_code=EXIT_ROUND_TRIP_FAILED,
                write_output=False,
                diagnostic=f"round-trip overlap {result.round_trip_overlap!r} < 1 - {result.tol!r}",
            )
        return CommandOutcome(report=result)

    def coherent(self, args: argparse.Namespace) -> CommandOutcome:
        result = self._container.coherent_state_use_case.execute(
            Spin(twice_s=args.spin_twice),
            MagneticQuantumNumber.parse(args.m),
            _angle(args.alpha, args.degrees),
            _angle(args.beta, args.degrees),
        )
        return CommandOutcome(report=result)

    def transprob(self, args: argparse.Namespace) -> CommandOutcome:
        if args.beta:
            betas = [_angle(beta, args.degrees) for beta in args.beta]
        else:
            betas = [float(b) for b in np.linspace(0.0, math.pi, args.grid)]
        result = self._container.transition_table_use_case.execute(
            Spin(twice_s=args.spin_twice),
            betas,
            MagneticQuantumNumber.parse(args.m) if args.m is not None else None,
        )
        return CommandOutcome(report=result)

    def equiv(self, args: argparse.Namespace) -> CommandOutcome:
        result = self._container.equivalence_sweep_use_case.execute(
            args.spin_twice,
            samples=args.samples,
            seed=args.seed,
            tol=args.tol,
            m=MagneticQuantumNumber.parse(args.m) if args.m is not None else None,
            m_prime=MagneticQuantumNumber.parse(args.m_prime) if args.m_prime is not None else None,
        )
        if not result.all_passed:
            return CommandOutcome(
                report=result,
                exit_code=EXIT_SWEEP_FAILED,
                diagnostic=f"{result.failures} of {len(result.reports)} cases exceed tol {result.tol!r}",
            )
        return CommandOutcome(report=result)

    def simulate(self, args: argparse.Namespace) -> CommandOutcome:
        spin = Spin(twice_s=args.spin_twice) if args.spin_twice is not None else None
        report = self._container.simulate_cascade_use_case.execute(
            SimulationMode(args.mode),
            alpha=_angle(args.alpha, args.degrees),
            beta=_angle(args.beta, args.degrees),
            spin=spin,
            m=MagneticQuantumNumber.parse(args.m) if args.m is not None else None,
            state_path=args.state,
            trials=args.trials,
            seed=args.seed,
        )
        return CommandOutcome(report=report)


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else float(value)
