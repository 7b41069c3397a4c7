from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Protocol

import numpy as np

from src.domain.cascade import CascadeStatistics
from src.domain.embedding import EquivalenceReport
from src.domain.majorana import Constellation
from src.domain.spin import Spin, SpinState

REPORT_SCHEMA = 1


class Report(Protocol):
    def to_payload(self) -> dict[str, Any]:
        ...

    def to_rows(self) -> list[dict[str, Any]]:
        ...


def finite_or_none(value: float) -> float | None:
    return float(value) if math.isfinite(value) else None


@dataclass(frozen=True, slots=True)
class DecomposeResult:
    source: SpinState
    constellation: Constellation
    round_trip_overlap: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.round_trip_overlap >= 1.0 - self.tol

    def to_payload(self) -> dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "twice_s": self.constellation.spin.twice_s,
            "points": self.constellation.as_records(),
            "round_trip_overlap": self.round_trip_overlap,
        }

    def to_rows(self) -> list[dict[str, Any]]:
        return [
            {"index": index, **point.as_record()}
            for index, point in enumerate(self.constellation.points)
        ]


@dataclass(frozen=True, slots=True)
class ReconstructResult:
    source: Constellation
    state: SpinState
    round_trip_overlap: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.round_trip_overlap >= 1.0 - self.tol

    def to_payload(self) -> dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "twice_s": self.state.spin.twice_s,
            "amplitudes": self.state.as_pairs(),
            "round_trip_overlap": self.round_trip_overlap,
        }

    def to_rows(self) -> list[dict[str, Any]]:
        return [
            {"m": str(m), "re": pair[0], "im": pair[1]}
            for m, pair in zip(self.state.spin.magnetic_numbers(), self.state.as_pairs())
        ]


@dataclass(frozen=True, slots=True)
class CoherentStateResult:
    state: SpinState
    constellation: Constellation

    def to_payload(self) -> dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "twice_s": self.state.spin.twice_s,
            "amplitudes": self.state.as_pairs(),
        }

    def to_rows(self) -> list[dict[str, Any]]:
        return [
            {"m": str(m), "re": pair[0], "im": pair[1]}
            for m, pair in zip(self.state.spin.magnetic_numbers(), self.state.as_pairs())
        ]


@dataclass(frozen=True, slots=True, eq=False)
class TransitionTableResult:
    """P_{M,M'} per beta; ``tables[i]`` belongs to ``betas[i]``."""

    spin: Spin
    betas: tuple[float, ...]
    tables: tuple[np.ndarray, ...]
    rows_selected: tuple[int, ...]

    @property
    def max_row_sum_error(self) -> float:
        return max(float(np.max(np.abs(t.sum(axis=1) - 1.0))) for t in self.tables)

    def to_payload(self) -> dict[str, Any]:
        numbers = self.spin.magnetic_numbers()
        return {
            "schema": REPORT_SCHEMA,
            "S": str(self.spin),
            "twice_s": self.spin.twice_s,
            "m_values": [str(m) for m in numbers],
            "max_row_sum_error": self.max_row_sum_error,
            "grid": [
                {
                    "beta": beta,
                    "rows": {
                        str(numbers[row]): [float(p) for p in table[row]]
                        for row in self.rows_selected
                    },
                }
                for beta, table in zip(self.betas, self.tables)
            ],
        }

    def to_rows(self) -> list[dict[str, Any]]:
        numbers = self.spin.magnetic_numbers()
        rows: list[dict[str, Any]] = []
        for beta, table in zip(self.betas, self.tables):
            for row in self.rows_selected:
                record: dict[str, Any] = {"beta": beta, "M": str(numbers[row])}
                for column, m_prime in enumerate(numbers):
                    record[f"P[M'={m_prime}]"] = float(table[row, column])
                rows.append(record)
        return rows


@dataclass(frozen=True, slots=True)
class EquivalenceSweepResult:
    reports: tuple[EquivalenceReport, ...]
    seed: int
    tol: float

    @property
    def all_passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def failures(self) -> int:
        return sum(1 for report in self.reports if not report.passed)

    def to_payload(self) -> dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "seed": self.seed,
            "tol": self.tol,
            "cases": len(self.reports),
            "failures": self.failures,
            "all_passed": self.all_passed,
            "max_delta": max((r.delta for r in self.reports), default=0.0),
            "records": self.to_rows(),
        }

    def to_rows(self) -> list[dict[str, Any]]:
        return [report.as_record() for report in self.reports]


@dataclass(frozen=True, slots=True)
class SimulationReport:
    statistics: CascadeStatistics
    source: dict[str, Any]
    sigma_band: float

    @property
    def within_band(self) -> bool:
        return self.statistics.within_band(self.sigma_band)

    def to_payload(self) -> dict[str, Any]:
        stats = self.statistics
        payload: dict[str, Any] = {
            "schema": REPORT_SCHEMA,
            "mode": stats.mode,
            "S": str(stats.spin),
            "twice_s": stats.spin.twice_s,
            "source": self.source,
            "alpha": stats.alpha,
            "beta": stats.beta,
            "trials": stats.trials,
            "seed": stats.seed,
            "histogram": {str(m): count for m, count in stats.histogram.items()},
            "exact": {str(m): p for m, p in stats.exact.items()},
            "max_deviation": stats.max_deviation,
            "max_sigma_deviation": finite_or_none(stats.max_sigma_deviation),
            "sigma_band": self.sigma_band,
            "within_band": self.within_band,
        }
        if stats.lambda_draws is not None:
            payload["lambda_draws"] = stats.lambda_draws
        return payload

    def to_rows(self) -> list[dict[str, Any]]:
        stats = self.statistics
        frequencies = stats.frequencies()
        return [
            {
                "M_prime": str(m),
                "count": stats.histogram[m],
                "frequency": frequencies[m],
                "exact": stats.exact[m],
            }
            for m in stats.spin.magnetic_numbers()
        ]
