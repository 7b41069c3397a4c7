from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from src.domain.errors import SpinDomainError

TWO_PI = 2.0 * math.pi
NORM_TOLERANCE = 1e-10
# beta values this close outside [0, pi] are rounding noise and get clamped
BETA_SLACK = 1e-12


def normalize_angle(value: float) -> float:
    if not math.isfinite(value):
        raise SpinDomainError(
            code="INVALID_ANGLE",
            message="Úhel musí být konečné reálné číslo",
            context={"value": value},
        )
    reduced = math.fmod(value, TWO_PI)
    if reduced < 0.0:
        reduced += TWO_PI
    return 0.0 if reduced >= TWO_PI else reduced


def check_polar_angle(beta: float) -> float:
    if not math.isfinite(beta) or beta < -BETA_SLACK or beta > math.pi + BETA_SLACK:
        raise SpinDomainError(
            code="INVALID_ANGLE",
            message="Polární úhel 'beta' musí ležet v intervalu [0, π]",
            context={"beta": beta},
        )
    return min(max(beta, 0.0), math.pi)


@dataclass(frozen=True, slots=True)
class MagneticQuantumNumber:
    twice_m: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_m, 2)

    @classmethod
    def parse(cls, text: str | float | int | Fraction) -> MagneticQuantumNumber:
        try:
            doubled = Fraction(str(text).strip()) * 2
        except (ValueError, ZeroDivisionError):
            raise SpinDomainError(
                code="INVALID_MAGNETIC_NUMBER",
                message="Magnetické kvantové číslo musí být celé nebo poloviční číslo",
                context={"value": str(text)},
            ) from None
        if doubled.denominator != 1:
            raise SpinDomainError(
                code="INVALID_MAGNETIC_NUMBER",
                message="Magnetické kvantové číslo musí být celé nebo poloviční číslo",
                context={"value": str(text)},
            )
        return cls(twice_m=int(doubled))

    def __str__(self) -> str:
        return _half_integer_text(self.twice_m)


@dataclass(frozen=True, slots=True)
class Spin:
    twice_s: int

    def __post_init__(self) -> None:
        if isinstance(self.twice_s, bool) or not isinstance(self.twice_s, int) or self.twice_s < 1:
            raise SpinDomainError(
                code="INVALID_SPIN",
                message="Pole 'twice_s' musí být kladné celé číslo",
                context={"twice_s": self.twice_s},
            )

    @property
    def dimension(self) -> int:
        return self.twice_s + 1

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_s, 2)

    @classmethod
    def half(cls) -> Spin:
        return cls(twice_s=1)

    def magnetic_numbers(self) -> tuple[MagneticQuantumNumber, ...]:
        """Magnetic quantum numbers in storage order, +S first."""
        return tuple(
            MagneticQuantumNumber(twice_m=self.twice_s - 2 * position)
            for position in range(self.dimension)
        )

    def m_values(self) -> np.ndarray:
        return np.array(
            [(self.twice_s - 2 * position) / 2.0 for position in range(self.dimension)]
        )

    def check(self, m: MagneticQuantumNumber) -> MagneticQuantumNumber:
        if abs(m.twice_m) > self.twice_s or (self.twice_s - m.twice_m) % 2 != 0:
            raise SpinDomainError(
                code="INVALID_MAGNETIC_NUMBER",
                message=f"Magnetické kvantové číslo {m} není přípustné pro spin {self}",
                context={"twice_s": self.twice_s, "twice_m": m.twice_m},
            )
        return m

    def position_of(self, m: MagneticQuantumNumber) -> int:
        self.check(m)
        return (self.twice_s - m.twice_m) // 2

    def plus_count(self, m: MagneticQuantumNumber) -> int:
        """S + M, the number of spin-1/2 constituents aligned with the axis."""
        self.check(m)
        return (self.twice_s + m.twice_m) // 2

    def minus_count(self, m: MagneticQuantumNumber) -> int:
        self.check(m)
        return (self.twice_s - m.twice_m) // 2

    def __str__(self) -> str:
        return _half_integer_text(self.twice_s)


@dataclass(frozen=True, slots=True)
class EulerAngles:
    alpha: float
    beta: float
    gamma: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", normalize_angle(float(self.alpha)))
        object.__setattr__(self, "beta", check_polar_angle(float(self.beta)))
        object.__setattr__(self, "gamma", normalize_angle(float(self.gamma)))

    @classmethod
    def identity(cls) -> EulerAngles:
        return cls(0.0, 0.0, 0.0)

    def direction(self) -> BlochPoint:
        return BlochPoint(self.alpha, self.beta)


@dataclass(frozen=True, slots=True)
class BlochPoint:
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", normalize_angle(float(self.alpha)))
        object.__setattr__(self, "beta", check_polar_angle(float(self.beta)))

    @classmethod
    def north(cls) -> BlochPoint:
        return cls(0.0, 0.0)

    @classmethod
    def south(cls) -> BlochPoint:
        return cls(0.0, math.pi)

    @classmethod
    def from_cartesian(cls, vector: Sequence[float] | np.ndarray) -> BlochPoint:
        x, y, z = (float(c) for c in vector)
        radius = math.sqrt(x * x + y * y + z * z)
        if radius == 0.0:
            raise SpinDomainError(
                code="ZERO_VECTOR",
                message="Nulový vektor neurčuje bod na sféře",
            )
        beta = math.acos(max(-1.0, min(1.0, z / radius)))
        alpha = math.atan2(y, x) if (x != 0.0 or y != 0.0) else 0.0
        return cls(alpha, beta)

    def cartesian(self) -> np.ndarray:
        sin_beta = math.sin(self.beta)
        return np.array(
            [
                math.cos(self.alpha) * sin_beta,
                math.sin(self.alpha) * sin_beta,
                math.cos(self.beta),
            ]
        )

    def antipode(self) -> BlochPoint:
        return BlochPoint(self.alpha + math.pi, math.pi - self.beta)

    def angular_distance(self, other: BlochPoint) -> float:
        cosine = float(np.dot(self.cartesian(), other.cartesian()))
        return math.acos(max(-1.0, min(1.0, cosine)))

    def rotated(self, rotation: np.ndarray) -> BlochPoint:
        return BlochPoint.from_cartesian(np.asarray(rotation) @ self.cartesian())

    def as_record(self) -> dict[str, float]:
        return {"alpha": self.alpha, "beta": self.beta}


def _check_finite(vector: np.ndarray) -> None:
    if not np.all(np.isfinite(vector)):
        raise SpinDomainError(
            code="NON_FINITE",
            message="Amplitudy stavu musí být konečná čísla",
            context={"amplitudes": [str(a) for a in vector]},
        )


@dataclass(frozen=True, slots=True, eq=False)
class SpinState:
    """A unit ray representative in C^(2S+1), amplitudes stored +S first."""

    spin: Spin
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        vector = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if vector.shape[0] != self.spin.dimension:
            raise SpinDomainError(
                code="DIMENSION_MISMATCH",
                message=(
                    f"Stav spinu {self.spin} musí mít {self.spin.dimension} amplitud, "
                    f"obdrženo {vector.shape[0]}"
                ),
                context={"expected": self.spin.dimension, "actual": int(vector.shape[0])},
            )
        _check_finite(vector)
        norm = float(np.linalg.norm(vector))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise SpinDomainError(
                code="NOT_NORMALIZED",
                message="Amplitudy stavu musí mít jednotkovou normu",
                context={"norm": norm},
            )
        vector.setflags(write=False)
        object.__setattr__(self, "amplitudes", vector)

    @classmethod
    def normalized(cls, spin: Spin, vector: Iterable[complex] | np.ndarray) -> SpinState:
        raw = np.array(list(vector) if not isinstance(vector, np.ndarray) else vector, dtype=complex)
        _check_finite(raw)
        norm = float(np.linalg.norm(raw))
        if norm == 0.0:
            raise SpinDomainError(
                code="ZERO_VECTOR",
                message="Nulový vektor nereprezentuje žádný stav",
            )
        return cls(spin=spin, amplitudes=raw / norm)

    @classmethod
    def from_pairs(cls, spin: Spin, pairs: Sequence[Sequence[float]]) -> SpinState:
        return cls.normalized(spin, [complex(float(re), float(im)) for re, im in pairs])

    def as_pairs(self) -> list[list[float]]:
        return [[float(a.real), float(a.imag)] for a in self.amplitudes]

    def amplitude(self, m: MagneticQuantumNumber) -> complex:
        return complex(self.amplitudes[self.spin.position_of(m)])

    def overlap(self, other: SpinState) -> complex:
        if self.spin != other.spin:
            raise SpinDomainError(
                code="DIMENSION_MISMATCH",
                message="Stavy různých spinů nelze porovnávat",
                context={"left": self.spin.twice_s, "right": other.spin.twice_s},
            )
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def _half_integer_text(twice: int) -> str:
    if twice % 2 == 0:
        return str(twice // 2)
    return f"{twice}/2"
