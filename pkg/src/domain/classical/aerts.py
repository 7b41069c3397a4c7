from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy as sp

from src.domain.embedding import Outcome
from src.domain.errors import SpinDomainError
from src.domain.spin import BlochPoint, bloch_of_state


@dataclass(frozen=True, slots=True)
class HiddenVariable:
    value: float

    def __post_init__(self) -> None:
        value = float(self.value)
        if not -1.0 <= value <= 1.0:
            raise SpinDomainError(
                code="INVALID_HIDDEN_VARIABLE",
                message="Skrytá proměnná musí ležet v intervalu [-1, 1]",
                context={"value": value},
            )
        object.__setattr__(self, "value", value)

    @classmethod
    def draw(cls, rng: np.random.Generator) -> HiddenVariable:
        return cls.from_uniform(float(rng.random()))

    @classmethod
    def from_uniform(cls, u: float) -> HiddenVariable:
        # u in [0, 1) maps onto (-1, 1]
        return cls(1.0 - 2.0 * u)


@dataclass(frozen=True, slots=True)
class ClassicalSpinHalf:
    """A spin-1/2 entity carried as a point of the sphere."""

    point: BlochPoint

    @classmethod
    def from_spinor(cls, vector: np.ndarray) -> ClassicalSpinHalf:
        return cls(point=bloch_of_state(vector))


def projection_on(state: ClassicalSpinHalf, direction: BlochPoint) -> float:
    """cos of the angle between the state point and the measurement direction."""
    cosine = float(np.dot(state.point.cartesian(), direction.cartesian()))
    return min(1.0, max(-1.0, cosine))


def aerts_decide(state: ClassicalSpinHalf, direction: BlochPoint, lv: HiddenVariable) -> Outcome:
    # lambda == cos(theta) resolves to +
    return Outcome.PLUS if lv.value <= projection_on(state, direction) else Outcome.MINUS


def aerts_sample(
    state: ClassicalSpinHalf,
    direction: BlochPoint,
    rng: np.random.Generator,
) -> Outcome:
    return aerts_decide(state, direction, HiddenVariable.draw(rng))


def aerts_plus_probability(state: ClassicalSpinHalf, direction: BlochPoint) -> float:
    """Length of {lambda <= cos(theta)} inside [-1, 1], divided by 2."""
    return (1.0 + projection_on(state, direction)) / 2.0


@lru_cache(maxsize=1)
def plus_probability_expression() -> tuple[sp.Symbol, sp.Expr]:
    """Symbolic lambda-average of the + indicator as a function of theta."""
    theta = sp.Symbol("theta", real=True)
    lam = sp.Symbol("lambda", real=True)
    density = sp.Rational(1, 2)
    return theta, sp.integrate(density, (lam, -1, sp.cos(theta)))
