from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class QilException(Exception):
    message: str = field(default="Simulation error")

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class InvalidStateSpecException(QilException):
    message: str = field(default="Invalid state specification")


@dataclass(frozen=True)
class TailToleranceException(QilException):
    message: str = field(default="Tail tolerance must lie in (0, 1e-6]")


@dataclass(frozen=True)
class NoonDomainException(QilException):
    message: str = field(default="State has support outside the NOON manifold")


@dataclass(frozen=True)
class DimensionMismatchException(QilException):
    message: str = field(default="Qubit counts do not match")


@dataclass(frozen=True)
class QubitIndexException(QilException):
    message: str = field(default="Qubit index out of range")


@dataclass(frozen=True)
class InvalidPairException(QilException):
    message: str = field(default="Invalid qubit pair")


@dataclass(frozen=True)
class ZeroProbabilityOutcomeException(QilException):
    message: str = field(default="Observed outcome has zero probability")


@dataclass(frozen=True)
class SchemeMismatchException(QilException):
    message: str = field(default="Measurement scheme does not match the pipeline that produced the state")


@dataclass(frozen=True)
class NoZeroFoundException(QilException):
    message: str = field(default="No sign change of the false-null amplitude found in (0, pi]")


@dataclass(frozen=True)
class RegimeViolationException(QilException):
    message: str = field(default="Spontaneous emission probability exceeds 1")


@dataclass(frozen=True)
class FormulaDomainException(QilException):
    message: str = field(default="Argument outside the domain of the closed form")


@dataclass(frozen=True)
class LossModelException(QilException):
    message: str = field(default="Mean number of lost photons exceeds the photon number")


@dataclass(frozen=True)
class ConfigurationException(QilException):
    message: str = field(default="Invalid configuration")
    key: Optional[str] = field(default=None)
    line: Optional[int] = field(default=None)

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.key is not None:
            where.append(f"key '{self.key}'")
        return f"{self.message} ({', '.join(where)})" if where else self.message


class OffResonanceWarning(UserWarning):
    """Raised through `warnings` when Γ/Δ is not small."""
