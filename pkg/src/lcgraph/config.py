"""Run configuration shared by the CLI subcommands."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

RATIONAL_MODE = "rational"
NUMERIC_MODE = "numeric"


@dataclass(frozen=True)
class RunConfig:
    """Knobs every pipeline honors.

    ``coeff_mode`` selects how input series are parsed; rational inputs
    still fall back to numeric coefficients inside the eigenvalue lifter
    when an irrational leading coefficient forces it.
    """

    trunc_order: Fraction = Fraction(8)
    coeff_mode: str = RATIONAL_MODE
    precision_bits: int = 256
    seed: int = 0

    def __post_init__(self):
        if self.coeff_mode not in (RATIONAL_MODE, NUMERIC_MODE):
            raise ValueError(f"coeff_mode must be rational or numeric, "
                             f"got {self.coeff_mode!r}")
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be at least 64")
        if self.trunc_order <= 0:
            raise ValueError("trunc_order must be positive")


def parse_trunc(text: str) -> Fraction:
    """Accept '8', '17/2' and similar for the truncation order flag."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad truncation order {text!r}") from exc
    return value
