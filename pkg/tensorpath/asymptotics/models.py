from typing import Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

Regime = Literal["CL", "MD", "SD", "IRRED_SD", "IRRED_CL"]


class AsymptoticEstimate(BaseModel):
    """Log-space value of an asymptotic formula, kept in its components."""

    log_value: float = Field(..., description="Natural log of the estimate")
    exponent_per_step: float = Field(..., description="delta (or log V(S)) multiplying N")
    linear_term: float = Field(0.0, description="N-independent exponent such as -<f, tau> or the gaussian term")
    log_prefactor: float = Field(..., description="-(m/2) log(2 pi N) + log|Pi| - log det A / 2 (+ Weyl factors)")
    regime: Regime
    error_order: str = Field(..., description="Remainder law of the formula, as metadata")
    N: int = Field(..., ge=1)
    degenerate: bool = Field(False, description="Leading term vanishes (Weyl denominator is zero)")

    @classmethod
    def compose(
        cls,
        N: int,
        exponent_per_step: float,
        linear_term: float,
        log_prefactor: float,
        regime: Regime,
        error_order: str,
        degenerate: bool = False,
    ) -> "AsymptoticEstimate":
        log_value = float("-inf") if degenerate else N * exponent_per_step + linear_term + log_prefactor
        return cls(
            log_value=log_value,
            exponent_per_step=exponent_per_step,
            linear_term=linear_term,
            log_prefactor=log_prefactor,
            regime=regime,
            error_order=error_order,
            N=N,
            degenerate=degenerate,
        )

    @model_validator(mode="after")
    def check_components(self):
        if self.degenerate:
            if self.log_value != float("-inf"):
                raise ValueError("A degenerate estimate must have log_value = -inf.")
            return self
        expected = self.N * self.exponent_per_step + self.linear_term + self.log_prefactor
        if abs(expected - self.log_value) > 1e-9 * max(1.0, abs(expected)):
            raise ValueError(f"log_value {self.log_value} does not match its components ({expected}).")
        return self


class RegimeDecision(BaseModel):
    gamma: Tuple[int, ...]
    N: int = Field(..., ge=1)
    distance: float = Field(..., ge=0.0)
    s_exponent: Optional[float] = Field(None, description="log(distance)/log N; None when undefined")
    regime: Literal["CL", "MD", "SD"]
