"""Run configuration shared by the certifier, family scans, oracle and CLI."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class RunConfig:
    """Effort caps and reproducibility knobs.

    Every cap is positive; the seed has a fixed default so identical inputs
    produce byte-identical outputs.
    """

    # Factorization budget: trial division bound, then Brent-rho iterations.
    trial_bound: int = 1_000_000
    rho_budget: int = 10_000_000
    seed: int = 0

    # Witness searches (residue-class test parameters).
    witness_e_max: int = 1000
    witness_l_max: int = 6
    witness_c_max: int = 10

    # Divisor-candidate generation for the Turyn and size-bound stages.
    # Full divisor enumeration is used only for n up to turyn_full_divisor_max;
    # above that, candidates are the prime-power divisors plus the odd part.
    turyn_full_divisor_max: int = 1_000_000
    size_bound_h_max: int = 64

    # Oracle wall-clock caps, seconds (None = unlimited).
    oracle_time_cap: float | None = 60.0

    output_format: str = "text"

    def __post_init__(self) -> None:
        for name in ("trial_bound", "rho_budget", "witness_e_max",
                     "witness_l_max", "witness_c_max",
                     "turyn_full_divisor_max", "size_bound_h_max"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.oracle_time_cap is not None and self.oracle_time_cap <= 0:
            raise ValueError("oracle_time_cap must be positive or None")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")

    def with_(self, **kwargs) -> "RunConfig":
        return replace(self, **kwargs)


DEFAULT_CONFIG = RunConfig()
