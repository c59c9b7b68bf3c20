"""Configuration management for rtucker."""
import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class NumericsConfig(BaseModel):
    """Numerical policy shared by kernels, decompositions and verification."""

    # Above this many elements a reconstruction is never densified
    densify_cap: int = Field(default=2**27, ge=1)

    # Max-norm tolerance on AᵀA - I for orthonormal factors
    orthonormality_tol: float = Field(default=1e-10, gt=0.0)

    # Strong RRQR swap threshold
    srrqr_eta: float = Field(default=2.0, ge=1.0)

    # Hard cap on sRRQR swaps (each swap grows |det| by more than eta)
    srrqr_max_swaps: int = Field(default=10_000, ge=1)

    # Power iteration for spectral norms
    spectral_norm_tol: float = Field(default=1e-10, gt=0.0)
    spectral_norm_max_iter: int = Field(default=1000, ge=1)

    # Appended range-finder blocks below this relative norm end the search
    range_finder_drop_tol: float = Field(default=1e-13, gt=0.0)


class RuntimeConfig(BaseModel):
    """Main runtime configuration."""

    app_name: str = Field(default="rtucker")
    version: str = Field(default="0.1.0")
    log_level: str = Field(default="INFO")

    numerics: NumericsConfig = Field(default_factory=NumericsConfig)

    # Bench defaults
    default_oversampling: int = Field(default=5, ge=0)
    bound_trials: int = Field(default=20, ge=1)
    runtime_trials: int = Field(default=3, ge=1)

    @classmethod
    def from_env(cls) -> "RuntimeConfig":
        """Load configuration from environment variables."""
        config = cls()

        if log_level := os.getenv("RTUCKER_LOG_LEVEL"):
            config.log_level = log_level.upper()

        if densify_cap := os.getenv("RTUCKER_DENSIFY_CAP"):
            config.numerics.densify_cap = int(densify_cap)

        if eta := os.getenv("RTUCKER_SRRQR_ETA"):
            config.numerics.srrqr_eta = float(eta)

        if trials := os.getenv("RTUCKER_BOUND_TRIALS"):
            config.bound_trials = int(trials)

        if trials := os.getenv("RTUCKER_RUNTIME_TRIALS"):
            config.runtime_trials = int(trials)

        return config


# Global configuration instance
config = RuntimeConfig.from_env()
