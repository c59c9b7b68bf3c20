"""Configuration module for rtucker."""
from .settings import NumericsConfig, RuntimeConfig, config

__all__ = ["RuntimeConfig", "NumericsConfig", "config"]
