"""
Central registry of Tucker decomposition methods.

Maps the CLI method names to their implementations together with the inputs
each one needs, so the command line, benchmarks and verification share one
lookup.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from ..tensor import Tensor, TuckerTensor
from .adaptive import adaptive_r_hosvd, adaptive_r_sthosvd
from .config import TuckerConfig
from .deterministic import hosvd, sthosvd
from .randomized import r_hosvd, r_sthosvd
from .structure import sp_hosvd, sp_sthosvd

logger = logging.getLogger(__name__)

Decomposition = Callable[[Tensor | np.ndarray, TuckerConfig], TuckerTensor]


@dataclass(frozen=True)
class MethodDefinition:
    """
    A registered decomposition method.

    Attributes:
        name: CLI name, e.g. "r-sthosvd"
        func: Implementation taking ``(x, cfg)``
        family: "deterministic", "randomized", "adaptive" or "structure-preserving"
        description: One-line summary
        orthonormal: Whether factors have orthonormal columns
        needs_ranks: Whether ``cfg.ranks`` is required
        needs_tolerance: Whether ``cfg.tolerance`` is required
        sequential: Whether modes are processed in ``cfg.order``
    """

    name: str
    func: Decomposition
    family: str
    description: str = ""
    orthonormal: bool = True
    needs_ranks: bool = True
    needs_tolerance: bool = False
    sequential: bool = False

    @property
    def randomized(self) -> bool:
        return self.family != "deterministic"

    def __call__(self, x: Tensor | np.ndarray, cfg: TuckerConfig) -> TuckerTensor:
        return self.func(x, cfg)


class MethodRegistry:
    """Registration and lookup of decomposition methods by name."""

    def __init__(self) -> None:
        self._methods: dict[str, MethodDefinition] = {}

    def register(self, method: MethodDefinition) -> None:
        """
        Register a method.

        Raises:
            ValueError: If the method name is empty
        """
        if not method.name:
            raise ValueError("Method must have a non-empty name")

        if method.name in self._methods:
            logger.warning(f"Method '{method.name}' already registered, overwriting")

        self._methods[method.name] = method
        logger.debug(f"Registered method: {method.name}")

    def unregister(self, name: str) -> bool:
        """Remove a method; False if it was not registered."""
        if name in self._methods:
            del self._methods[name]
            logger.debug(f"Unregistered method: {name}")
            return True
        return False

    def get_method(self, name: str) -> MethodDefinition | None:
        return self._methods.get(name)

    def list_methods(self) -> list[str]:
        return list(self._methods.keys())

    def get_all_methods(self) -> dict[str, MethodDefinition]:
        return self._methods.copy()


_BUILTIN_METHODS = (
    MethodDefinition("hosvd", hosvd, "deterministic", "Truncated HOSVD"),
    MethodDefinition(
        "sthosvd", sthosvd, "deterministic", "Sequentially truncated HOSVD", sequential=True
    ),
    MethodDefinition("r-hosvd", r_hosvd, "randomized", "Randomized HOSVD"),
    MethodDefinition("r-sthosvd", r_sthosvd, "randomized", "Randomized STHOSVD", sequential=True),
    MethodDefinition(
        "adaptive-r-hosvd",
        adaptive_r_hosvd,
        "adaptive",
        "Tolerance-driven randomized HOSVD",
        needs_ranks=False,
        needs_tolerance=True,
    ),
    MethodDefinition(
        "adaptive-r-sthosvd",
        adaptive_r_sthosvd,
        "adaptive",
        "Tolerance-driven randomized STHOSVD",
        needs_ranks=False,
        needs_tolerance=True,
        sequential=True,
    ),
    MethodDefinition(
        "sp-hosvd",
        sp_hosvd,
        "structure-preserving",
        "Structure-preserving HOSVD",
        orthonormal=False,
    ),
    MethodDefinition(
        "sp-sthosvd",
        sp_sthosvd,
        "structure-preserving",
        "Structure-preserving STHOSVD",
        orthonormal=False,
        sequential=True,
    ),
)


# Global registry instance
_registry: MethodRegistry | None = None


def get_registry() -> MethodRegistry:
    """Get or create the global registry, pre-populated with the built-in methods."""
    global _registry
    if _registry is None:
        _registry = MethodRegistry()
        for method in _BUILTIN_METHODS:
            _registry.register(method)
    return _registry


def get_method(name: str) -> MethodDefinition | None:
    return get_registry().get_method(name)


def list_methods() -> list[str]:
    return get_registry().list_methods()
