"""rtucker - randomized and structure-preserving Tucker decompositions."""

__version__ = "0.1.0"

from .algorithms import TuckerConfig, get_method, list_methods
from .config import NumericsConfig, RuntimeConfig, config
from .tensor import DenseTensor, SparseTensor, TuckerTensor

__all__ = [
    "__version__",
    "config",
    "DenseTensor",
    "NumericsConfig",
    "RuntimeConfig",
    "SparseTensor",
    "TuckerConfig",
    "TuckerTensor",
    "get_method",
    "list_methods",
]
