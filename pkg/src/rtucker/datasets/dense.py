"""Dense tensors stored as NumPy .npy files."""

from pathlib import Path

import numpy as np

from ..tensor import DenseTensor
from ..utils.errors import InvalidArgumentError


def read_dense(path: str | Path) -> DenseTensor:
    """
    Load a ``.npy`` array as a DenseTensor.

    Raises:
        InvalidArgumentError: If the file is missing, unreadable or not numeric
    """
    path = Path(path)
    try:
        data = np.load(path, allow_pickle=False)
    except (OSError, ValueError) as e:
        raise InvalidArgumentError(
            f"Cannot read a dense tensor from {path}", details={"path": str(path)}
        ) from e
    if not (np.issubdtype(data.dtype, np.integer) or np.issubdtype(data.dtype, np.floating)):
        raise InvalidArgumentError(f"{path} holds {data.dtype} data, expected real numbers")
    return DenseTensor(data)
