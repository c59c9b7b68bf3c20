"""Seeded Gaussian sketch generation."""

from dataclasses import dataclass

import numpy as np

from ..utils.errors import InvalidArgumentError


@dataclass
class SketchStream:
    """
    Reproducible source of standard normal sketch columns.

    Column ``c`` of stream ``(seed, stream_id)`` is drawn from its own
    ``SeedSequence(seed, spawn_key=(stream_id, c))``, so a block depends only on
    the columns it covers, never on how earlier blocks were partitioned.
    Ω is therefore never stored; any block can be regenerated on demand.

    Attributes:
        seed: Non-negative 64-bit seed
        stream_id: One stream per mode or draw
        cursor: Index of the next column handed out by :meth:`next_block`
    """

    seed: int
    stream_id: int = 0
    cursor: int = 0

    def __post_init__(self) -> None:
        if self.seed < 0 or self.stream_id < 0:
            raise InvalidArgumentError("Seed and stream id must be non-negative")

    def block(self, rows: int, start: int, cols: int) -> np.ndarray:
        """Columns ``start .. start+cols-1`` as a rows × cols matrix; cursor untouched."""
        if rows < 1 or cols < 1:
            raise InvalidArgumentError(f"Sketch block must be at least 1x1, got {rows}x{cols}")
        out = np.empty((rows, cols), dtype=np.float64, order="F")
        for offset in range(cols):
            sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id, start + offset))
            out[:, offset] = np.random.default_rng(sequence).standard_normal(rows)
        return out

    def next_block(self, rows: int, cols: int) -> np.ndarray:
        """Next ``cols`` columns of the stream; advances the cursor."""
        out = self.block(rows, self.cursor, cols)
        self.cursor += cols
        return out

    def child(self, stream_id: int) -> "SketchStream":
        """Fresh stream with the same seed and a different id."""
        return SketchStream(seed=self.seed, stream_id=stream_id)


def gaussian_block(s: SketchStream, rows: int, cols: int) -> np.ndarray:
    """Draw the next rows × cols Gaussian block from ``s``."""
    return s.next_block(rows, cols)
