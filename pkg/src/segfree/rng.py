"""Counter-based random source with independent substreams.

Built on numpy's Philox bit generator keyed by ``(seed, stream)``, so
the same pair reproduces the same sequence on every platform. Normals
come from an explicit Box-Muller transform over the uniform stream
rather than numpy's ziggurat, keeping the mapping from raw bits to
samples documented and stable.
"""

from __future__ import annotations

import math

import numpy as np

_MIX_MULT = 0x9E3779B97F4A7C15  # splitmix64 increment, used to derive child streams


def _splitmix64(x: int) -> int:
    x = (x + _MIX_MULT) & 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return x ^ (x >> 31)


class Rng:
    """One Philox stream; not shareable mid-use, split substreams up front."""

    def __init__(self, seed: int, stream: int = 0):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.stream = int(stream) & 0xFFFFFFFFFFFFFFFF
        key = np.array([self.seed, self.stream], dtype=np.uint64)
        self._gen = np.random.Generator(np.random.Philox(key=key))

    def spawn(self, tag: int) -> "Rng":
        """Independent substream derived from (stream, tag); deterministic."""
        child = _splitmix64(self.stream ^ _splitmix64(tag & 0xFFFFFFFFFFFFFFFF))
        return Rng(self.seed, child)

    def uniform(self, shape=None) -> np.ndarray | float:
        """Uniforms in [0, 1) as float64."""
        return self._gen.random() if shape is None else self._gen.random(shape)

    def randn(self, shape) -> np.ndarray:
        """Standard normals via Box-Muller.

        Draws uniform pairs (u1, u2), maps u1 -> (0, 1] to keep the log
        finite, and returns r*cos / r*sin with r = sqrt(-2 ln u1).
        """
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        n = int(np.prod(shape)) if shape else 1
        pairs = (n + 1) // 2
        u1 = 1.0 - self._gen.random(pairs)
        u2 = self._gen.random(pairs)
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * math.pi * u2
        z = np.empty(2 * pairs)
        z[0::2] = r * np.cos(theta)
        z[1::2] = r * np.sin(theta)
        return z[:n].reshape(shape)

    def integers(self, n: int, shape=None) -> np.ndarray | int:
        """Uniform integers in [0, n) via floor(u * n) over the uniform stream."""
        if n <= 0:
            raise ValueError("integers: n must be positive")
        u = self.uniform(shape)
        if shape is None:
            return min(int(u * n), n - 1)
        return np.minimum((u * n).astype(np.int64), n - 1)

    def choice_without_replacement(self, n: int, k: int) -> np.ndarray:
        """First k positions of a uniform permutation of range(n)."""
        if not 0 <= k <= n:
            raise ValueError(f"choice_without_replacement: k={k} out of range for n={n}")
        keys = self._gen.random(n)
        return np.argsort(keys, kind="stable")[:k]
