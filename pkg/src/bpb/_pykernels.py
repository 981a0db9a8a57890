"""Pure-Python kernels: the reference implementation of the hot paths.

The compiled extension (_speedups) implements exactly the same operations
with identical bit-level semantics; either module can back the package.
Batch array operations lean on numpy, per-point sampling is plain Python.
"""

import math

import numpy as np

from .rng import MASK64, derive64, xoshiro_state_from_seed

BACKEND_NAME = "pure"


class Rng:
    """xoshiro256** stream with unbiased bounded draws.

    Bit-compatible with the compiled Rng: same seeding (splitmix64), same
    output sequence, same rejection scheme in next_below.
    """

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int):
        self._s0, self._s1, self._s2, self._s3 = xoshiro_state_from_seed(seed)

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        x = (s1 * 5) & MASK64
        result = (((x << 7) | (x >> 57)) & MASK64) * 9 & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & MASK64
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def next_double(self) -> float:
        # 53 top bits -> [0, 1)
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound); rejection keeps it unbiased."""
        threshold = ((1 << 64) - bound) % bound
        x = self.next_u64()
        while x < threshold:
            x = self.next_u64()
        return x % bound


def hamming(x: tuple, y: tuple) -> int:
    return sum(1 for a, b in zip(x, y) if a != b)


def uniform_point(rng: Rng, n: int, m: int) -> tuple:
    return tuple(rng.next_below(m) + 1 for _ in range(n))


def sphere_point(rng: Rng, center: tuple, radius: int, m: int) -> tuple:
    """Uniform point at exact Hamming distance `radius` from center.

    Draws `radius` distinct coordinates via a partial shuffle of the index
    list, then redraws each chosen coordinate uniformly over the other
    m - 1 values.
    """
    n = len(center)
    x = list(center)
    idx = list(range(n))
    last = n - 1
    for t in range(radius):
        u = rng.next_below(n - t)
        j = idx[u]
        idx[u] = idx[last - t]
        d = rng.next_below(m - 1) + 1
        x[j] = d if d < center[j] else d + 1
    return tuple(x)


def pick_radius(rng: Rng, cumprobs) -> int:
    """Smallest index i with cumprobs[i] >= u, u uniform on [0, 1)."""
    u = rng.next_double()
    for i in range(len(cumprobs)):
        if cumprobs[i] >= u:
            return i
    return len(cumprobs) - 1  # unreachable: last entry is 1.0


def ball_point(rng: Rng, center: tuple, m: int, cumprobs) -> tuple:
    return sphere_point(rng, center, pick_radius(rng, cumprobs), m)


def draw_ball_batch(lane: int, region_index: int, draw_base: int, count: int,
                    center: tuple, m: int, cumprobs) -> list:
    """Draw `count` ball points, one fresh seeded stream per draw.

    Seeding by (lane, region, global draw index) makes the output
    independent of how draws are batched or scheduled.
    """
    out = []
    for t in range(count):
        rng = Rng(derive64(lane, region_index, draw_base + t))
        out.append(ball_point(rng, center, m, cumprobs))
    return out


def dejong_value(x: tuple, m: int) -> float:
    h = m // 2
    return float(sum((c - h) * (c - h) for c in x))


def rastrigin_value(x: tuple, m: int, k: int) -> float:
    h = m // 2
    acc = 0.0
    for c in x:
        acc += (c - h) * (c - h) - m * math.cos(k * math.pi * (c - h) / m)
    return float(len(x) * m) + acc


def ridge_value(x: tuple, m: int) -> float:
    h = m // 2
    n = len(x)
    total = sum(abs(c - h) for c in x)
    for i in range(n - 1):
        total += abs(x[i] - x[i + 1])
    total += abs(x[n - 1] - x[0])
    return float(total)


def hamming_to_center(coords: np.ndarray, center) -> np.ndarray:
    """Hamming distance from each row of `coords` to `center` (int array)."""
    c = np.asarray(center, dtype=coords.dtype)
    return np.count_nonzero(coords != c, axis=1)
