"""Feasible-set geometry for integer vectors in {1..m}^n.

Distances, exact sphere/ball cardinalities, and exact uniform sampling over
Hamming spheres and balls.  Ball sampling is the two-stage procedure: pick a
sphere radius with probability proportional to the sphere's cardinality,
then pick a point uniformly on that sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

import numpy as np

from . import backend

Point = tuple[int, ...]

# enumerate_ball refuses to materialize balls larger than this
DEFAULT_ENUMERATION_CAP = 10 ** 6

# coordinates are held in int32 pool arrays
MAX_ALPHABET = 2 ** 31 - 2


@dataclass(frozen=True)
class SpaceSpec:
    """Search space {1..m}^n: n coordinates, m values each."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension n must be >= 1, got {self.n}")
        if self.m < 2:
            raise ValueError(f"alphabet size m must be >= 2, got {self.m}")
        if self.m > MAX_ALPHABET:
            raise ValueError(f"alphabet size m must be <= {MAX_ALPHABET}")

    def cardinality(self) -> int:
        """Exact number of points, m**n (arbitrary precision)."""
        return self.m ** self.n

    def log10_cardinality(self) -> float:
        """log10(m**n); usable when the exact count is unprintably large."""
        return self.n * math.log10(self.m)


def validate_point(spec: SpaceSpec, x: Point) -> None:
    if len(x) != spec.n:
        raise ValueError(f"point has {len(x)} coordinates, expected {spec.n}")
    for c in x:
        if not 1 <= c <= spec.m:
            raise ValueError(f"coordinate {c} outside [1, {spec.m}]")


@dataclass(frozen=True)
class Region:
    """Hamming ball: all points within `radius` of `center`."""

    center: Point
    radius: int

    def __post_init__(self):
        if not 0 <= self.radius <= len(self.center):
            raise ValueError(
                f"radius {self.radius} outside [0, {len(self.center)}]")


def _check_same_length(x: Point, y: Point) -> None:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")


def hamming_distance(x: Point, y: Point) -> int:
    """Number of coordinates where x and y differ."""
    _check_same_length(x, y)
    return backend.get().hamming(tuple(x), tuple(y))


def chebyshev_distance(x: Point, y: Point) -> int:
    """max_i |x_i - y_i| (utility metric; search itself uses Hamming)."""
    _check_same_length(x, y)
    return max(abs(a - b) for a, b in zip(x, y))


def manhattan_distance(x: Point, y: Point) -> int:
    """sum_i |x_i - y_i| (utility metric; search itself uses Hamming)."""
    _check_same_length(x, y)
    return sum(abs(a - b) for a, b in zip(x, y))


@lru_cache(maxsize=4096)
def sphere_count(spec: SpaceSpec, i: int) -> int:
    """Exact number of points at Hamming distance i from any center:
    (m-1)^i * C(n, i)."""
    if not 0 <= i <= spec.n:
        raise ValueError(f"sphere radius {i} outside [0, {spec.n}]")
    return (spec.m - 1) ** i * math.comb(spec.n, i)


@lru_cache(maxsize=4096)
def ball_count(spec: SpaceSpec, r: int) -> int:
    """Exact number of points within Hamming distance r of any center."""
    if not 0 <= r <= spec.n:
        raise ValueError(f"ball radius {r} outside [0, {spec.n}]")
    return sum(sphere_count(spec, i) for i in range(r + 1))


@lru_cache(maxsize=512)
def radius_cumprobs(spec: SpaceSpec, r: int) -> np.ndarray:
    """Cumulative sphere-selection probabilities P_0..P_r for ball radius r.

    Each P_i is the exact rational (sum of sphere counts up to i) / (ball
    count), correctly rounded to float64.  The last entry is exactly 1.0.
    """
    if not 0 <= r <= spec.n:
        raise ValueError(f"ball radius {r} outside [0, {spec.n}]")
    total = ball_count(spec, r)
    probs = np.empty(r + 1, dtype=np.float64)
    cum = 0
    for i in range(r + 1):
        cum += sphere_count(spec, i)
        probs[i] = float(Fraction(cum, total))
    probs.flags.writeable = False
    return probs


def sample_sphere_radius(spec: SpaceSpec, r: int, rng, kernels=None) -> int:
    """Pick a sphere radius j in [0, r] with probability N_j / |B_r|.

    One uniform draw u; returns the smallest j whose cumulative probability
    reaches u.
    """
    kern = kernels or backend.get()
    return kern.pick_radius(rng, radius_cumprobs(spec, r))


def sample_on_sphere(spec: SpaceSpec, center: Point, radius: int, rng,
                     kernels=None) -> Point:
    """Uniform point at exact Hamming distance `radius` from center."""
    if not 0 <= radius <= spec.n:
        raise ValueError(f"sphere radius {radius} outside [0, {spec.n}]")
    kern = kernels or backend.get()
    return kern.sphere_point(rng, tuple(center), radius, spec.m)


def sample_ball(spec: SpaceSpec, center: Point, r: int, rng,
                kernels=None) -> Point:
    """Uniform point in the Hamming ball of radius r around center."""
    if not 0 <= r <= spec.n:
        raise ValueError(f"ball radius {r} outside [0, {spec.n}]")
    kern = kernels or backend.get()
    return kern.ball_point(rng, tuple(center), spec.m, radius_cumprobs(spec, r))


def sample_uniform_space(spec: SpaceSpec, rng, kernels=None) -> Point:
    """Point with every coordinate independently uniform over {1..m}."""
    kern = kernels or backend.get()
    return kern.uniform_point(rng, spec.n, spec.m)


class BallTooLargeError(ValueError):
    """Ball enumeration refused: cardinality exceeds the configured cap."""


def iter_ball(spec: SpaceSpec, center: Point, r: int) -> Iterator[Point]:
    """Yield every point within Hamming distance r of center.

    Points come out grouped by distance (0, 1, ..., r); within a distance,
    ordered by coordinate-index combination, then replacement values.
    """
    if not 0 <= r <= spec.n:
        raise ValueError(f"ball radius {r} outside [0, {spec.n}]")
    others = {c: [v for v in range(1, spec.m + 1) if v != c]
              for c in set(center)}
    for dist in range(r + 1):
        for idxs in combinations(range(spec.n), dist):
            for repl in product(*(others[center[i]] for i in idxs)):
                x = list(center)
                for i, v in zip(idxs, repl):
                    x[i] = v
                yield tuple(x)


def enumerate_ball(spec: SpaceSpec, center: Point, r: int,
                   cap: int = DEFAULT_ENUMERATION_CAP) -> list[Point]:
    """Materialize the ball B_r(center); refuses if larger than `cap`."""
    count = ball_count(spec, r)
    if count > cap:
        raise BallTooLargeError(
            f"ball has {count} points, over the enumeration cap {cap}")
    return list(iter_ball(spec, center, r))
