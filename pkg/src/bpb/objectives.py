"""Built-in integer test functions and the pluggable evaluator contract.

Three classic shapes on {1..m}^n with a known optimum at (m/2, ..., m/2)
(m must be even): a quadratic bowl, a cosine-modulated multimodal bowl,
and a ridged bowl whose constant vectors are local minima.  External
objectives run as a subprocess speaking a line protocol: one request line
of n space-separated integers, one reply line with a decimal value.
"""

from __future__ import annotations

import os
import select
import shlex
import subprocess
import time
from dataclasses import dataclass
from math import isfinite

from . import backend
from .space import Point, SpaceSpec, validate_point

KIND_DEJONG = "dejong"
KIND_RASTRIGIN = "rastrigin"
KIND_RIDGE = "ridge"
KIND_EXTERNAL = "external"

BUILTIN_KINDS = (KIND_DEJONG, KIND_RASTRIGIN, KIND_RIDGE)
ALL_KINDS = BUILTIN_KINDS + (KIND_EXTERNAL,)

# wire codes for the hello frame
KIND_CODES = {KIND_DEJONG: 1, KIND_RASTRIGIN: 2, KIND_RIDGE: 3,
              KIND_EXTERNAL: 4}
CODE_KINDS = {v: k for k, v in KIND_CODES.items()}


class EvaluationError(RuntimeError):
    """An objective evaluation failed; carries the offending point."""

    def __init__(self, message: str, point: Point | None = None):
        super().__init__(message)
        self.point = point


def _check_even(m: int) -> None:
    if m % 2 != 0:
        raise ValueError(
            f"built-in objectives need an even alphabet size, got m={m}")


def dejong(x: Point, m: int) -> float:
    """sum (x_i - m/2)^2; zero exactly at the all-m/2 vector."""
    _check_even(m)
    return backend.get().dejong_value(tuple(x), m)


def rastrigin_int(x: Point, m: int, k: int) -> float:
    """nm + sum[(x_i - m/2)^2 - m cos(k pi (x_i - m/2) / m)].

    k = 0 reduces to the quadratic bowl; larger k adds oscillation and
    multimodality.  Zero exactly at the all-m/2 vector.
    """
    _check_even(m)
    if k < 0:
        raise ValueError(f"oscillation parameter k must be >= 0, got {k}")
    return backend.get().rastrigin_value(tuple(x), m, k)


def ridge(x: Point, m: int) -> float:
    """sum |x_i - m/2| + circular adjacent differences.

    Every constant vector (i, ..., i) is a local minimum of value
    n |i - m/2|; the global minimum 0 is the all-m/2 vector.
    """
    _check_even(m)
    return backend.get().ridge_value(tuple(x), m)


@dataclass(frozen=True)
class ObjectiveSpec:
    """Which objective to run, over which space."""

    kind: str
    space: SpaceSpec
    rastrigin_k: int = 0
    external_cmd: str | None = None

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise ValueError(f"unknown objective kind {self.kind!r}")
        if self.kind in BUILTIN_KINDS:
            _check_even(self.space.m)
            if not self.space.m < self.space.n:
                raise ValueError(
                    f"built-in objectives need m < n, got m={self.space.m}, "
                    f"n={self.space.n}")
        if self.kind == KIND_RASTRIGIN and self.rastrigin_k < 0:
            raise ValueError("rastrigin_k must be >= 0")
        if self.kind == KIND_EXTERNAL and not self.external_cmd:
            raise ValueError("external objective needs a command")


@dataclass(frozen=True)
class Evaluation:
    """One evaluated point with its wall-clock evaluation time (seconds)."""

    point: Point
    value: float
    eval_duration: float = 0.0


class BuiltinEvaluator:
    """Evaluates one of the built-in functions, optionally with a simulated
    per-point delay standing in for an expensive objective."""

    def __init__(self, spec: ObjectiveSpec, delay_s: float = 0.0):
        self._m = spec.space.m
        self._k = spec.rastrigin_k
        self._delay = delay_s
        kern = backend.get()
        self._fn = {
            KIND_DEJONG: lambda x: kern.dejong_value(x, self._m),
            KIND_RASTRIGIN: lambda x: kern.rastrigin_value(x, self._m, self._k),
            KIND_RIDGE: lambda x: kern.ridge_value(x, self._m),
        }[spec.kind]

    def evaluate(self, point: Point) -> tuple[float, float]:
        start = time.perf_counter()
        if self._delay > 0.0:
            time.sleep(self._delay)
        value = self._fn(point)
        return value, time.perf_counter() - start

    def close(self) -> None:
        pass


class ExternalEvaluator:
    """Holds one external objective process and exchanges lines with it.

    At most one evaluation is in flight per instance; spawn one instance
    per worker context.
    """

    def __init__(self, cmd: str, n: int, timeout_s: float = 60.0,
                 delay_s: float = 0.0):
        self._n = n
        self._timeout = timeout_s
        self._delay = delay_s
        self._buf = b""
        try:
            self._proc = subprocess.Popen(
                shlex.split(cmd), stdin=subprocess.PIPE,
                stdout=subprocess.PIPE)
        except OSError as exc:
            raise EvaluationError(f"cannot start external objective: {exc}")

    def _read_line(self, point: Point) -> str:
        fd = self._proc.stdout.fileno()
        deadline = time.monotonic() + self._timeout
        while b"\n" not in self._buf:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise EvaluationError("external objective timed out", point)
            ready, _, _ = select.select([fd], [], [], remaining)
            if not ready:
                raise EvaluationError("external objective timed out", point)
            chunk = os.read(fd, 4096)
            if not chunk:
                code = self._proc.poll()
                raise EvaluationError(
                    f"external objective closed its output (exit {code})",
                    point)
            self._buf += chunk
        line, self._buf = self._buf.split(b"\n", 1)
        return line.decode("utf-8", errors="replace").strip()

    def evaluate(self, point: Point) -> tuple[float, float]:
        start = time.perf_counter()
        if self._delay > 0.0:
            time.sleep(self._delay)
        request = " ".join(str(c) for c in point) + "\n"
        try:
            self._proc.stdin.write(request.encode("ascii"))
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError):
            raise EvaluationError("external objective pipe closed", point)
        reply = self._read_line(point)
        try:
            value = float(reply)
        except ValueError:
            raise EvaluationError(
                f"external objective replied non-numeric {reply!r}", point)
        if not isfinite(value):
            raise EvaluationError(
                f"external objective replied non-finite {value!r}", point)
        return value, time.perf_counter() - start

    def close(self) -> None:
        proc = self._proc
        if proc.poll() is None:
            try:
                proc.stdin.close()
            except OSError:
                pass
            try:
                proc.wait(timeout=2.0)
            except subprocess.TimeoutExpired:
                proc.terminate()
                try:
                    proc.wait(timeout=2.0)
                except subprocess.TimeoutExpired:
                    proc.kill()
                    proc.wait()
        if proc.stdout is not None:
            proc.stdout.close()


def make_evaluator(spec: ObjectiveSpec, delay_s: float = 0.0):
    """Build the evaluator for an objective spec.  Call close() when done."""
    if spec.kind == KIND_EXTERNAL:
        return ExternalEvaluator(spec.external_cmd, spec.space.n,
                                 delay_s=delay_s)
    return BuiltinEvaluator(spec, delay_s=delay_s)


def evaluate(spec: ObjectiveSpec, x: Point) -> Evaluation:
    """One-shot evaluation of a point (spawns and reaps any external
    process; engines hold persistent evaluators instead)."""
    validate_point(spec.space, x)
    evaluator = make_evaluator(spec)
    try:
        value, duration = evaluator.evaluate(tuple(x))
    finally:
        evaluator.close()
    return Evaluation(tuple(x), value, duration)
