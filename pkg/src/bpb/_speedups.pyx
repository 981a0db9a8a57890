# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the sampling and evaluation hot paths.

Bit-compatible with _pykernels: same xoshiro256** stream, same seed
derivation, same draw order, same floating-point expression shapes.
test_backends.py asserts equality draw by draw.
"""

from libc.math cimport cos, M_PI
from libc.stdint cimport uint64_t, int32_t, int64_t
from libc.stdlib cimport malloc, free

import numpy as np

BACKEND_NAME = "compiled"

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15U


cdef inline uint64_t _rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


cdef inline uint64_t _mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9U
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBU
    return z ^ (z >> 31)


cdef uint64_t _derive2(uint64_t seed, uint64_t a, uint64_t b) nogil:
    cdef uint64_t h = _mix64(seed + GOLDEN)
    h = _mix64((h ^ a) + GOLDEN)
    h = _mix64((h ^ b) + GOLDEN)
    return h


cdef class Rng:
    """xoshiro256** stream seeded via splitmix64 from a 64-bit seed."""

    cdef uint64_t s0, s1, s2, s3

    def __init__(self, seed):
        self._seed(<uint64_t> (seed & 0xFFFFFFFFFFFFFFFF))

    cdef void _seed(self, uint64_t seed) nogil:
        cdef uint64_t s = seed
        s += GOLDEN
        self.s0 = _mix64(s)
        s += GOLDEN
        self.s1 = _mix64(s)
        s += GOLDEN
        self.s2 = _mix64(s)
        s += GOLDEN
        self.s3 = _mix64(s)
        if self.s0 == 0 and self.s1 == 0 and self.s2 == 0 and self.s3 == 0:
            self.s0 = GOLDEN

    cdef uint64_t _next(self) nogil:
        cdef uint64_t result = _rotl(self.s1 * 5U, 7) * 9U
        cdef uint64_t t = self.s1 << 17
        self.s2 ^= self.s0
        self.s3 ^= self.s1
        self.s1 ^= self.s2
        self.s0 ^= self.s3
        self.s2 ^= t
        self.s3 = _rotl(self.s3, 45)
        return result

    cdef double _next_double(self) nogil:
        return <double> (self._next() >> 11) * (1.0 / 9007199254740992.0)

    cdef uint64_t _next_below(self, uint64_t bound) nogil:
        cdef uint64_t threshold = (0U - bound) % bound
        cdef uint64_t x = self._next()
        while x < threshold:
            x = self._next()
        return x % bound

    def next_u64(self):
        return self._next()

    def next_double(self):
        return self._next_double()

    def next_below(self, bound):
        return self._next_below(<uint64_t> bound)


def hamming(tuple x, tuple y):
    cdef Py_ssize_t i, n = len(x)
    cdef int d = 0
    for i in range(n):
        if x[i] != y[i]:
            d += 1
    return d


def uniform_point(Rng rng, int n, int m):
    cdef list out = [0] * n
    cdef int i
    for i in range(n):
        out[i] = <long> rng._next_below(<uint64_t> m) + 1
    return tuple(out)


cdef tuple _sphere_point(Rng rng, tuple center, int radius, int m):
    cdef Py_ssize_t n = len(center)
    cdef list x = list(center)
    cdef int *idx = <int *> malloc(n * sizeof(int))
    if idx == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef int t, u, j
    cdef long d, cj
    try:
        for i in range(n):
            idx[i] = <int> i
        for t in range(radius):
            u = <int> rng._next_below(<uint64_t> (n - t))
            j = idx[u]
            idx[u] = idx[n - 1 - t]
            d = <long> rng._next_below(<uint64_t> (m - 1)) + 1
            cj = <long> center[j]
            x[j] = d if d < cj else d + 1
        return tuple(x)
    finally:
        free(idx)


def sphere_point(Rng rng, tuple center, int radius, int m):
    return _sphere_point(rng, center, radius, m)


cdef int _pick_radius(Rng rng, double[::1] cumprobs) nogil:
    cdef double u = rng._next_double()
    cdef Py_ssize_t i, n = cumprobs.shape[0]
    for i in range(n):
        if cumprobs[i] >= u:
            return <int> i
    return <int> (n - 1)


def pick_radius(Rng rng, double[::1] cumprobs):
    return _pick_radius(rng, cumprobs)


def ball_point(Rng rng, tuple center, int m, double[::1] cumprobs):
    return _sphere_point(rng, center, _pick_radius(rng, cumprobs), m)


def draw_ball_batch(lane, int region_index, long draw_base, int count,
                    tuple center, int m, double[::1] cumprobs):
    cdef uint64_t lane64 = <uint64_t> (lane & 0xFFFFFFFFFFFFFFFF)
    cdef list out = []
    cdef int t
    cdef Rng rng = Rng.__new__(Rng)
    for t in range(count):
        rng._seed(_derive2(lane64, <uint64_t> region_index,
                           <uint64_t> (draw_base + t)))
        out.append(_sphere_point(rng, center, _pick_radius(rng, cumprobs), m))
    return out


def dejong_value(tuple x, int m):
    cdef int h = m // 2
    cdef int64_t acc = 0
    cdef long c
    cdef Py_ssize_t i, n = len(x)
    for i in range(n):
        c = <long> x[i] - h
        acc += c * c
    return <double> acc


def rastrigin_value(tuple x, int m, int k):
    cdef int h = m // 2
    cdef double acc = 0.0
    cdef long c
    cdef Py_ssize_t i, n = len(x)
    for i in range(n):
        c = <long> x[i] - h
        acc += <double> (c * c) - m * cos(k * M_PI * <double> c / m)
    return <double> (n * m) + acc


def ridge_value(tuple x, int m):
    cdef int h = m // 2
    cdef int64_t total = 0
    cdef long a, b
    cdef Py_ssize_t i, n = len(x)
    for i in range(n):
        a = <long> x[i] - h
        total += a if a >= 0 else -a
    for i in range(n - 1):
        b = <long> x[i] - <long> x[i + 1]
        total += b if b >= 0 else -b
    b = <long> x[n - 1] - <long> x[0]
    total += b if b >= 0 else -b
    return <double> total


def hamming_to_center(coords, center):
    cdef int32_t[:, ::1] cv = coords
    c_arr = np.asarray(center, dtype=np.int32)
    cdef int32_t[::1] ctr = c_arr
    cdef Py_ssize_t rows = cv.shape[0]
    cdef Py_ssize_t n = cv.shape[1]
    out = np.empty(rows, dtype=np.int64)
    cdef int64_t[::1] ov = out
    cdef Py_ssize_t i, j
    cdef int64_t d
    with nogil:
        for i in range(rows):
            d = 0
            for j in range(n):
                if cv[i, j] != ctr[j]:
                    d += 1
            ov[i] = d
    return out
