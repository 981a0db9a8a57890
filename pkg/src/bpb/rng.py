"""Deterministic random-stream seeding.

All randomness in this package flows from xoshiro256** generators (see the
backend kernels) whose 64-bit seeds are derived here with a splitmix64-style
chain.  Seeds are bound to *logical draw identity* — (run seed, iteration,
round, region, draw index) — never to worker identity, so the sample stream
is independent of how work is scheduled across workers.

The pure-Python arithmetic below is the reference; the compiled kernels
reimplement the same functions in C and are tested for bit equality.
"""

MASK64 = (1 << 64) - 1

# splitmix64 increment ("golden gamma").
GOLDEN = 0x9E3779B97F4A7C15

# Stream tags keep unrelated derivation chains disjoint.
ALLOC_STREAM = 0x616C6C6F63    # b"alloc"
DRAW_STREAM = 0x64726177       # b"draw"


def mix64(z: int) -> int:
    """splitmix64 output mixer (Stafford variant 13)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def splitmix64_next(state: int) -> tuple[int, int]:
    """Advance a splitmix64 state; returns (new_state, output)."""
    state = (state + GOLDEN) & MASK64
    return state, mix64(state)


def derive64(seed: int, *parts: int) -> int:
    """Fold integer parts into a 64-bit sub-stream seed.

    Left-associative: derive64(s, a, b) == derive64(derive64(s, a), b).
    """
    h = mix64((seed + GOLDEN) & MASK64)
    for p in parts:
        h = mix64(((h ^ (p & MASK64)) + GOLDEN) & MASK64)
    return h


def xoshiro_state_from_seed(seed: int) -> tuple[int, int, int, int]:
    """Expand a 64-bit seed into a xoshiro256** state via splitmix64."""
    s = seed & MASK64
    words = []
    for _ in range(4):
        s, out = splitmix64_next(s)
        words.append(out)
    if not any(words):
        words[0] = GOLDEN  # all-zero state is invalid for xoshiro
    return tuple(words)
