"""Kernel backend selection.

The compiled extension (_speedups) is preferred when importable; otherwise
the pure-Python kernels (_pykernels) back the package.  Both expose the same
surface and produce bit-identical results.  Set BPB_BACKEND=pure (or
=compiled) to force a choice; forcing an unavailable backend is an error.
"""

import os

from . import _pykernels

try:
    from . import _speedups
except ImportError:
    _speedups = None

_BACKENDS = {"pure": _pykernels}
if _speedups is not None:
    _BACKENDS["compiled"] = _speedups


def available() -> tuple:
    return tuple(sorted(_BACKENDS))


def get(name: str | None = None):
    """Return a kernel module by name, or the active default."""
    if name is None:
        return _ACTIVE
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} not available (have: {', '.join(available())})"
        ) from None


def active_name() -> str:
    return _ACTIVE.BACKEND_NAME


_forced = os.environ.get("BPB_BACKEND")
if _forced:
    _ACTIVE = get(_forced)
elif _speedups is not None:
    _ACTIVE = _speedups
else:
    _ACTIVE = _pykernels


def make_rng(seed: int, kernels=None):
    """Fresh deterministic stream for the given 64-bit seed."""
    return (kernels or _ACTIVE).Rng(seed)
