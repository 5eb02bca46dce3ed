"""Deterministic counter-based random streams.

Every sample index owns a substream keyed by integer hashing of
(seed, index, draw), so the output never depends on generation order,
batching, or worker count.  The mixer is splitmix64; uniforms are the top
53 bits.  A vectorized numpy implementation and a scalar numba kernel
produce identical bit streams.
"""

import numpy as np

from ._accel import USE_NUMBA, njit_or_plain

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_G2 = np.uint64(0xD1B54A32D192ED03)
_G3 = np.uint64(0x8CB92BA72F3D8DD7)
_INV53 = 1.0 / 9007199254740992.0  # 2^-53


def _mix_np(z):
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def index_key_np(seed, index):
    """64-bit key for a sample index; `index` may be a uint64 array."""
    s = _mix_np(np.uint64(seed) + _GOLDEN)
    return _mix_np(s ^ (np.asarray(index, dtype=np.uint64) + np.uint64(1)) * _G2)


def uniforms_np(seed, index, n, offset=0):
    """n uniforms in [0,1) for draws offset..offset+n-1 of one index's stream."""
    key = index_key_np(seed, np.uint64(index))
    draws = np.arange(offset, offset + n, dtype=np.uint64)
    z = _mix_np(key ^ (draws + np.uint64(1)) * _G3)
    return (z >> np.uint64(11)).astype(np.float64) * _INV53


def uniform_block_np(seed, indices, n, offset=0):
    """(len(indices), n) uniforms; row i is the stream of indices[i]."""
    keys = index_key_np(seed, np.asarray(indices, dtype=np.uint64))
    draws = np.arange(offset, offset + n, dtype=np.uint64)
    z = _mix_np(keys[:, None] ^ (draws[None, :] + np.uint64(1)) * _G3)
    return (z >> np.uint64(11)).astype(np.float64) * _INV53


@njit_or_plain
def _mix_nb(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@njit_or_plain
def index_key_nb(seed, index):
    s = _mix_nb(np.uint64(seed) + np.uint64(0x9E3779B97F4A7C15))
    return _mix_nb(s ^ (np.uint64(index) + np.uint64(1)) * np.uint64(0xD1B54A32D192ED03))


@njit_or_plain
def uniform_at_nb(key, draw):
    z = _mix_nb(key ^ (np.uint64(draw) + np.uint64(1)) * np.uint64(0x8CB92BA72F3D8DD7))
    return float(z >> np.uint64(11)) * (1.0 / 9007199254740992.0)


def uniforms(seed, index, n, offset=0):
    """Stream view used by non-hot code; numpy path is always fine here."""
    return uniforms_np(seed, index, n, offset)


__all__ = [
    "USE_NUMBA",
    "index_key_np",
    "uniforms_np",
    "uniform_block_np",
    "index_key_nb",
    "uniform_at_nb",
    "uniforms",
]
