"""Bijection between length-LW level windows and integers.

A window ``(c_0, ..., c_{LW-1})`` with digits in {-2, -1, 0, 1, 2} maps to
``sum(c_k * 5**k)``, a balanced base-5 integer covering exactly
``[-(5**LW - 1) // 2, (5**LW - 1) // 2]``.
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .quantizer import DSET, StepSignal


def code_bound(lw: int) -> int:
    """Largest code magnitude for window length lw."""
    if lw < 1:
        raise ValueError("window length must be >= 1")
    return (5 ** lw - 1) // 2


def encode(digits) -> int:
    """Integer code of one window of digits."""
    vec = np.asarray(digits)
    if vec.ndim != 1 or vec.size == 0:
        raise ValueError("digits must be a non-empty 1-D sequence")
    if not np.isin(vec, DSET).all():
        raise ValueError("digits must lie in {-2, -1, 0, 1, 2}")
    value = 0
    for k, c in enumerate(vec.tolist()):
        value += c * 5 ** k
    return value


def decode(code: int, lw: int) -> np.ndarray:
    """Window of digits for one integer code (inverse of encode)."""
    bound = code_bound(lw)
    if not -bound <= code <= bound:
        raise ValueError(f"code {code} outside [-{bound}, {bound}] for lw={lw}")
    digits = np.empty(lw, dtype=np.int64)
    value = int(code)
    for k in range(lw):
        r = (value + 2) % 5 - 2
        digits[k] = r
        value = (value - r) // 5
    return digits


def decode_array(codes, lw: int) -> np.ndarray:
    """Vectorized decode: (n,) codes -> (n, lw) digit rows."""
    values = np.asarray(codes, dtype=np.int64).copy()
    bound = code_bound(lw)
    if values.size and (np.abs(values) > bound).any():
        raise ValueError(f"codes outside [-{bound}, {bound}] for lw={lw}")
    digits = np.empty((values.size, lw), dtype=np.int64)
    for k in range(lw):
        r = (values + 2) % 5 - 2
        digits[:, k] = r
        values = (values - r) // 5
    return digits


def windows(s: StepSignal, lw: int) -> np.ndarray:
    """All stride-1 windows of the step signal as an (n - lw + 1, lw) array."""
    if lw < 1:
        raise ValueError("window length must be >= 1")
    if len(s) < lw:
        raise ValueError(f"signal of length {len(s)} shorter than window {lw}")
    return sliding_window_view(s.levels, lw)


def encode_windows(s: StepSignal, lw: int) -> np.ndarray:
    """Codes of all stride-1 windows, in signal order."""
    powers = 5 ** np.arange(lw, dtype=np.int64)
    return windows(s, lw) @ powers
