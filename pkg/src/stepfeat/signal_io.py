"""Audio input: a minimal RIFF/WAVE PCM reader plus seeded synthetic signals.

Everything downstream works on normalized amplitude sequences, so the
reader scales integer PCM to [-1, 1] by the format's full-scale value and
averages multi-channel files down to mono.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np


class WavError(Exception):
    """Base class for WAV decoding failures."""


class NotWavError(WavError):
    """File is not a RIFF/WAVE container."""


class UnsupportedEncodingError(WavError):
    """WAVE file uses a non-PCM or unsupported PCM encoding."""


class EmptyDataError(WavError):
    """WAVE file has a zero-length data chunk."""


@dataclass(frozen=True)
class Signal:
    """A finite, non-empty sequence of real amplitudes with a sample rate."""

    samples: np.ndarray
    sample_rate_hz: int = 44100

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size == 0:
            raise ValueError("samples must be a non-empty 1-D sequence")
        if not np.isfinite(samples).all():
            raise ValueError("samples must be finite")
        if self.sample_rate_hz <= 0:
            raise ValueError("sample_rate_hz must be positive")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.samples.size


# fmt tag values we understand (WAVE_FORMAT_PCM and the EXTENSIBLE wrapper)
_FORMAT_PCM = 0x0001
_FORMAT_EXTENSIBLE = 0xFFFE
_PCM_SUBFORMAT_PREFIX = struct.pack("<H", _FORMAT_PCM)


def _iter_chunks(data: bytes):
    # RIFF chunks are word-aligned: odd-sized payloads carry a pad byte.
    pos = 12
    while pos + 8 <= len(data):
        cid, size = struct.unpack_from("<4sI", data, pos)
        body = data[pos + 8 : pos + 8 + size]
        yield cid, body
        pos += 8 + size + (size & 1)


def load_wav(path) -> Signal:
    """Decode a PCM WAV file into a mono Signal scaled to [-1, 1].

    Supports 8-bit unsigned and 16/24-bit signed little-endian integer
    samples; multi-channel data is averaged to mono. Raises NotWavError,
    UnsupportedEncodingError or EmptyDataError for the respective defects,
    and the usual OSError family for unreadable paths.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise NotWavError(f"{path}: not a RIFF/WAVE file")

    fmt = None
    pcm_data = None
    for cid, body in _iter_chunks(data):
        if cid == b"fmt " and fmt is None:
            fmt = body
        elif cid == b"data" and pcm_data is None:
            pcm_data = body
    if fmt is None or len(fmt) < 16:
        raise NotWavError(f"{path}: missing or truncated fmt chunk")
    if pcm_data is None:
        raise NotWavError(f"{path}: missing data chunk")

    tag, channels, rate, _, _, bits = struct.unpack_from("<HHIIHH", fmt, 0)
    if tag == _FORMAT_EXTENSIBLE:
        # extensible header: the real format lives in the SubFormat GUID
        if len(fmt) < 40 or fmt[24:26] != _PCM_SUBFORMAT_PREFIX:
            raise UnsupportedEncodingError(f"{path}: non-PCM extensible encoding")
        tag = _FORMAT_PCM
    if tag != _FORMAT_PCM:
        raise UnsupportedEncodingError(f"{path}: unsupported encoding tag {tag}")
    if bits not in (8, 16, 24):
        raise UnsupportedEncodingError(f"{path}: unsupported bit depth {bits}")
    if channels < 1:
        raise NotWavError(f"{path}: invalid channel count")
    if len(pcm_data) == 0:
        raise EmptyDataError(f"{path}: zero-length data chunk")

    frame = channels * bits // 8
    usable = len(pcm_data) - len(pcm_data) % frame
    if usable == 0:
        raise EmptyDataError(f"{path}: data chunk shorter than one frame")
    raw = pcm_data[:usable]

    if bits == 8:
        values = np.frombuffer(raw, dtype=np.uint8).astype(np.float64)
        values = (values - 128.0) / 128.0
    elif bits == 16:
        values = np.frombuffer(raw, dtype="<i2").astype(np.float64) / 32768.0
    else:
        b = np.frombuffer(raw, dtype=np.uint8).reshape(-1, 3).astype(np.int32)
        ints = b[:, 0] | (b[:, 1] << 8) | (b[:, 2] << 16)
        ints -= (ints >= 1 << 23) << 24
        values = ints.astype(np.float64) / 8388608.0

    if channels > 1:
        values = values.reshape(-1, channels).mean(axis=1)
    return Signal(values, sample_rate_hz=rate)


def gen_white_noise(n: int, seed: int, sample_rate_hz: int = 44100) -> Signal:
    """n independent samples uniform on [-1, 1] from a seeded generator."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    return Signal(rng.uniform(-1.0, 1.0, n), sample_rate_hz=sample_rate_hz)


def gen_correlated(n: int, smoothing: int, seed: int,
                   sample_rate_hz: int = 44100) -> Signal:
    """Moving-average-smoothed white noise, rescaled to peak amplitude 1.

    Draws n white samples and convolves with a length-`smoothing` boxcar
    (valid mode, so the output has n - smoothing + 1 samples). smoothing=1
    reduces to peak-rescaled white noise of the same seed.
    """
    if smoothing < 1:
        raise ValueError("smoothing must be >= 1")
    if n < smoothing:
        raise ValueError("n must be >= smoothing")
    white = gen_white_noise(n, seed).samples
    kernel = np.full(smoothing, 1.0 / smoothing)
    smooth = np.convolve(white, kernel, mode="valid")
    peak = np.abs(smooth).max()
    if peak == 0.0:
        raise ValueError("degenerate all-zero signal")
    return Signal(smooth / peak, sample_rate_hz=sample_rate_hz)
