import struct

import numpy as np
import pytest


def pack_wav(fmt_tag, channels, rate, bits, payload, fmt_extra=b""):
    """Assemble a RIFF/WAVE byte string from raw parts (test-only encoder)."""
    block = channels * bits // 8
    fmt_body = struct.pack("<HHIIHH", fmt_tag, channels, rate,
                           rate * block, block, bits) + fmt_extra
    chunks = b"fmt " + struct.pack("<I", len(fmt_body)) + fmt_body
    if len(fmt_body) % 2:
        chunks += b"\x00"
    chunks += b"data" + struct.pack("<I", len(payload)) + payload
    if len(payload) % 2:
        chunks += b"\x00"
    return b"RIFF" + struct.pack("<I", 4 + len(chunks)) + b"WAVE" + chunks


def write_pcm16(path, samples, channels=1, rate=44100):
    """Write interleaved 16-bit signed samples as a WAV file."""
    flat = [int(s) for s in np.asarray(samples).reshape(-1)]
    payload = struct.pack(f"<{len(flat)}h", *flat)
    path.write_bytes(pack_wav(1, channels, rate, 16, payload))
    return path


def write_sine_wav(path, seconds=0.2, freq=440.0, rate=8000, amp=0.8):
    t = np.arange(int(seconds * rate)) / rate
    ints = np.round(amp * 32767 * np.sin(2 * np.pi * freq * t)).astype(np.int64)
    return write_pcm16(path, ints, rate=rate)


@pytest.fixture
def wav_dir(tmp_path):
    return tmp_path
