"""Distribution analytics over window codes: histogram, per-code frequencies,
symmetry of the code distribution, and constant-run statistics."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .quantizer import DSET, StepSignal
from .vector_codec import code_bound, encode_windows

#: fixed bin count of the code histogram
HISTOGRAM_BINS = 30

_MASS_TOL = 1e-9


@dataclass(frozen=True)
class CodeHistogram:
    """Relative-frequency histogram of window codes over the full code range."""

    bin_edges: np.ndarray
    bin_values: np.ndarray

    def __post_init__(self):
        edges = np.asarray(self.bin_edges, dtype=np.float64)
        values = np.asarray(self.bin_values, dtype=np.float64)
        if edges.size != HISTOGRAM_BINS + 1 or values.size != HISTOGRAM_BINS:
            raise ValueError(f"expected {HISTOGRAM_BINS} bins")
        if (np.diff(edges) <= 0).any():
            raise ValueError("bin edges must be ascending")
        if (values < 0).any() or abs(values.sum() - 1.0) > _MASS_TOL:
            raise ValueError("bin values must be non-negative with unit mass")
        edges.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "bin_edges", edges)
        object.__setattr__(self, "bin_values", values)


@dataclass(frozen=True)
class VectorDistribution:
    """Relative frequency of each window code seen in a step signal."""

    frequencies: dict[int, float]
    total_windows: int
    lw: int

    def __post_init__(self):
        if self.total_windows < 1:
            raise ValueError("total_windows must be >= 1")
        bound = code_bound(self.lw)
        for code in self.frequencies:
            if not -bound <= code <= bound:
                raise ValueError(f"code {code} outside range for lw={self.lw}")
        if abs(sum(self.frequencies.values()) - 1.0) > _MASS_TOL:
            raise ValueError("frequencies must sum to 1")

    @classmethod
    def from_counts(cls, counts: dict[int, int], lw: int):
        total = sum(counts.values())
        if total < 1:
            raise ValueError("counts must be positive")
        freqs = {int(c): n / total for c, n in counts.items() if n}
        return cls(frequencies=freqs, total_windows=total, lw=lw)


@dataclass(frozen=True)
class RunReport:
    """Lengths of maximal constant runs of one level, longest first."""

    level: int
    lengths: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))

    def __post_init__(self):
        if self.level not in DSET:
            raise ValueError("level must lie in {-2, -1, 0, 1, 2}")
        lengths = np.asarray(self.lengths, dtype=np.int64)
        if lengths.size and ((lengths <= 0).any() or (np.diff(lengths) > 0).any()):
            raise ValueError("lengths must be positive and non-increasing")
        lengths.setflags(write=False)
        object.__setattr__(self, "lengths", lengths)


def histogram(s: StepSignal, lw: int) -> CodeHistogram:
    """30-bin relative-frequency histogram of all window codes.

    Bins span the full theoretical code interval for the window length, not
    the observed range, so histograms of different signals are directly
    comparable. Interior bin edges are half-open on the right; the top edge
    is closed.
    """
    codes = encode_windows(s, lw)
    bound = code_bound(lw)
    counts, edges = np.histogram(codes, bins=HISTOGRAM_BINS,
                                 range=(-bound, bound))
    return CodeHistogram(bin_edges=edges, bin_values=counts / codes.size)


def vector_frequencies(s: StepSignal, lw: int) -> VectorDistribution:
    """Exact relative frequency of every window code present in the signal."""
    codes = encode_windows(s, lw)
    values, counts = np.unique(codes, return_counts=True)
    total = codes.size
    freqs = {int(v): int(n) / total for v, n in zip(values, counts)}
    return VectorDistribution(frequencies=freqs, total_windows=total, lw=lw)


def symmetry_defect(d: VectorDistribution) -> float:
    """Total absolute frequency mismatch between each code and its negation.

    0 means the distribution is exactly symmetric under negation; the
    maximum, 2, means no code's negation ever occurs.
    """
    freqs = d.frequencies
    codes = set(freqs) | {-c for c in freqs}
    return float(sum(abs(freqs.get(c, 0.0) - freqs.get(-c, 0.0)) for c in codes))


def constant_runs(s: StepSignal, level: int) -> RunReport:
    """Maximal runs of one level, lengths sorted in decreasing order."""
    if level not in DSET:
        raise ValueError("level must lie in {-2, -1, 0, 1, 2}")
    mask = np.concatenate(([False], s.levels == level, [False]))
    edges = np.flatnonzero(np.diff(mask.astype(np.int8)))
    starts, ends = edges[::2], edges[1::2]
    lengths = np.sort(ends - starts)[::-1]
    return RunReport(level=level, lengths=lengths)


def constant_window_counts(d: VectorDistribution) -> dict[int, int]:
    """Count of constant windows per level, recovered from the frequencies."""
    counts = {}
    for level in DSET:
        code = level * code_bound(d.lw) // 2  # == sum(level * 5**k)
        freq = d.frequencies.get(code)
        if freq:
            counts[level] = round(freq * d.total_windows)
    return counts
