"""The average-vector feature of a window-code distribution.

Because code distributions of real signals are close to symmetric under
negation, the negative half is nearly redundant; the feature is the
frequency-weighted sum of the decoded windows with strictly positive codes,
using the frequencies as-is (no renormalization over the positive subset).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distribution import VectorDistribution
from .vector_codec import decode_array


@dataclass(frozen=True)
class AverageVector:
    """Component-wise weighted average of positive-code windows."""

    components: np.ndarray
    lw: int

    def __post_init__(self):
        comps = np.asarray(self.components, dtype=np.float64)
        if comps.size != self.lw:
            raise ValueError("component count must equal lw")
        if (np.abs(comps) > 2.0).any():
            raise ValueError("components must lie in [-2, 2]")
        comps.setflags(write=False)
        object.__setattr__(self, "components", comps)


def average_vector(d: VectorDistribution) -> AverageVector:
    """Frequency-weighted sum of decoded windows over codes > 0."""
    positive = sorted(c for c in d.frequencies if c > 0)
    if not positive:
        raise ValueError("distribution has no positive codes")
    weights = np.array([d.frequencies[c] for c in positive])
    digits = decode_array(positive, d.lw)
    return AverageVector(components=weights @ digits, lw=d.lw)
