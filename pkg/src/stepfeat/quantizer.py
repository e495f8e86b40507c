"""Five-level step approximation of a signal with a suboptimal threshold search.

A signal is split into its non-negative and non-positive parts; each part is
reduced to levels {0, 1, 2} by a two-threshold rule whose inner threshold is
found by a one-dimensional grid scan maximizing an SNR score, and whose outer
threshold is tied to twice the inner one. Recombining the parts yields levels
in {-2, -1, 0, 1, 2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .signal_io import Signal

#: the five-level alphabet produced by the quantizer
DSET = (-2, -1, 0, 1, 2)

# residual variance below this fraction of the reference variance counts as
# an exact reconstruction (guards against float dust in scaled-equal arrays)
_PERFECT_REL_VAR = 1e-20


class PerfectApproximation(Exception):
    """The approximation equals the reference after unit-deviation scaling.

    The SNR ratio is infinite in this case, so it is reported as a distinct
    outcome instead of a number.
    """


class ZeroDeviationError(ValueError):
    """An input has zero standard deviation and cannot be normalized."""


class SearchRangeError(ValueError):
    """The threshold grid contained no scorable candidate."""


class OneSidedSignalError(ValueError):
    """Signal lacks strictly positive or strictly negative samples."""


@dataclass(frozen=True)
class ThresholdSet:
    """Four increasing amplitude thresholds with th1 < 0 < th2."""

    th0: float
    th1: float
    th2: float
    th3: float

    def __post_init__(self):
        for name in ("th0", "th1", "th2", "th3"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not (self.th0 < self.th1 < self.th2 < self.th3):
            raise ValueError("thresholds must satisfy th0 < th1 < th2 < th3")
        if not (self.th1 < 0.0 < self.th2):
            raise ValueError("need th1 < 0 and th2 > 0")


@dataclass(frozen=True)
class StepSignal:
    """Integer level sequence over {-2, -1, 0, 1, 2}."""

    levels: np.ndarray

    def __post_init__(self):
        levels = np.asarray(self.levels)
        if levels.ndim != 1 or levels.size == 0:
            raise ValueError("levels must be a non-empty 1-D sequence")
        if not np.isin(levels, DSET).all():
            raise ValueError("levels must lie in {-2, -1, 0, 1, 2}")
        levels = levels.astype(np.int64)
        levels.setflags(write=False)
        object.__setattr__(self, "levels", levels)

    def __len__(self):
        return self.levels.size


@dataclass(frozen=True)
class SearchConfig:
    """Grid parameters for the threshold scan, on the unit-deviation scale."""

    start_thresh: float
    step: float

    def __post_init__(self):
        if self.start_thresh <= 0 or self.step <= 0:
            raise ValueError("start_thresh and step must be positive")


def quantize_sample(a: float, t: ThresholdSet) -> int:
    """Map one amplitude to a level; lower band bounds are closed."""
    if a >= t.th3:
        return 2
    if a >= t.th2:
        return 1
    if a >= t.th1:
        return 0
    if a >= t.th0:
        return -1
    return -2


def snr(reference, approx) -> float:
    """SNR in dB between two sequences brought to equal standard deviation.

    Both inputs are divided by their own standard deviation (no recentering)
    and the result is 10*log10(var(ref) / var(ref - approx)) on the scaled
    arrays. Raises ZeroDeviationError if either input is constant and
    PerfectApproximation when the scaled arrays coincide.
    """
    ref = np.asarray(reference, dtype=np.float64)
    app = np.asarray(approx, dtype=np.float64)
    if ref.shape != app.shape:
        raise ValueError("reference and approximation lengths differ")
    ref_sd = ref.std()
    if ref_sd == 0.0:
        raise ZeroDeviationError("reference has zero standard deviation")
    app_sd = app.std()
    if app_sd == 0.0:
        raise ZeroDeviationError("approximation has zero standard deviation")
    ref_n = ref / ref_sd
    app_n = app / app_sd
    ref_var = ref_n.var()
    res_var = (ref_n - app_n).var()
    if res_var <= _PERFECT_REL_VAR * ref_var:
        raise PerfectApproximation("approximation matches reference exactly")
    return 10.0 * math.log10(ref_var / res_var)


def get_appr(input, thresh: float) -> np.ndarray:
    """Three-level reduction of a non-negative sequence.

    Elements >= 2*thresh map to 2, elements < thresh map to 0, the rest to 1.
    """
    x = np.asarray(input, dtype=np.float64)
    if thresh <= 0:
        raise ValueError("thresh must be positive")
    if (x < 0).any():
        raise ValueError("input elements must be non-negative")
    out = np.ones(x.size, dtype=np.int64)
    out[x >= 2.0 * thresh] = 2
    out[x < thresh] = 0
    return out


def get_opt_thresh(input, cfg: SearchConfig | None = None) -> float:
    """Grid-scan the inner threshold of get_appr for maximal SNR.

    The input is divided by its standard deviation; candidate thresholds run
    from the configured start in configured steps while below the scaled
    maximum. Each candidate's three-level reduction is scored against the
    scaled input and the first threshold achieving the best score wins. An
    exact reconstruction scores above every finite SNR. Candidates whose
    reduction is constant cannot be scored and are skipped.

    Without a config the grid defaults to start = 0.05 * max and
    step = 0.01 * max of the scaled input. The returned threshold is on the
    scaled (unit deviation) scale.
    """
    x = np.asarray(input, dtype=np.float64)
    if x.size == 0:
        raise ValueError("empty input")
    if (x < 0).any():
        raise ValueError("input elements must be non-negative")
    sd = x.std()
    if sd == 0.0:
        raise ZeroDeviationError("constant input")
    xn = x / sd
    mx = xn.max()
    if cfg is None:
        start, step = 0.05 * mx, 0.01 * mx
    else:
        start, step = cfg.start_thresh, cfg.step

    # the reference side of the score never changes across candidates
    ref_n = xn / xn.std()
    ref_var = ref_n.var()

    best_val = -math.inf
    best_thresh = None
    k = 0
    while True:
        thresh = start + k * step
        if thresh >= mx:
            break
        k += 1
        # same values get_appr produces, built as floats for scoring
        levels = np.ones(xn.size)
        levels[xn >= 2.0 * thresh] = 2.0
        levels[xn < thresh] = 0.0
        lev_sd = levels.std()
        if lev_sd == 0.0:
            continue
        res_var = (ref_n - levels / lev_sd).var()
        if res_var <= _PERFECT_REL_VAR * ref_var:
            val = math.inf
        else:
            val = 10.0 * math.log10(ref_var / res_var)
        if val > best_val:
            best_val, best_thresh = val, thresh
    if best_thresh is None:
        raise SearchRangeError("no scorable threshold candidate in range")
    return best_thresh


def split_signal(samples: np.ndarray):
    """Split into the non-negative and non-positive parts (zeros in both)."""
    samples = np.asarray(samples, dtype=np.float64)
    pos = np.where(samples > 0, samples, 0.0)
    neg = np.where(samples < 0, samples, 0.0)
    return pos, neg


def approximate(signal: Signal, cfg: SearchConfig | None = None):
    """Five-level step approximation of a signal.

    Each sign half gets its own threshold scan; the scan's unit-scale result
    is mapped back to raw amplitude by the half's standard deviation, the
    outer thresholds are fixed at twice the inner ones, and the halves'
    three-level reductions are combined by subtraction.

    Returns (StepSignal, ThresholdSet); the thresholds are in raw amplitude
    units and reproduce the levels sample by sample.
    """
    pos, neg = split_signal(signal.samples)
    if not (pos > 0).any() or not (neg < 0).any():
        raise OneSidedSignalError(
            "signal needs at least one positive and one negative sample")
    neg_mag = -neg
    th2 = get_opt_thresh(pos, cfg) * pos.std()
    th1 = -(get_opt_thresh(neg_mag, cfg) * neg_mag.std())
    levels = get_appr(pos, th2) - get_appr(neg_mag, -th1)
    tset = ThresholdSet(th0=2.0 * th1, th1=th1, th2=th2, th3=2.0 * th2)
    return StepSignal(levels), tset
