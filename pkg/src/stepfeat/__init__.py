"""Local-feature analysis of audio signals via five-level step approximation,
balanced base-5 window codes, code-distribution statistics, and a small
bootstrap-evaluated two-class classifier."""

from .signal_io import (EmptyDataError, NotWavError, Signal,
                        UnsupportedEncodingError, WavError, gen_correlated,
                        gen_white_noise, load_wav)
from .quantizer import (DSET, OneSidedSignalError, PerfectApproximation,
                        SearchConfig, SearchRangeError, StepSignal,
                        ThresholdSet, ZeroDeviationError, approximate,
                        get_appr, get_opt_thresh, quantize_sample,
                        split_signal, snr)
from .vector_codec import (code_bound, decode, decode_array, encode,
                           encode_windows, windows)
from .distribution import (HISTOGRAM_BINS, CodeHistogram, RunReport,
                           VectorDistribution, constant_runs,
                           constant_window_counts, histogram,
                           symmetry_defect, vector_frequencies)
from .features import AverageVector, average_vector
from .classifier import (BootstrapReport, FeatureMatrix, IterationResult,
                         MlpModel, TrainConfig, TrainingDivergedError,
                         bootstrap_evaluate, init_model, load_model,
                         loss_and_gradients, mlp_forward, mlp_train,
                         save_model)

__all__ = [
    "Signal", "WavError", "NotWavError", "UnsupportedEncodingError",
    "EmptyDataError", "load_wav", "gen_white_noise", "gen_correlated",
    "DSET", "ThresholdSet", "StepSignal", "SearchConfig", "quantize_sample",
    "snr", "get_appr", "get_opt_thresh", "approximate", "split_signal",
    "PerfectApproximation", "ZeroDeviationError", "SearchRangeError",
    "OneSidedSignalError",
    "code_bound", "encode", "decode", "decode_array", "windows",
    "encode_windows",
    "HISTOGRAM_BINS", "CodeHistogram", "VectorDistribution", "RunReport",
    "histogram", "vector_frequencies", "symmetry_defect", "constant_runs",
    "constant_window_counts",
    "AverageVector", "average_vector",
    "FeatureMatrix", "MlpModel", "TrainConfig", "IterationResult",
    "BootstrapReport", "TrainingDivergedError", "mlp_forward", "mlp_train",
    "bootstrap_evaluate", "init_model", "loss_and_gradients", "save_model",
    "load_model",
]

__version__ = "0.1.0"
