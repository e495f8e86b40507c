"""Command-line interface: quantize audio, dump figure-ready CSV tables, and
run two-class bootstrap experiments.

Subcommands: approx, hist, freq, runs, avgvec, experiment. Data goes to
stdout (or --out); diagnostics and the experiment summary table go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from .classifier import FeatureMatrix, TrainingDivergedError, bootstrap_evaluate
from .distribution import HISTOGRAM_BINS, constant_runs, vector_frequencies, histogram
from .features import average_vector
from .quantizer import (PerfectApproximation, SearchConfig, get_appr,
                        approximate, snr, split_signal)
from .signal_io import Signal, WavError, gen_correlated, gen_white_noise, load_wav

_DEFAULT_N = 132300  # 3 s at 44.1 kHz


class CliError(Exception):
    pass


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="stepfeat",
        description="Five-level step quantization and window-code analytics "
                    "for audio signals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default=None,
                       help="WAV file (omit when using --gen)")
        p.add_argument("--gen", choices=("white", "correlated"),
                       help="generate the input instead of reading a file")
        p.add_argument("--n", type=int, default=_DEFAULT_N,
                       help="white-noise sample count for --gen")
        p.add_argument("--smoothing", type=int, default=50,
                       help="moving-average window for --gen correlated")
        p.add_argument("--seed", type=int, default=0)

    def add_search(p):
        p.add_argument("--start", type=float, default=None,
                       help="first threshold candidate (unit-deviation scale)")
        p.add_argument("--step", type=float, default=None,
                       help="threshold grid step (unit-deviation scale)")

    def add_out(p):
        p.add_argument("--out", type=Path, default=None,
                       help="write data here instead of stdout")

    p = sub.add_parser("approx", help="step approximation CSV + threshold report")
    add_input(p), add_search(p), add_out(p)

    for name, desc in (("hist", "30-bin window-code histogram CSV"),
                       ("freq", "per-code relative frequency CSV"),
                       ("avgvec", "average-vector feature CSV")):
        p = sub.add_parser(name, help=desc)
        add_input(p), add_search(p), add_out(p)
        p.add_argument("--lw", type=int, default=7, help="window length")
        if name == "hist":
            p.add_argument("--bins", type=int, default=HISTOGRAM_BINS,
                           help="bin count (fixed)")

    p = sub.add_parser("runs", help="sorted constant-run lengths CSV")
    add_input(p), add_search(p), add_out(p)
    p.add_argument("--level", type=int, default=1, choices=(-2, -1, 0, 1, 2))

    p = sub.add_parser("experiment", help="two-class bootstrap experiment")
    p.add_argument("class1", help="directory of WAV files or gen:... spec")
    p.add_argument("class2", help="directory of WAV files or gen:... spec")
    add_search(p), add_out(p)
    p.add_argument("--lw", type=int, default=7)
    p.add_argument("--tests", type=int, default=5, help="bootstrap iterations")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _search_config(args) -> SearchConfig | None:
    if (args.start is None) != (args.step is None):
        raise CliError("give both --start and --step, or neither")
    if args.start is None:
        return None
    return SearchConfig(start_thresh=args.start, step=args.step)


def _resolve_signal(args) -> Signal:
    if args.gen is not None:
        if args.input is not None:
            raise CliError("give an input file or --gen, not both")
        if args.gen == "white":
            return gen_white_noise(args.n, args.seed)
        return gen_correlated(args.n, args.smoothing, args.seed)
    if args.input is None:
        raise CliError("missing input file (or use --gen)")
    return load_wav(args.input)


def _write_csv(out: Path | None, header, rows):
    def dump(fh):
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)

    if out is None:
        dump(sys.stdout)
    else:
        with open(out, "w", newline="") as fh:
            dump(fh)


def _half_snr(half, thresh) -> str:
    try:
        return f"{snr(half, get_appr(half, thresh)):.6f}"
    except PerfectApproximation:
        return "inf"


def _cmd_approx(args):
    signal = _resolve_signal(args)
    step, tset = approximate(signal, _search_config(args))
    pos, neg = split_signal(signal.samples)
    print(f"th0={tset.th0!r} th1={tset.th1!r} th2={tset.th2!r} th3={tset.th3!r}",
          file=sys.stderr)
    print(f"snr_pos_db={_half_snr(pos, tset.th2)} "
          f"snr_neg_db={_half_snr(-neg, -tset.th1)}", file=sys.stderr)
    rows = ((i, str(float(s)), int(l)) for i, (s, l)
            in enumerate(zip(signal.samples, step.levels)))
    _write_csv(args.out, ("index", "source_sample", "level"), rows)


def _quantize(args):
    signal = _resolve_signal(args)
    step, _ = approximate(signal, _search_config(args))
    return step


def _cmd_hist(args):
    if args.bins != HISTOGRAM_BINS:
        raise CliError(f"bin count is fixed at {HISTOGRAM_BINS}")
    h = histogram(_quantize(args), args.lw)
    centers = (h.bin_edges[:-1] + h.bin_edges[1:]) / 2.0
    rows = ((str(float(c)), str(float(v))) for c, v in zip(centers, h.bin_values))
    _write_csv(args.out, ("bin_center", "bin_value"), rows)


def _cmd_freq(args):
    d = vector_frequencies(_quantize(args), args.lw)
    rows = ((code, str(float(d.frequencies[code])))
            for code in sorted(d.frequencies))
    _write_csv(args.out, ("code", "frequency"), rows)


def _cmd_runs(args):
    report = constant_runs(_quantize(args), args.level)
    rows = ((rank, int(length))
            for rank, length in enumerate(report.lengths, start=1))
    _write_csv(args.out, ("rank", "length"), rows)


def _cmd_avgvec(args):
    av = average_vector(vector_frequencies(_quantize(args), args.lw))
    rows = ((k, str(float(v))) for k, v in enumerate(av.components))
    _write_csv(args.out, ("component", "value"), rows)


def _parse_gen_spec(spec: str):
    fields = spec[len("gen:"):].split(",")
    kind = fields[0]
    if kind not in ("white", "correlated"):
        raise CliError(f"unknown generator {kind!r} in {spec!r}")
    params = {"n": _DEFAULT_N, "smoothing": 50, "seed": 0}
    count = None
    for item in fields[1:]:
        key, _, value = item.partition("=")
        if key == "count":
            count = int(value)
        elif key in params:
            params[key] = int(value)
        else:
            raise CliError(f"unknown generator parameter {key!r} in {spec!r}")
    if count is None or count < 2:
        raise CliError(f"generator spec needs count>=2: {spec!r}")
    return kind, count, params


def _class_signals(spec: str):
    """A class is a directory of .wav files or a gen:kind,count=...,... spec."""
    path = Path(spec)
    if path.is_dir():
        wavs = sorted(path.glob("*.wav"))
        if len(wavs) < 2:
            raise CliError(f"{spec}: need at least 2 .wav files")
        return path.name, [(str(w), None) for w in wavs]
    if spec.startswith("gen:"):
        kind, count, params = _parse_gen_spec(spec)
        sources = []
        for i in range(count):
            seed = params["seed"] + i
            if kind == "white":
                sig = gen_white_noise(params["n"], seed)
            else:
                sig = gen_correlated(params["n"], params["smoothing"], seed)
            sources.append((f"{kind}[{i}]", sig))
        return kind, sources
    raise CliError(f"{spec}: not a directory and not a gen: spec")


def _class_features(sources, lw, cfg) -> np.ndarray:
    rows = []
    for name, sig in sources:
        try:
            if sig is None:
                sig = load_wav(name)
            step, _ = approximate(sig, cfg)
            rows.append(average_vector(vector_frequencies(step, lw)).components)
        except (WavError, ValueError, OSError) as exc:
            raise CliError(f"{name}: {exc}") from exc
    return np.vstack(rows)


def _cmd_experiment(args):
    cfg = _search_config(args)
    label1, sources1 = _class_signals(args.class1)
    label2, sources2 = _class_signals(args.class2)
    if label2 == label1:
        label1, label2 = label1 + "-1", label2 + "-2"
    m1 = FeatureMatrix(_class_features(sources1, args.lw, cfg), label1)
    m2 = FeatureMatrix(_class_features(sources2, args.lw, cfg), label2)
    report = bootstrap_evaluate(m1, m2, args.tests, args.seed)

    t1, t2 = report.iterations[0].total1, report.iterations[0].total2
    print(f"correct recognized {label1} and {label2}", file=sys.stderr)
    print(f"{label1}, total {t1}\t{label2}, total {t2}", file=sys.stderr)
    for it in report.iterations:
        print(f"{it.correct1}\t{it.correct2}", file=sys.stderr)

    doc = {
        "config": {
            "class1": label1, "class2": label2, "lw": args.lw,
            "tests": args.tests, "seed": args.seed,
            "start": args.start, "step": args.step,
        },
        "iterations": [
            {"correct1": it.correct1, "correct2": it.correct2,
             "total1": it.total1, "total2": it.total2}
            for it in report.iterations
        ],
    }
    text = json.dumps(doc, indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)


_COMMANDS = {
    "approx": _cmd_approx,
    "hist": _cmd_hist,
    "freq": _cmd_freq,
    "runs": _cmd_runs,
    "avgvec": _cmd_avgvec,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (CliError, WavError, ValueError, OSError, TrainingDivergedError) as exc:
        print(f"stepfeat: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
