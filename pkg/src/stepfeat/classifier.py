"""Two-class feature classifier: a tiny fixed-architecture MLP trained by
full-batch gradient descent, evaluated with a shuffle/half-split bootstrap.

The network has two hidden layers of 5 rectifier units and one sigmoid
output unit. Training minimizes binary cross-entropy; everything that draws
randomness (weight init, row shuffles) is seeded, so identical seeds give
bit-identical results.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

import numpy as np

#: fixed hidden layer widths
HIDDEN_SIZES = (5, 5)


class TrainingDivergedError(RuntimeError):
    """Training produced a non-finite loss or non-finite parameters."""


@dataclass(frozen=True)
class FeatureMatrix:
    """All feature rows of one class."""

    rows: np.ndarray
    label: str

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=np.float64)
        if rows.ndim != 2 or rows.shape[0] < 2:
            raise ValueError("need a 2-D matrix with at least 2 rows")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)


@dataclass(frozen=True)
class MlpModel:
    """Weights and biases of the [d, 5, 5, 1] network."""

    weights: tuple
    biases: tuple

    def __post_init__(self):
        for w, b in zip(self.weights, self.biases):
            if not (np.isfinite(w).all() and np.isfinite(b).all()):
                raise ValueError("parameters must be finite")

    @property
    def layer_sizes(self):
        return (self.weights[0].shape[1],) + tuple(w.shape[0] for w in self.weights)


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.05
    epochs: int = 500
    init_scale: float = 0.5
    seed: int = 0


@dataclass(frozen=True)
class IterationResult:
    """Correct/held-out counts of one bootstrap iteration."""

    correct1: int
    correct2: int
    total1: int
    total2: int

    def __post_init__(self):
        if not (0 <= self.correct1 <= self.total1 and 0 <= self.correct2 <= self.total2):
            raise ValueError("correct counts must lie in [0, held-out total]")


@dataclass(frozen=True)
class BootstrapReport:
    iterations: tuple

    def mean_accuracy(self) -> float:
        correct = sum(it.correct1 + it.correct2 for it in self.iterations)
        total = sum(it.total1 + it.total2 for it in self.iterations)
        return correct / total


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _softplus(z):
    return np.log1p(np.exp(-np.abs(z))) + np.maximum(z, 0.0)


def _forward_batch(m: MlpModel, x: np.ndarray) -> np.ndarray:
    w1, w2, w3 = m.weights
    b1, b2, b3 = m.biases
    a1 = np.maximum(x @ w1.T + b1, 0.0)
    a2 = np.maximum(a1 @ w2.T + b2, 0.0)
    return _sigmoid(a2 @ w3.T + b3)[:, 0]


def mlp_forward(m: MlpModel, x) -> float:
    """Network output in (0, 1) for one feature vector."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (m.weights[0].shape[1],):
        raise ValueError(f"expected a vector of length {m.weights[0].shape[1]}")
    return float(_forward_batch(m, x[None, :])[0])


def loss_and_gradients(m: MlpModel, x: np.ndarray, y: np.ndarray):
    """Mean binary cross-entropy and its gradients for a batch.

    Returns (loss, weight_grads, bias_grads) with grads ordered like the
    model's layers. The loss is evaluated from the pre-sigmoid activation,
    which is exact for saturated outputs where the naive form overflows.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w1, w2, w3 = m.weights
    b1, b2, b3 = m.biases
    n = x.shape[0]

    z1 = x @ w1.T + b1
    a1 = np.maximum(z1, 0.0)
    z2 = a1 @ w2.T + b2
    a2 = np.maximum(z2, 0.0)
    z3 = a2 @ w3.T + b3
    p = _sigmoid(z3)
    loss = float(np.mean(_softplus(z3) - y[:, None] * z3))

    dz3 = (p - y[:, None]) / n
    dw3 = dz3.T @ a2
    db3 = dz3.sum(axis=0)
    dz2 = (dz3 @ w3) * (z2 > 0)
    dw2 = dz2.T @ a1
    db2 = dz2.sum(axis=0)
    dz1 = (dz2 @ w2) * (z1 > 0)
    dw1 = dz1.T @ x
    db1 = dz1.sum(axis=0)
    return loss, (dw1, dw2, dw3), (db1, db2, db3)


def init_model(n_features: int, init_scale: float, seed: int) -> MlpModel:
    """Fresh model with all parameters uniform on [-init_scale, init_scale]."""
    rng = np.random.default_rng(seed)
    sizes = (n_features,) + HIDDEN_SIZES + (1,)
    weights, biases = [], []
    for fan_in, fan_out in zip(sizes, sizes[1:]):
        weights.append(rng.uniform(-init_scale, init_scale, (fan_out, fan_in)))
        biases.append(rng.uniform(-init_scale, init_scale, fan_out))
    return MlpModel(weights=tuple(weights), biases=tuple(biases))


def mlp_train(features, labels, config: TrainConfig = TrainConfig()) -> MlpModel:
    """Train on labeled feature rows (labels 0/1) by full-batch descent."""
    x = np.asarray(features, dtype=np.float64)
    y = np.asarray(labels, dtype=np.float64)
    if x.ndim != 2 or y.shape != (x.shape[0],):
        raise ValueError("features must be (n, d) with one label per row")
    if not (np.any(y == 0) and np.any(y == 1)):
        raise ValueError("training set must contain both classes")

    model = init_model(x.shape[1], config.init_scale, config.seed)
    weights = [w.copy() for w in model.weights]
    biases = [b.copy() for b in model.biases]
    lr = config.learning_rate
    for _ in range(config.epochs):
        current = MlpModel(weights=tuple(weights), biases=tuple(biases))
        loss, wgrads, bgrads = loss_and_gradients(current, x, y)
        if not np.isfinite(loss):
            raise TrainingDivergedError(f"non-finite loss {loss}")
        for w, g in zip(weights, wgrads):
            w -= lr * g
        for b, g in zip(biases, bgrads):
            b -= lr * g
    for arrays in (weights, biases):
        if not all(np.isfinite(a).all() for a in arrays):
            raise TrainingDivergedError("non-finite parameters after training")
    return MlpModel(weights=tuple(weights), biases=tuple(biases))


def bootstrap_evaluate(m1: FeatureMatrix, m2: FeatureMatrix, num_tests: int,
                       seed: int, train: TrainConfig = TrainConfig()) -> BootstrapReport:
    """Repeated shuffle / half-split / train / held-out scoring.

    Per iteration each class's rows are shuffled independently; the first
    floor(rows/2) of each go to training and the rest are classified with
    threshold 0.5 on the network output (class 1 maps to target 0, class 2
    to target 1). Reports correct counts per class per iteration.
    """
    if num_tests < 1:
        raise ValueError("num_tests must be >= 1")
    if m1.rows.shape[1] != m2.rows.shape[1]:
        raise ValueError("feature matrices must share a row length")
    r1, r2 = m1.rows.shape[0], m2.rows.shape[0]
    h1, h2 = r1 // 2, r2 // 2
    rng = np.random.default_rng(seed)
    iterations = []
    for _ in range(num_tests):
        sh1 = m1.rows[rng.permutation(r1)]
        sh2 = m2.rows[rng.permutation(r2)]
        x = np.vstack([sh1[:h1], sh2[:h2]])
        y = np.concatenate([np.zeros(h1), np.ones(h2)])
        cfg = replace(train, seed=int(rng.integers(2 ** 31)))
        model = mlp_train(x, y, cfg)
        out1 = _forward_batch(model, sh1[h1:])
        out2 = _forward_batch(model, sh2[h2:])
        iterations.append(IterationResult(
            correct1=int((out1 < 0.5).sum()), correct2=int((out2 >= 0.5).sum()),
            total1=r1 - h1, total2=r2 - h2))
    return BootstrapReport(iterations=tuple(iterations))


def save_model(m: MlpModel, path) -> None:
    """Write the model as JSON: layer sizes plus row-major parameter lists."""
    doc = {
        "layer_sizes": list(m.layer_sizes),
        "layers": [
            {"weights": w.tolist(), "bias": b.tolist()}
            for w, b in zip(m.weights, m.biases)
        ],
    }
    with open(path, "w", encoding="ascii") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_model(path) -> MlpModel:
    with open(path, "r", encoding="ascii") as fh:
        doc = json.load(fh)
    weights = tuple(np.array(layer["weights"], dtype=np.float64)
                    for layer in doc["layers"])
    biases = tuple(np.array(layer["bias"], dtype=np.float64)
                   for layer in doc["layers"])
    return MlpModel(weights=weights, biases=biases)
