"""Feedforward MLP regressor trained by backpropagation.

Hidden layers use logistic or tanh activations; the single output node is
linear. Loss is squared error (1/2)(t - y)^2 per sample; epoch traces
report plain mean squared error. Three optimizers: minibatch SGD, Adam,
and full-batch L-BFGS (two-loop recursion with Armijo backtracking, one
outer iteration per epoch so the epochs axis means the same thing for all
three).

The output-layer delta is (t - y), the derivative for a linear output.
``output_delta="damped"`` switches to the (t - y)(1 - y) variant for
comparison runs; it is not used anywhere by default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import NumericError
from .features import DesignMatrix

ACTIVATIONS = ("logistic", "tanh")
OPTIMIZERS = ("sgd", "adam", "lbfgs")
OUTPUT_DELTAS = ("linear", "damped")

_CURVATURE_FLOOR = 1e-10


def _activate(z: np.ndarray, kind: str) -> np.ndarray:
    if kind == "logistic":
        out = np.empty_like(z)
        pos = z >= 0
        out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
        ez = np.exp(z[~pos])
        out[~pos] = ez / (1.0 + ez)
        return out
    return np.tanh(z)


def _activation_grad(output: np.ndarray, kind: str) -> np.ndarray:
    # derivative expressed through the activation output itself
    if kind == "logistic":
        return output * (1.0 - output)
    return 1.0 - output**2


@dataclass
class MlpModel:
    layer_sizes: tuple[int, ...]
    weights: list[np.ndarray]
    biases: list[np.ndarray]
    activation: str
    seed: int

    @property
    def input_width(self) -> int:
        return self.layer_sizes[0]

    def predict_rows(self, rows: np.ndarray) -> np.ndarray:
        rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
        return _forward_batch(self, rows)[-1][:, 0]

    def to_dict(self) -> dict:
        return {
            "layers": list(self.layer_sizes),
            "activation": self.activation,
            "weights": [w.tolist() for w in self.weights],
            "biases": [b.tolist() for b in self.biases],
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "MlpModel":
        return cls(
            layer_sizes=tuple(int(v) for v in payload["layers"]),
            weights=[np.asarray(w, dtype=np.float64) for w in payload["weights"]],
            biases=[np.asarray(b, dtype=np.float64) for b in payload["biases"]],
            activation=str(payload["activation"]),
            seed=int(payload["seed"]),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "MlpModel":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def init_mlp(
    layer_sizes: tuple[int, ...] | list[int],
    activation: str = "logistic",
    seed: int = 0,
) -> MlpModel:
    """Glorot-uniform weights, zero biases; deterministic per seed."""
    sizes = tuple(int(s) for s in layer_sizes)
    if len(sizes) < 2:
        raise ValueError("layer_sizes needs at least input and output widths")
    if any(s < 1 for s in sizes):
        raise ValueError(f"zero-width layer in {sizes}")
    if sizes[-1] != 1:
        raise ValueError("output layer width must be 1")
    if activation not in ACTIVATIONS:
        raise ValueError(f"unknown activation {activation!r}")
    rng = np.random.default_rng(seed)
    weights, biases = [], []
    for fan_in, fan_out in zip(sizes, sizes[1:]):
        bound = np.sqrt(6.0 / (fan_in + fan_out))
        weights.append(rng.uniform(-bound, bound, size=(fan_in, fan_out)))
        biases.append(np.zeros(fan_out))
    return MlpModel(
        layer_sizes=sizes,
        weights=weights,
        biases=biases,
        activation=activation,
        seed=seed,
    )


def _forward_batch(model: MlpModel, X: np.ndarray) -> list[np.ndarray]:
    if X.shape[1] != model.input_width:
        raise ValueError(
            f"input width {X.shape[1]} does not match model input "
            f"{model.input_width}"
        )
    activations = [X]
    out = X
    last = len(model.weights) - 1
    for layer, (w, b) in enumerate(zip(model.weights, model.biases)):
        z = out @ w + b
        out = z if layer == last else _activate(z, model.activation)
        activations.append(out)
    return activations


def forward(model: MlpModel, x: np.ndarray) -> tuple[float, list[np.ndarray]]:
    """Run one feature row through the net; returns (prediction, activations)."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("forward expects a single 1-D feature row")
    activations = _forward_batch(model, x[None, :])
    flat = [a[0] for a in activations]
    return float(flat[-1][0]), flat


def backward(
    model: MlpModel,
    x: np.ndarray,
    y_target: float,
    activations: list[np.ndarray],
    output_delta: str = "linear",
) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Gradients of (1/2)(y_target - y)^2 for every weight and bias."""
    batch = [a[None, :] for a in activations]
    grads_w, grads_b = _backward_batch(
        model, batch, np.array([y_target], dtype=np.float64), output_delta, mean=False
    )
    return grads_w, grads_b


def _backward_batch(
    model: MlpModel,
    activations: list[np.ndarray],
    targets: np.ndarray,
    output_delta: str = "linear",
    mean: bool = True,
) -> tuple[list[np.ndarray], list[np.ndarray]]:
    if output_delta not in OUTPUT_DELTAS:
        raise ValueError(f"unknown output delta kind {output_delta!r}")
    preds = activations[-1][:, 0]
    scale = 1.0 / len(targets) if mean else 1.0
    d_z = ((preds - targets) * scale)[:, None]
    if output_delta == "damped":
        d_z = d_z * (1.0 - preds)[:, None]
    grads_w: list[np.ndarray] = [None] * len(model.weights)  # type: ignore[list-item]
    grads_b: list[np.ndarray] = [None] * len(model.biases)  # type: ignore[list-item]
    for layer in range(len(model.weights) - 1, -1, -1):
        grads_w[layer] = activations[layer].T @ d_z
        grads_b[layer] = d_z.sum(axis=0)
        if layer > 0:
            d_act = d_z @ model.weights[layer].T
            d_z = d_act * _activation_grad(activations[layer], model.activation)
    return grads_w, grads_b


@dataclass(frozen=True)
class TrainConfig:
    optimizer: str = "sgd"
    epochs: int = 10
    learning_rate: float | None = None  # per-optimizer default when None
    batch_size: int = 32
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    lbfgs_memory: int = 10
    lbfgs_c1: float = 1e-4
    lbfgs_shrink: float = 0.5
    lbfgs_max_backtracks: int = 30
    seed: int = 0
    output_delta: str = "linear"

    def __post_init__(self):
        if self.optimizer not in OPTIMIZERS:
            raise ValueError(f"unknown optimizer {self.optimizer!r}")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.learning_rate is not None and self.learning_rate < 0:
            raise ValueError("learning_rate must be >= 0")
        if self.lbfgs_memory < 1:
            raise ValueError("lbfgs_memory must be >= 1")
        if self.output_delta not in OUTPUT_DELTAS:
            raise ValueError(f"unknown output delta kind {self.output_delta!r}")

    @property
    def effective_learning_rate(self) -> float:
        if self.learning_rate is not None:
            return self.learning_rate
        return {"sgd": 0.01, "adam": 0.001, "lbfgs": 1.0}[self.optimizer]


def mse(model: MlpModel, X: np.ndarray, targets: np.ndarray) -> float:
    preds = model.predict_rows(X)
    return float(np.mean((preds - targets) ** 2))


def _pack(weights: list[np.ndarray], biases: list[np.ndarray]) -> np.ndarray:
    return np.concatenate(
        [w.ravel() for w in weights] + [b.ravel() for b in biases]
    )


def _unpack_into(model: MlpModel, theta: np.ndarray) -> None:
    offset = 0
    for w in model.weights:
        w[...] = theta[offset : offset + w.size].reshape(w.shape)
        offset += w.size
    for b in model.biases:
        b[...] = theta[offset : offset + b.size].reshape(b.shape)
        offset += b.size


def _full_gradient(
    model: MlpModel, X: np.ndarray, targets: np.ndarray, output_delta: str
) -> np.ndarray:
    activations = _forward_batch(model, X)
    grads_w, grads_b = _backward_batch(model, activations, targets, output_delta)
    return _pack(grads_w, grads_b)


def _train_minibatch(
    model: MlpModel,
    X: np.ndarray,
    targets: np.ndarray,
    config: TrainConfig,
) -> list[float]:
    rng = np.random.default_rng(config.seed)
    lr = config.effective_learning_rate
    n = X.shape[0]
    adam = config.optimizer == "adam"
    if adam:
        m_w = [np.zeros_like(w) for w in model.weights]
        v_w = [np.zeros_like(w) for w in model.weights]
        m_b = [np.zeros_like(b) for b in model.biases]
        v_b = [np.zeros_like(b) for b in model.biases]
        step = 0
    losses: list[float] = []
    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(n)
        for start in range(0, n, config.batch_size):
            idx = order[start : start + config.batch_size]
            activations = _forward_batch(model, X[idx])
            grads_w, grads_b = _backward_batch(
                model, activations, targets[idx], config.output_delta
            )
            if adam:
                step += 1
                b1, b2, eps = config.adam_beta1, config.adam_beta2, config.adam_eps
                correct1 = 1.0 - b1**step
                correct2 = 1.0 - b2**step
                for params, grads, ms, vs in (
                    (model.weights, grads_w, m_w, v_w),
                    (model.biases, grads_b, m_b, v_b),
                ):
                    for p, g, m, v in zip(params, grads, ms, vs):
                        m *= b1
                        m += (1 - b1) * g
                        v *= b2
                        v += (1 - b2) * g**2
                        p -= lr * (m / correct1) / (np.sqrt(v / correct2) + eps)
            else:
                for p, g in zip(model.weights, grads_w):
                    p -= lr * g
                for p, g in zip(model.biases, grads_b):
                    p -= lr * g
        loss = mse(model, X, targets)
        if not np.isfinite(loss):
            raise NumericError(f"training diverged at epoch {epoch}")
        losses.append(loss)
    return losses


def _lbfgs_direction(
    grad: np.ndarray, pairs: list[tuple[np.ndarray, np.ndarray]]
) -> np.ndarray:
    q = grad.copy()
    alphas: list[tuple[float, float]] = []
    for s, y in reversed(pairs):
        rho = 1.0 / float(y @ s)
        alpha = rho * float(s @ q)
        q -= alpha * y
        alphas.append((alpha, rho))
    if pairs:
        s_last, y_last = pairs[-1]
        gamma = float(s_last @ y_last) / float(y_last @ y_last)
    else:
        gamma = 1.0
    r = gamma * q
    for (alpha, rho), (s, y) in zip(reversed(alphas), pairs):
        beta = rho * float(y @ r)
        r += (alpha - beta) * s
    return -r


def _train_lbfgs(
    model: MlpModel,
    X: np.ndarray,
    targets: np.ndarray,
    config: TrainConfig,
) -> list[float]:
    def objective(theta: np.ndarray) -> float:
        _unpack_into(model, theta)
        preds = model.predict_rows(X)
        return float(0.5 * np.mean((preds - targets) ** 2))

    theta = _pack(model.weights, model.biases)
    grad = _full_gradient(model, X, targets, config.output_delta)
    pairs: list[tuple[np.ndarray, np.ndarray]] = []
    losses: list[float] = []
    for epoch in range(1, config.epochs + 1):
        direction = _lbfgs_direction(grad, pairs)
        slope = float(grad @ direction)
        if slope >= 0.0:  # not a descent direction; fall back to steepest
            direction = -grad
            slope = float(grad @ direction)
        f0 = objective(theta)
        step = config.effective_learning_rate
        accepted = False
        if slope < 0.0:
            for _ in range(config.lbfgs_max_backtracks):
                candidate = theta + step * direction
                if objective(candidate) <= f0 + config.lbfgs_c1 * step * slope:
                    accepted = True
                    break
                step *= config.lbfgs_shrink
        if accepted:
            new_theta = theta + step * direction
            _unpack_into(model, new_theta)
            new_grad = _full_gradient(model, X, targets, config.output_delta)
            s = new_theta - theta
            y = new_grad - grad
            if float(s @ y) > _CURVATURE_FLOOR:
                pairs.append((s, y))
                if len(pairs) > config.lbfgs_memory:
                    pairs.pop(0)
            theta, grad = new_theta, new_grad
        else:
            _unpack_into(model, theta)
        loss = mse(model, X, targets)
        if not np.isfinite(loss):
            raise NumericError(f"training diverged at epoch {epoch}")
        losses.append(loss)
    return losses


def train(
    model: MlpModel, matrix: DesignMatrix, config: TrainConfig
) -> tuple[MlpModel, list[float]]:
    """Train in place; returns the model and the per-epoch MSE trace.

    The caller standardizes the matrix first. Runs are deterministic for a
    fixed (model, config) pair: the shuffling stream depends only on
    config.seed.
    """
    X = np.asarray(matrix.rows, dtype=np.float64)
    targets = np.asarray(matrix.targets, dtype=np.float64)
    if not np.all(np.isfinite(targets)):
        raise ValueError("training targets must be finite")
    if X.shape[1] != model.input_width:
        raise ValueError(
            f"matrix width {X.shape[1]} does not match model input "
            f"{model.input_width}"
        )
    if config.optimizer == "lbfgs":
        losses = _train_lbfgs(model, X, targets, config)
    else:
        losses = _train_minibatch(model, X, targets, config)
    return model, losses
