"""Closed-form ridge regression.

Solves (X'X + lambda*I) beta = X'y on column-centered data with a
symmetric positive-definite (Cholesky) factorization. The intercept is
recovered from the column means and never penalized. Predictions are raw
scores, deliberately not clamped to [0, 1]: ranking needs ordering, and
clamping would hide model error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .errors import NumericError
from .features import DesignMatrix, Standardization


@dataclass(frozen=True)
class RidgeModel:
    beta: np.ndarray
    intercept: float
    lam: float
    poly_order: int
    standardization: Standardization | None = None

    def __post_init__(self):
        if not np.all(np.isfinite(self.beta)) or not np.isfinite(self.intercept):
            raise ValueError("ridge coefficients must be finite")

    @property
    def width(self) -> int:
        return self.beta.shape[0]

    def predict_rows(self, rows: np.ndarray) -> np.ndarray:
        rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
        if rows.shape[1] != self.width:
            raise ValueError(
                f"feature width {rows.shape[1]} does not match model width "
                f"{self.width}"
            )
        return rows @ self.beta + self.intercept

    def predict(self, features: np.ndarray) -> float:
        return float(self.predict_rows(features)[0])

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "poly_order": self.poly_order,
            "intercept": self.intercept,
            "beta": self.beta.tolist(),
            "standardization": (
                self.standardization.to_dict() if self.standardization else None
            ),
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "RidgeModel":
        stz = payload.get("standardization")
        return cls(
            beta=np.asarray(payload["beta"], dtype=np.float64),
            intercept=float(payload["intercept"]),
            lam=float(payload["lambda"]),
            poly_order=int(payload["poly_order"]),
            standardization=Standardization.from_dict(stz) if stz else None,
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "RidgeModel":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def fit_ridge(
    matrix: DesignMatrix, lam: float, fit_intercept: bool = True
) -> RidgeModel:
    """Fit ridge coefficients for the given penalty.

    With fit_intercept the data is column-centered and the intercept is the
    target mean mapped back to raw coordinates; without it the normal
    equations are solved on the raw matrix and the intercept is 0.
    """
    if lam < 0:
        raise ValueError(f"ridge penalty must be >= 0, got {lam}")
    X = np.asarray(matrix.rows, dtype=np.float64)
    y = np.asarray(matrix.targets, dtype=np.float64)
    if X.shape[0] < 1:
        raise ValueError("cannot fit ridge on an empty matrix")
    if fit_intercept:
        x_mean = X.mean(axis=0)
        y_mean = float(y.mean())
        Xc = X - x_mean
        yc = y - y_mean
    else:
        x_mean = np.zeros(X.shape[1])
        y_mean = 0.0
        Xc, yc = X, y
    gram = Xc.T @ Xc + lam * np.eye(X.shape[1])
    rhs = Xc.T @ yc
    try:
        factor = cho_factor(gram)
        beta = cho_solve(factor, rhs)
    except LinAlgError as exc:
        raise NumericError(
            "ridge normal equations are singular (rank-deficient X at "
            f"lambda={lam}); refit with lambda > 0"
        ) from exc
    if not np.all(np.isfinite(beta)):
        raise NumericError(
            f"ridge solve produced non-finite coefficients at lambda={lam}; "
            "refit with lambda > 0"
        )
    intercept = y_mean - float(beta @ x_mean)
    return RidgeModel(
        beta=beta,
        intercept=intercept,
        lam=lam,
        poly_order=matrix.poly_order,
        standardization=matrix.standardization,
    )


def ridge_objective(
    X: np.ndarray, y: np.ndarray, beta: np.ndarray, lam: float
) -> float:
    """||y - X beta||^2 + lambda ||beta||^2 (no intercept term)."""
    residual = y - X @ beta
    return float(residual @ residual + lam * beta @ beta)
