"""
Linear gender model and prediction

Label convention: positive margin -> Male. A margin of exactly 0 is Male.
"""
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional

import numpy as np
from scipy.special import expit

from src.dataset.models import GenderLabel, UserProfile
from src.features.featurizer import Featurizer
from src.features.fields import FeatureSet
from src.features.vectors import SparseVector
from src.features.vocabulary import VectorizerError

UNSAVED_VERSION = "unsaved"


class TrainingError(ValueError):
    """Training input is unusable"""


@dataclass(frozen=True)
class Hyperparams:
    regularization: float = 1e-4
    epochs: int = 20
    seed: int = 42

    def __post_init__(self):
        if not self.regularization > 0:
            raise TrainingError(f"regularization must be > 0, got {self.regularization}")
        if self.epochs < 1:
            raise TrainingError(f"epochs must be >= 1, got {self.epochs}")


@dataclass(frozen=True)
class Calibration:
    """p_male = logistic(a * margin + b); a > 0 keeps it monotone"""
    a: float = 1.0
    b: float = 0.0
    fitted: bool = False

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"Calibration slope must be positive, got {self.a}")

    def p_male(self, margin: float) -> float:
        return float(expit(self.a * margin + self.b))


@dataclass(frozen=True)
class Prediction:
    label: GenderLabel
    margin: float
    p_male: float

    @property
    def probability(self) -> float:
        """Confidence of the returned label (>= 0.5)"""
        return max(self.p_male, 1.0 - self.p_male)


@dataclass(frozen=True, eq=False)
class GenderModel:
    """
    Trained linear classifier

    Attributes:
        weights: One weight per feature (read-only)
        bias: Intercept
        calibration: Margin -> probability mapping
        hyperparams: Training hyperparameters
        featurizer: Vocabularies the weights are indexed by (None for
            models trained directly on vectors)
        training: Training metadata (objective, example counts, ...)
        model_version: File fingerprint, "unsaved" before save/load
    """
    weights: np.ndarray
    bias: float
    calibration: Calibration = Calibration()
    hyperparams: Hyperparams = Hyperparams()
    featurizer: Optional[Featurizer] = None
    training: Dict[str, Any] = field(default_factory=dict)
    model_version: str = UNSAVED_VERSION

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.float64)
        if weights.ndim != 1:
            raise ValueError("weights must be a 1-d array")
        if not np.all(np.isfinite(weights)) or not np.isfinite(self.bias):
            raise ValueError("Model parameters must be finite")
        if self.featurizer is not None and self.featurizer.dim != weights.size:
            raise ValueError(
                f"Model has {weights.size} weights but its vocabularies have {self.featurizer.dim} features"
            )
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "bias", float(self.bias))

    @property
    def dim(self) -> int:
        return int(self.weights.size)

    @property
    def feature_set(self) -> Optional[FeatureSet]:
        return self.featurizer.feature_set if self.featurizer is not None else None

    @property
    def calibrated(self) -> bool:
        return self.calibration.fitted

    def margin(self, v: SparseVector) -> float:
        if v.dim != self.dim:
            raise VectorizerError(f"Dimension mismatch: vector has {v.dim}, model has {self.dim}")
        return v.dot(self.weights) + self.bias

    def predict(self, v: SparseVector) -> Prediction:
        return predict(self, v)

    def predict_text(self, text: str) -> Prediction:
        return predict(self, self._require_featurizer().transform_text(text))

    def predict_profile(self, profile: UserProfile) -> Prediction:
        return predict(self, self._require_featurizer().transform_profile(profile))

    def with_calibration(self, calibration: Calibration) -> "GenderModel":
        return replace(self, calibration=calibration)

    def _require_featurizer(self) -> Featurizer:
        if self.featurizer is None:
            raise VectorizerError("Model has no vocabulary: it can only score sparse vectors")
        return self.featurizer


def predict(model: GenderModel, v: SparseVector) -> Prediction:
    """
    Score a vector

    Raises:
        VectorizerError: If v does not have the model's dimension
    """
    margin = model.margin(v)
    label = GenderLabel.MALE if margin >= 0.0 else GenderLabel.FEMALE
    return Prediction(label=label, margin=margin, p_male=model.calibration.p_male(margin))
