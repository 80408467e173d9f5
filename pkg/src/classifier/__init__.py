"""Linear max-margin gender classifier"""

from src.classifier.model import (
    Calibration,
    GenderModel,
    Hyperparams,
    Prediction,
    TrainingError,
    predict,
)
from src.classifier.trainer import best_bias, fit_weights, hinge_objective, label_signs, train
from src.classifier.calibration import IDENTITY, calibrate, fit_calibration
from src.classifier.persistence import (
    FORMAT_VERSION,
    ModelFormatError,
    ModelVersionError,
    load_model,
    model_from_bytes,
    model_to_bytes,
    save_model,
)

__all__ = [
    "Calibration",
    "GenderModel",
    "Hyperparams",
    "Prediction",
    "TrainingError",
    "predict",
    "best_bias",
    "fit_weights",
    "hinge_objective",
    "label_signs",
    "train",
    "IDENTITY",
    "calibrate",
    "fit_calibration",
    "FORMAT_VERSION",
    "ModelFormatError",
    "ModelVersionError",
    "load_model",
    "model_from_bytes",
    "model_to_bytes",
    "save_model",
]
