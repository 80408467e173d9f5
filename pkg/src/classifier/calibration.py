"""
Margin -> probability calibration

p_male = logistic(a * margin) fitted by logistic regression without an
intercept, so p_male >= 0.5 exactly when margin >= 0 and the probability
never contradicts the label.
"""
import logging
from typing import Sequence, Tuple

import numpy as np
from sklearn.linear_model import LogisticRegression

from src.classifier.model import Calibration, GenderModel
from src.classifier.trainer import label_signs
from src.dataset.models import GenderLabel
from src.features.vectors import SparseVector

logger = logging.getLogger(__name__)

IDENTITY = Calibration(a=1.0, b=0.0, fitted=False)


def fit_calibration(margins: Sequence[float], labels: Sequence[GenderLabel]) -> Calibration:
    """
    Fit the logistic slope on (margin, label) pairs

    Degenerate input (one class only, constant margins, or a fitted slope
    that is not positive) gives the identity calibration and a warning.
    """
    margins = np.asarray(margins, dtype=np.float64)
    y = label_signs(labels)

    if margins.size == 0 or not (np.any(y > 0) and np.any(y < 0)):
        logger.warning("Calibration set does not contain both classes; keeping identity calibration")
        return IDENTITY
    if np.ptp(margins) == 0.0:
        logger.warning("All calibration margins are equal; keeping identity calibration")
        return IDENTITY

    regression = LogisticRegression(fit_intercept=False, C=1e4, max_iter=1000)
    regression.fit(margins.reshape(-1, 1), (y > 0).astype(int))
    slope = float(regression.coef_[0, 0])

    if not slope > 0 or not np.isfinite(slope):
        logger.warning(f"Calibration slope {slope:.4g} is not positive; keeping identity calibration")
        return IDENTITY

    logger.info(f"Calibrated on {margins.size} examples: slope {slope:.4f}")
    return Calibration(a=slope, b=0.0, fitted=True)


def calibrate(model: GenderModel, dev: Sequence[Tuple[SparseVector, GenderLabel]]) -> GenderModel:
    """
    Return a copy of the model with calibration fitted on a dev set

    Args:
        model: Trained model
        dev: (vector, Male|Female) pairs not used for training
    """
    margins = [model.margin(v) for v, _ in dev]
    labels = [label for _, label in dev]
    return model.with_calibration(fit_calibration(margins, labels))
