"""
Accuracy and macro-averaged precision / recall / F1

Percentages are rounded half-up to one decimal (26.65 -> 26.7) to match the
usual results-table layout; raw fractions are kept alongside.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, ROUND_HALF_UP
from typing import Dict, List, Sequence

import numpy as np
from sklearn.metrics import confusion_matrix, precision_recall_fscore_support

from src.dataset.models import GenderLabel

logger = logging.getLogger(__name__)

# Confusion-matrix row/column order
CLASSES = (GenderLabel.MALE, GenderLabel.FEMALE)


class EvaluationError(ValueError):
    """Predictions and gold labels cannot be scored"""


def round_percent(fraction: float) -> float:
    """fraction -> percentage with one decimal, rounded half-up"""
    # repr of a value rounded to 9 places drops binary noise (26.650000000000002)
    exact = Decimal(repr(round(fraction * 100.0, 9)))
    return float(exact.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class EvalReport:
    """
    Scores of one configuration

    accuracy and the macro_* values are percentages with one decimal.
    confusion[i][j] counts gold CLASSES[i] predicted as CLASSES[j].
    """
    accuracy: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    confusion: List[List[int]]
    n: int
    raw: Dict[str, float] = field(default_factory=dict)
    config: Dict[str, str] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return self.config.get("feature_set", "")

    def row(self) -> Dict[str, object]:
        """Results-table row: Features, Acc, P, R, F1"""
        return {
            "Features": self.label,
            "Acc": self.accuracy,
            "P": self.macro_precision,
            "R": self.macro_recall,
            "F1": self.macro_f1,
        }


def _validate(predictions: Sequence[GenderLabel], gold: Sequence[GenderLabel]) -> None:
    if len(predictions) != len(gold):
        raise EvaluationError(f"Got {len(predictions)} predictions for {len(gold)} gold labels")
    if not gold:
        raise EvaluationError("Cannot score an empty test set")
    for name, labels in (("gold", gold), ("predicted", predictions)):
        invalid = {label for label in labels if label not in CLASSES}
        if invalid:
            raise EvaluationError(f"{name} labels must be Male or Female, found {sorted(label.value for label in invalid)}")


def compute_metrics(
    predictions: Sequence[GenderLabel],
    gold: Sequence[GenderLabel],
    config: Dict[str, str] = None
) -> EvalReport:
    """
    Score predictions against gold labels

    Per-class values with a zero denominator count as 0.

    Raises:
        EvaluationError: On length mismatch, empty input or labels other
            than Male / Female
    """
    _validate(predictions, gold)

    y_true = [label.value for label in gold]
    y_pred = [label.value for label in predictions]
    labels = [c.value for c in CLASSES]

    precision, recall, f1, _ = precision_recall_fscore_support(
        y_true, y_pred, labels=labels, average="macro", zero_division=0
    )
    matrix = confusion_matrix(y_true, y_pred, labels=labels)
    accuracy = float(np.trace(matrix)) / len(gold)

    return EvalReport(
        accuracy=round_percent(accuracy),
        macro_precision=round_percent(precision),
        macro_recall=round_percent(recall),
        macro_f1=round_percent(f1),
        confusion=matrix.tolist(),
        n=len(gold),
        raw={
            "accuracy": accuracy,
            "macro_precision": float(precision),
            "macro_recall": float(recall),
            "macro_f1": float(f1),
        },
        config=dict(config or {}),
    )


def majority_class(labels: Sequence[GenderLabel]) -> GenderLabel:
    """Most frequent of Male / Female; a tie goes to Male"""
    counts = Counter(labels)
    if counts[GenderLabel.FEMALE] > counts[GenderLabel.MALE]:
        return GenderLabel.FEMALE
    return GenderLabel.MALE


def majority_baseline(
    train_gold: Sequence[GenderLabel],
    test_gold: Sequence[GenderLabel],
    config: Dict[str, str] = None
) -> EvalReport:
    """
    Predict the majority class of the training labels for every test item

    Raises:
        EvaluationError: If train_gold is empty (or see compute_metrics)
    """
    if not train_gold:
        raise EvaluationError("Majority baseline needs training labels")
    majority = majority_class(train_gold)
    logger.info(f"Majority baseline predicts {majority.word} for {len(test_gold)} test item(s)")
    return compute_metrics(
        [majority] * len(test_gold),
        test_gold,
        config=config or {"feature_set": "Majority Baseline"},
    )
