"""
Train/evaluate harness for one feature set and prediction strategy
"""
import json
import logging
import os
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.classifier.calibration import calibrate
from src.classifier.model import GenderModel, Hyperparams
from src.classifier.trainer import train as train_model
from src.config import DEFAULT_TAU, FRIEND_THRESHOLD
from src.dataset.models import GenderLabel, UserProfile
from src.evaluation.metrics import EvalReport, EvaluationError, compute_metrics
from src.features.featurizer import fit_featurizer
from src.features.fields import FeatureSet, FieldTag
from src.network.friends import combined_predict, friend_vote

logger = logging.getLogger(__name__)

CALIBRATION_FRACTION = 0.1


class Strategy(str, Enum):
    CLASSIFIER = "classifier"
    FRIENDS = "friends"
    COMBINED = "combined"


def _gold_only(profiles: Sequence[UserProfile], name: str) -> List[UserProfile]:
    kept = [p for p in profiles if p.has_gold_gender]
    if not kept:
        raise EvaluationError(f"The {name} set has no profile with a gold gender")
    if len(kept) < len(profiles):
        logger.warning(f"Ignoring {len(profiles) - len(kept)} {name} profile(s) without gold gender")
    return kept


def split_calibration(
    profiles: Sequence[UserProfile], seed: int
) -> Tuple[List[UserProfile], List[UserProfile]]:
    """Shuffle under the seed; the last 10% is the calibration part"""
    order = np.random.default_rng(seed).permutation(len(profiles))
    shuffled = [profiles[i] for i in order]
    n_calibration = int(len(shuffled) * CALIBRATION_FRACTION)
    if n_calibration == 0:
        return shuffled, []
    return shuffled[:-n_calibration], shuffled[-n_calibration:]


def fit_model(
    train: Sequence[UserProfile],
    feature_set: FeatureSet,
    hyperparams: Hyperparams = Hyperparams(),
    min_df: Optional[Dict[FieldTag, int]] = None
) -> GenderModel:
    """
    Fit vocabularies and weights on 90% of train, calibrate on the rest

    Calibration is skipped (identity) when the held-out part is empty.
    """
    train = _gold_only(train, "training")
    fit_part, calibration_part = split_calibration(train, hyperparams.seed)

    featurizer = fit_featurizer(fit_part, feature_set, min_df=min_df)
    examples = [(featurizer.transform_profile(p), p.gold_gender) for p in fit_part]
    model = train_model(examples, hyperparams, featurizer=featurizer)

    if calibration_part:
        dev = [(featurizer.transform_profile(p), p.gold_gender) for p in calibration_part]
        model = calibrate(model, dev)
    else:
        logger.warning("Training set too small for a calibration split; model left uncalibrated")
    return model


def predict_profiles(
    model: GenderModel,
    profiles: Sequence[UserProfile],
    strategy: Strategy = Strategy.CLASSIFIER,
    tau: float = DEFAULT_TAU,
    threshold: float = FRIEND_THRESHOLD
) -> List[GenderLabel]:
    """
    Predict Male / Female for each profile

    friends: the friend vote alone, the classifier label when it abstains
    combined: confident-Male classifier, friend vote otherwise
    """
    if strategy is not Strategy.CLASSIFIER and model.feature_set is not FeatureSet.USERNAMES:
        raise EvaluationError(f"Strategy '{strategy.value}' needs a usernames model")

    predictions = []
    for profile in profiles:
        if strategy is Strategy.CLASSIFIER:
            predictions.append(model.predict_profile(profile).label)
        elif strategy is Strategy.FRIENDS:
            vote = friend_vote(profile.friend_names, model, threshold)
            predictions.append(model.predict_profile(profile).label if vote.abstained else vote.decision)
        else:
            predictions.append(combined_predict(profile, model, tau, threshold))
    return predictions


def run_experiment(
    train: Sequence[UserProfile],
    test: Sequence[UserProfile],
    feature_set: FeatureSet,
    hyperparams: Hyperparams = Hyperparams(),
    strategy: Strategy = Strategy.CLASSIFIER,
    train_name: str = "train",
    tau: float = DEFAULT_TAU,
    threshold: float = FRIEND_THRESHOLD,
    min_df: Optional[Dict[FieldTag, int]] = None
) -> EvalReport:
    """
    Fit on train only, predict on test, score

    Args:
        train: Training profiles with gold gender
        test: Test profiles with gold gender (never seen while fitting)
        feature_set: Usernames, Description, Tweets, Tweet or All
        hyperparams: Trainer settings; the seed also fixes the calibration split
        strategy: classifier, friends or combined
        train_name: Training-set name recorded in the report config

    Raises:
        EvaluationError: If either set lacks gold labels
        TrainingError: If the training part has a single class
    """
    test = _gold_only(test, "test")
    model = fit_model(train, feature_set, hyperparams, min_df=min_df)
    predictions = predict_profiles(model, test, strategy, tau, threshold)

    config = {
        "feature_set": feature_set.label,
        "train_set": train_name,
        "strategy": strategy.value,
        "seed": str(hyperparams.seed),
    }
    report = compute_metrics(predictions, [p.gold_gender for p in test], config=config)
    logger.info(
        f"{feature_set.label} ({strategy.value}) on {len(test)} test profile(s): "
        f"Acc {report.accuracy} P {report.macro_precision} R {report.macro_recall} F1 {report.macro_f1}"
    )
    return report


def report_table(reports: Sequence[EvalReport]) -> pd.DataFrame:
    """Results table, one row per report"""
    return pd.DataFrame([r.row() for r in reports], columns=["Features", "Acc", "P", "R", "F1"])


def write_eval_report(reports: Sequence[EvalReport], tsv_path: str, json_path: Optional[str] = None) -> None:
    """
    Write the results table as TSV and, optionally, the full detail as JSON
    (config, confusion matrix, raw fractions)
    """
    directory = os.path.dirname(os.path.abspath(tsv_path))
    os.makedirs(directory, exist_ok=True)
    report_table(reports).to_csv(tsv_path, sep="\t", index=False, float_format="%.1f")

    if json_path:
        detail = [
            {
                "config": r.config,
                "n": r.n,
                "accuracy": r.accuracy,
                "macro_precision": r.macro_precision,
                "macro_recall": r.macro_recall,
                "macro_f1": r.macro_f1,
                "confusion": {"labels": ["male", "female"], "matrix": r.confusion},
                "raw": r.raw,
            }
            for r in reports
        ]
        with open(json_path, "w", encoding="utf-8") as f:
            json.dump(detail, f, ensure_ascii=False, indent=2, sort_keys=True)
    logger.info(f"Wrote {len(reports)} evaluation row(s) to {tsv_path}")
