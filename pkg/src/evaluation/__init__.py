"""Metrics, baselines and the experiment harness"""

from src.evaluation.metrics import (
    CLASSES,
    EvalReport,
    EvaluationError,
    compute_metrics,
    majority_baseline,
    majority_class,
    round_percent,
)
from src.evaluation.experiment import (
    Strategy,
    fit_model,
    predict_profiles,
    report_table,
    run_experiment,
    split_calibration,
    write_eval_report,
)

__all__ = [
    "CLASSES",
    "EvalReport",
    "EvaluationError",
    "compute_metrics",
    "majority_baseline",
    "majority_class",
    "round_percent",
    "Strategy",
    "fit_model",
    "predict_profiles",
    "report_table",
    "run_experiment",
    "split_calibration",
    "write_eval_report",
]
