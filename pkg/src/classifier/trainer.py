"""
Linear SVM training by stochastic subgradient descent

Minimizes

    lambda/2 * ||w||^2 + mean_i max(0, 1 - y_i * (w . x_i + b))

with an unregularized bias, step size 1/(lambda * t) and one shuffled pass
over the examples per epoch (numpy Generator seeded from the run seed).
The weight vector is kept as scale * v so the shrink step is O(1), and is
projected onto the ball of radius sqrt(2/lambda), which contains the
optimum. After the last epoch the bias of each candidate solution (last
iterate, average of the late epoch snapshots, zero vector) is replaced by
its exact minimizer and the candidate with the lowest objective is kept.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from src.classifier.model import GenderModel, Hyperparams, TrainingError
from src.dataset.models import GenderLabel
from src.features.featurizer import Featurizer
from src.features.vectors import SparseVector, stack_vectors

logger = logging.getLogger(__name__)

# Relative tolerance when comparing objective values
_OBJECTIVE_TOL = 1e-12


def label_signs(labels: Sequence[GenderLabel]) -> np.ndarray:
    """Male -> +1, Female -> -1"""
    signs = []
    for label in labels:
        if label is GenderLabel.MALE:
            signs.append(1.0)
        elif label is GenderLabel.FEMALE:
            signs.append(-1.0)
        else:
            raise TrainingError(f"Training labels must be Male or Female, got '{label.value}'")
    return np.array(signs, dtype=np.float64)


def hinge_objective(X, y: np.ndarray, weights: np.ndarray, bias: float, regularization: float) -> float:
    """
    Regularized hinge objective of (weights, bias) on a dataset

    Args:
        X: (n, d) dense array or sparse matrix
        y: +1/-1 labels
        weights: (d,) weight vector
        bias: Intercept (not regularized)
        regularization: lambda
    """
    margins = np.asarray(X @ weights).ravel() + bias
    losses = np.maximum(0.0, 1.0 - y * margins)
    return float(0.5 * regularization * np.dot(weights, weights) + losses.mean())


def best_bias(scores: np.ndarray, y: np.ndarray) -> float:
    """
    Exact minimizer over b of mean_i max(0, 1 - y_i * (scores_i + b))

    The loss is piecewise linear in b with kinks at y_i - scores_i, so it
    is evaluated at every kink (and at 0) in O(n log n) using sorted kinks
    and prefix sums. Ties go to the smallest |b|, then the smaller b.
    """
    kinks = y - scores
    positive = np.sort(kinks[y > 0])
    negative = np.sort(kinks[y < 0])
    pos_prefix = np.concatenate(([0.0], np.cumsum(positive)))
    neg_prefix = np.concatenate(([0.0], np.cumsum(negative)))

    candidates = np.concatenate((kinks, [0.0]))

    # positives lose (k - b) for k > b, negatives lose (b - k) for k < b
    above = np.searchsorted(positive, candidates, side="right")
    pos_loss = (pos_prefix[-1] - pos_prefix[above]) - candidates * (positive.size - above)
    below = np.searchsorted(negative, candidates, side="left")
    neg_loss = candidates * below - neg_prefix[below]
    totals = pos_loss + neg_loss

    lowest = totals.min()
    tied = totals <= lowest + _OBJECTIVE_TOL * max(1.0, abs(lowest))
    order = np.lexsort((candidates[tied], np.abs(candidates[tied])))
    return float(candidates[tied][order[0]])


def _validate(X: sparse.csr_matrix, y: np.ndarray) -> None:
    if X.shape[0] == 0:
        raise TrainingError("Cannot train on an empty example list")
    if not np.all(np.isfinite(X.data)):
        raise TrainingError("Feature values must be finite (found NaN or inf)")
    if not (np.any(y > 0) and np.any(y < 0)):
        only = "Male" if y[0] > 0 else "Female"
        raise TrainingError(f"Training needs both classes, got only {only} examples")


def fit_weights(X: sparse.csr_matrix, y: np.ndarray, hyperparams: Hyperparams) -> Tuple[np.ndarray, float, dict]:
    """
    Train (weights, bias) on a CSR matrix of examples

    Returns:
        (weights, bias, metadata) with the final objective in metadata

    Raises:
        TrainingError: On empty input, a single class or non-finite features
    """
    X = sparse.csr_matrix(X, dtype=np.float64)
    _validate(X, y)

    n, d = X.shape
    lam = hyperparams.regularization
    radius = np.sqrt(2.0 / lam)
    max_row_norm = float(np.sqrt(X.multiply(X).sum(axis=1).max())) if X.nnz else 0.0
    bias_bound = 1.0 + radius * max_row_norm
    rng = np.random.default_rng(hyperparams.seed)

    v = np.zeros(d)
    scale = 1.0
    sq_norm_v = 0.0
    b = 0.0
    t = 0

    averaged = np.zeros(d)
    averaged_b = 0.0
    n_averaged = 0
    first_averaged_epoch = hyperparams.epochs // 2

    for epoch in range(hyperparams.epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            start, end = X.indptr[i], X.indptr[i + 1]
            idx, vals = X.indices[start:end], X.data[start:end]

            margin = y[i] * (scale * np.dot(v[idx], vals) + b)

            if t == 1:
                # (1 - 1/t) = 0: the shrink wipes w
                v[:] = 0.0
                scale, sq_norm_v = 1.0, 0.0
            else:
                scale *= 1.0 - 1.0 / t

            if margin < 1.0:
                delta = (eta * y[i] / scale) * vals
                sq_norm_v += 2.0 * np.dot(v[idx], delta) + np.dot(delta, delta)
                v[idx] += delta
                b = float(np.clip(b + eta * y[i], -bias_bound, bias_bound))

            w_norm = scale * np.sqrt(max(sq_norm_v, 0.0))
            if w_norm > radius:
                scale *= radius / w_norm

            if scale < 1e-9:
                v *= scale
                scale = 1.0
                sq_norm_v = float(np.dot(v, v))

        if epoch >= first_averaged_epoch:
            n_averaged += 1
            averaged += (scale * v - averaged) / n_averaged
            averaged_b += (b - averaged_b) / n_averaged

    candidates = [("last", scale * v), ("averaged", averaged), ("zero", np.zeros(d))]
    best: Optional[Tuple[float, str, np.ndarray, float]] = None
    for name, weights in candidates:
        scores = np.asarray(X @ weights).ravel()
        bias = best_bias(scores, y)
        objective = hinge_objective(X, y, weights, bias, lam)
        logger.debug(f"Candidate '{name}': objective {objective:.6f}")
        if best is None or objective < best[0] - _OBJECTIVE_TOL * max(1.0, abs(best[0])):
            best = (objective, name, weights, bias)

    objective, name, weights, bias = best
    metadata = {
        "objective": objective,
        "solution": name,
        "n_examples": int(n),
        "n_male": int(np.sum(y > 0)),
        "n_female": int(np.sum(y < 0)),
        "n_features": int(d),
        "steps": int(t),
    }
    logger.info(
        f"Trained on {n} examples x {d} features: objective {objective:.6f} "
        f"({name} solution, {hyperparams.epochs} epochs, lambda={lam})"
    )
    return weights.copy(), bias, metadata


def train(
    examples: Sequence[Tuple[SparseVector, GenderLabel]],
    hyperparams: Hyperparams = Hyperparams(),
    featurizer: Optional[Featurizer] = None
) -> GenderModel:
    """
    Train a linear gender classifier

    Args:
        examples: (vector, Male|Female) pairs, all of the same dimension
        hyperparams: Regularization, epochs and shuffling seed
        featurizer: Vocabularies the vectors were built with (stored in the model)

    Returns:
        Uncalibrated GenderModel; the final objective is in model.training

    Raises:
        TrainingError: On empty or single-class input, non-finite features
            or vectors of mixed dimension
    """
    if not examples:
        raise TrainingError("Cannot train on an empty example list")

    dims = {v.dim for v, _ in examples}
    if len(dims) != 1:
        raise TrainingError(f"Training vectors have mixed dimensions: {sorted(dims)}")
    dim = dims.pop()
    if featurizer is not None and featurizer.dim != dim:
        raise TrainingError(f"Vectors have dimension {dim} but the featurizer has {featurizer.dim}")

    vectors: List[SparseVector] = [v for v, _ in examples]
    y = label_signs([label for _, label in examples])
    X = stack_vectors(vectors, dim)

    weights, bias, metadata = fit_weights(X, y, hyperparams)
    return GenderModel(
        weights=weights,
        bias=bias,
        hyperparams=hyperparams,
        featurizer=featurizer,
        training=metadata,
    )
