"""
Gender from the predicted genders of an account's friends

An account is voted Female when at least `threshold` (default 1/3) of its
distinct friend names are predicted Female by a usernames classifier, and
Male otherwise. With no friends the vote abstains.
"""
import logging
from dataclasses import dataclass
from typing import Sequence

from src.classifier.model import GenderModel
from src.config import DEFAULT_TAU, FRIEND_THRESHOLD
from src.dataset.models import GenderLabel, UserProfile
from src.features.fields import FeatureSet
from src.text.normalize import normalize_text

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FriendVote:
    n_friends: int
    n_predicted_female: int
    ratio: float
    decision: GenderLabel  # UNKNOWN means the vote abstained

    @property
    def abstained(self) -> bool:
        return self.decision is GenderLabel.UNKNOWN


def _require_usernames_model(model: GenderModel) -> None:
    if model.feature_set is not FeatureSet.USERNAMES:
        found = model.feature_set.value if model.feature_set is not None else "none"
        raise ValueError(f"Friend voting needs a usernames model, got feature set '{found}'")


def friend_vote(
    friend_names: Sequence[str],
    model: GenderModel,
    threshold: float = FRIEND_THRESHOLD
) -> FriendVote:
    """
    Vote on an account's gender from its friends' names

    Names are deduplicated by normalized form; names that normalize to
    nothing are ignored.

    Raises:
        ValueError: If the model was not trained on usernames
    """
    _require_usernames_model(model)

    distinct = {}
    for name in friend_names:
        key = normalize_text(name)
        if key and key not in distinct:
            distinct[key] = name

    if not distinct:
        return FriendVote(n_friends=0, n_predicted_female=0, ratio=0.0, decision=GenderLabel.UNKNOWN)

    n_female = sum(
        1 for key in distinct if model.predict_text(key).label is GenderLabel.FEMALE
    )
    ratio = n_female / len(distinct)
    decision = GenderLabel.FEMALE if ratio >= threshold else GenderLabel.MALE
    return FriendVote(
        n_friends=len(distinct),
        n_predicted_female=n_female,
        ratio=ratio,
        decision=decision,
    )


def combined_predict(
    user: UserProfile,
    model: GenderModel,
    tau: float = DEFAULT_TAU,
    threshold: float = FRIEND_THRESHOLD
) -> GenderLabel:
    """
    Classifier label when it is confidently Male, the friend vote otherwise

    Args:
        user: Profile (username and friend_names are used)
        model: Calibrated usernames model
        tau: Minimum p_male for a confident Male prediction
        threshold: Female ratio for the friend vote

    Returns:
        Male or Female, never Unknown: an abstaining vote falls back to the
        classifier's own label
    """
    prediction = model.predict_text(user.username)
    if prediction.label is GenderLabel.MALE and prediction.p_male >= tau:
        return GenderLabel.MALE

    vote = friend_vote(user.friend_names, model, threshold)
    if vote.abstained:
        return prediction.label
    logger.debug(
        f"User {user.user_id}: p_male {prediction.p_male:.3f} < {tau}, "
        f"friends {vote.n_predicted_female}/{vote.n_friends} female -> {vote.decision.word}"
    )
    return vote.decision
