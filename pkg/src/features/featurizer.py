"""
Profile -> SparseVector for a feature set
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from src.dataset.models import UserProfile
from src.features.fields import DEFAULT_MIN_DF, FeatureSet, FieldTag, field_text, prepare_text
from src.features.ngrams import DEFAULT_NGRAM_RANGE
from src.features.vectors import SparseVector, concat_blocks, vectorize
from src.features.vocabulary import Vocabulary, VectorizerError, fit_vectorizer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Featurizer:
    """One vocabulary per field of the feature set (three for All)"""
    feature_set: FeatureSet
    vocabularies: Tuple[Vocabulary, ...]

    def __post_init__(self):
        expected = self.feature_set.fields
        found = tuple(v.field_tag for v in self.vocabularies)
        if found != expected:
            raise VectorizerError(
                f"Feature set '{self.feature_set.value}' needs vocabularies {[f.value for f in expected]}, "
                f"got {[f.value for f in found]}"
            )

    @property
    def dim(self) -> int:
        return sum(len(v) for v in self.vocabularies)

    def transform_profile(self, profile: UserProfile) -> SparseVector:
        blocks = [vectorize(field_text(profile, v.field_tag), v) for v in self.vocabularies]
        if self.feature_set is FeatureSet.ALL:
            return concat_blocks(blocks)
        return blocks[0]

    def transform_text(self, text: str) -> SparseVector:
        """
        Vector of a single raw text (a name for a usernames model)

        Raises:
            VectorizerError: For an All-features model, which needs a profile
        """
        if self.feature_set is FeatureSet.ALL:
            raise VectorizerError("An All-features model predicts on full profiles, not on a single text")
        vocab = self.vocabularies[0]
        return vectorize(prepare_text(text, vocab.field_tag), vocab)


def fit_featurizer(
    profiles: Sequence[UserProfile],
    feature_set: FeatureSet,
    min_df: Optional[Dict[FieldTag, int]] = None,
    n_range: Tuple[int, int] = DEFAULT_NGRAM_RANGE
) -> Featurizer:
    """
    Fit the vocabularies a feature set needs on training profiles only

    Args:
        profiles: Training profiles
        feature_set: Field(s) to featurize
        min_df: Per-field overrides of DEFAULT_MIN_DF
        n_range: Gram lengths

    Raises:
        VectorizerError: If profiles is empty
    """
    cutoffs = dict(DEFAULT_MIN_DF)
    cutoffs.update(min_df or {})

    vocabularies = tuple(
        fit_vectorizer(
            [field_text(p, field) for p in profiles],
            n_range=n_range,
            min_df=cutoffs[field],
            field_tag=field,
        )
        for field in feature_set.fields
    )
    featurizer = Featurizer(feature_set=feature_set, vocabularies=vocabularies)
    logger.info(f"Featurizer '{feature_set.value}' has dimension {featurizer.dim}")
    return featurizer
