"""Character n-gram tf-idf features"""

from src.features.ngrams import DEFAULT_NGRAM_RANGE, char_ngrams
from src.features.fields import (
    DEFAULT_MIN_DF,
    MAX_AGGREGATED_TWEETS,
    FeatureSet,
    FieldTag,
    field_text,
    prepare_text,
    preprocess_tweet,
)
from src.features.vocabulary import Vocabulary, VectorizerError, fit_vectorizer
from src.features.vectors import SparseVector, concat_blocks, l2_normalize, stack_vectors, vectorize
from src.features.featurizer import Featurizer, fit_featurizer

__all__ = [
    "DEFAULT_NGRAM_RANGE",
    "char_ngrams",
    "DEFAULT_MIN_DF",
    "MAX_AGGREGATED_TWEETS",
    "FeatureSet",
    "FieldTag",
    "field_text",
    "prepare_text",
    "preprocess_tweet",
    "Vocabulary",
    "VectorizerError",
    "fit_vectorizer",
    "SparseVector",
    "concat_blocks",
    "l2_normalize",
    "stack_vectors",
    "vectorize",
    "Featurizer",
    "fit_featurizer",
]
