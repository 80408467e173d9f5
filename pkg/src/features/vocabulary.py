"""
tf-idf vocabulary fitting for character n-grams

Document frequencies and smoothed idf come from scikit-learn's
TfidfVectorizer driven by our own analyzer; the fitted state is copied out
into an immutable Vocabulary so models do not carry sklearn objects.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sklearn.feature_extraction.text import TfidfVectorizer

from src.features.fields import FieldTag
from src.features.ngrams import DEFAULT_NGRAM_RANGE, char_ngrams
from src.text.normalize import normalize_text

logger = logging.getLogger(__name__)


class VectorizerError(ValueError):
    """Vocabulary could not be fitted or used"""


@dataclass(frozen=True, eq=False)
class Vocabulary:
    """
    Fitted n-gram vocabulary

    Attributes:
        grams: Grams in index order (lexicographic)
        idf: idf per index, ln((1+N)/(1+df)) + 1
        n_range: (low, high) gram lengths
        min_df: Document-frequency cutoff used when fitting
        field_tag: Field the vocabulary was fitted on
    """
    grams: Tuple[str, ...]
    idf: np.ndarray
    n_range: Tuple[int, int] = DEFAULT_NGRAM_RANGE
    min_df: int = 1
    field_tag: FieldTag = FieldTag.USERNAMES
    index: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        idf = np.asarray(self.idf, dtype=np.float64)
        if idf.shape != (len(self.grams),):
            raise VectorizerError(f"idf has {idf.size} values for {len(self.grams)} grams")
        if idf.size and not np.all(idf > 0):
            raise VectorizerError("idf values must be positive")
        idf.setflags(write=False)
        object.__setattr__(self, "idf", idf)
        object.__setattr__(self, "n_range", tuple(self.n_range))
        object.__setattr__(self, "index", {g: i for i, g in enumerate(self.grams)})
        if len(self.index) != len(self.grams):
            raise VectorizerError("Vocabulary contains duplicate grams")

    def __len__(self) -> int:
        return len(self.grams)

    def idf_of(self, gram: str) -> float:
        return float(self.idf[self.index[gram]])


def fit_vectorizer(
    corpus: Sequence[str],
    n_range: Tuple[int, int] = DEFAULT_NGRAM_RANGE,
    min_df: int = 1,
    field_tag: FieldTag = FieldTag.USERNAMES
) -> Vocabulary:
    """
    Fit a character n-gram vocabulary with smoothed idf

    Args:
        corpus: Documents (normalized again here, so raw text is fine)
        n_range: (low, high) gram lengths
        min_df: Keep grams occurring in at least this many documents
        field_tag: Field the corpus was taken from

    Returns:
        Vocabulary indexed in lexicographic gram order. When no gram
        reaches min_df the vocabulary is empty and a warning is logged.

    Raises:
        VectorizerError: If the corpus is empty or min_df < 1
    """
    if not corpus:
        raise VectorizerError("Cannot fit a vocabulary on an empty corpus")
    if min_df < 1:
        raise VectorizerError(f"min_df must be >= 1, got {min_df}")

    def analyzer(doc: str) -> List[str]:
        return char_ngrams(normalize_text(doc), n_range)

    vectorizer = TfidfVectorizer(
        analyzer=analyzer,
        min_df=min_df,
        smooth_idf=True,
        sublinear_tf=False,
        norm="l2",
        lowercase=False,
    )
    try:
        vectorizer.fit(list(corpus))
    except ValueError as e:
        # sklearn refuses to build an empty vocabulary
        logger.warning(f"Empty {field_tag.value} vocabulary (min_df={min_df}, {len(corpus)} docs): {e}")
        return Vocabulary(grams=(), idf=np.zeros(0), n_range=n_range, min_df=min_df, field_tag=field_tag)

    grams = tuple(vectorizer.get_feature_names_out().tolist())
    vocabulary = Vocabulary(
        grams=grams,
        idf=vectorizer.idf_,
        n_range=n_range,
        min_df=min_df,
        field_tag=field_tag,
    )
    logger.info(f"Fitted {field_tag.value} vocabulary: {len(vocabulary)} grams from {len(corpus)} docs")
    return vocabulary
