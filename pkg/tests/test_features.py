import math
import random

import numpy as np
import pytest

from src.dataset.models import UserProfile
from src.features.featurizer import Featurizer, fit_featurizer
from src.features.fields import FeatureSet, FieldTag, field_text, preprocess_tweet
from src.features.ngrams import char_ngrams
from src.features.vectors import SparseVector, concat_blocks, stack_vectors, vectorize
from src.features.vocabulary import VectorizerError, fit_vectorizer


@pytest.mark.parametrize("text, expected", [
    ("ab", ["ab"]),
    ("abc", ["ab", "bc", "abc"]),
    ("نور", ["نو", "ور", "نور"]),
    ("a", ["a"]),
    ("", []),
    ("a b", ["a ", " b", "a b"]),
])
def test_char_ngrams(text, expected):
    assert char_ngrams(text) == expected


def test_char_ngrams_count():
    # sum over n = 2..5 of (L - n + 1)
    text = "abcdefghij"
    assert len(char_ngrams(text)) == sum(len(text) - n + 1 for n in range(2, 6))


def test_char_ngrams_invalid_range():
    with pytest.raises(ValueError):
        char_ngrams("abc", (3, 2))
    with pytest.raises(ValueError):
        char_ngrams("abc", (0, 2))


def test_smoothed_idf():
    vocab = fit_vectorizer(["xy", "ab", "ab"], n_range=(2, 2))
    assert vocab.idf_of("xy") == pytest.approx(math.log(4 / 2) + 1, abs=1e-4)
    assert vocab.idf_of("xy") == pytest.approx(1.6931, abs=1e-4)

    everywhere = fit_vectorizer(["ab", "abc", "zab"], n_range=(2, 2))
    assert everywhere.idf_of("ab") == pytest.approx(1.0)


def test_min_df_drops_rare_grams():
    vocab = fit_vectorizer(["ab", "ab", "xy"], n_range=(2, 2), min_df=2)
    assert vocab.grams == ("ab",)


def test_vocabulary_errors():
    with pytest.raises(VectorizerError):
        fit_vectorizer([])
    with pytest.raises(VectorizerError):
        fit_vectorizer(["ab"], min_df=0)


def test_vocabulary_with_nothing_frequent_enough_is_empty():
    vocab = fit_vectorizer(["ab", "cd"], min_df=2)
    assert len(vocab) == 0
    assert vectorize("ab", vocab).dim == 0


def test_idf_is_independent_of_corpus_order():
    rng = random.Random(3)
    corpus = ["".join(rng.choice("ابتسمنه ") for _ in range(rng.randint(2, 12))) for _ in range(40)]
    reference = fit_vectorizer(corpus)
    expected = dict(zip(reference.grams, reference.idf))
    for _ in range(5):
        shuffled = corpus[:]
        rng.shuffle(shuffled)
        vocab = fit_vectorizer(shuffled)
        assert dict(zip(vocab.grams, vocab.idf)) == pytest.approx(expected)


def test_vectorize_weights():
    vocab = fit_vectorizer(["ab", "cd"], n_range=(2, 2))

    assert len(vectorize("zz", vocab)) == 0
    single = vectorize("ab", vocab)
    assert single.weights.tolist() == pytest.approx([1.0])

    both = vectorize("ab cd", vocab)
    assert both.weights.tolist() == pytest.approx([1 / math.sqrt(2)] * 2)
    assert both.norm() == pytest.approx(1.0)


def test_vectorize_normalizes_input():
    vocab = fit_vectorizer(["مديره"])
    assert np.array_equal(vectorize("مُديرة", vocab).to_dense(), vectorize("مديره", vocab).to_dense())


def test_sparse_vector_validation():
    with pytest.raises(VectorizerError):
        SparseVector(np.array([2, 1]), np.array([1.0, 1.0]), 3)
    with pytest.raises(VectorizerError):
        SparseVector(np.array([3]), np.array([1.0]), 3)
    v = SparseVector.from_dense([0.0, 2.0, 0.0])
    assert v.indices.tolist() == [1]
    with pytest.raises(VectorizerError):
        v.dot(np.zeros(2))


def test_concat_blocks_offsets_and_renormalizes():
    a = SparseVector.from_dense([3.0, 4.0])
    b = SparseVector.from_dense([0.0, 0.0, 2.0])
    joined = concat_blocks([a, b])
    assert joined.dim == 5
    assert joined.indices.tolist() == [0, 1, 4]
    assert joined.norm() == pytest.approx(1.0)
    assert joined.weights[2] == pytest.approx(1 / math.sqrt(2))


def test_stack_vectors():
    rows = [SparseVector.from_dense([1.0, 0.0]), SparseVector.zeros(2)]
    matrix = stack_vectors(rows, 2)
    assert matrix.toarray().tolist() == [[1.0, 0.0], [0.0, 0.0]]
    with pytest.raises(VectorizerError):
        stack_vectors([SparseVector.zeros(3)], 2)


def test_tweet_preprocessing():
    assert preprocess_tweet("see https://t.co/abc and @someone") == "see URL and @USER"
    assert preprocess_tweet("www.example.com") == "URL"


def test_field_text():
    profile = UserProfile(
        user_id="u",
        display_name="",
        screen_name="sara",
        description="طبيبة",
        tweets=("first http://x.y", "second @a"),
    )
    assert field_text(profile, FieldTag.USERNAMES) == "sara"
    assert field_text(profile, FieldTag.DESCRIPTION) == "طبيبة"
    assert field_text(profile, FieldTag.TWEETS) == "first URL second @USER"
    assert field_text(profile, FieldTag.TWEET) == "first URL"


def test_feature_set_labels():
    assert FeatureSet.ALL.label == "All"
    assert FeatureSet.USERNAMES.label == "Usernames"
    assert FeatureSet.ALL.fields == (FieldTag.USERNAMES, FieldTag.DESCRIPTION, FieldTag.TWEETS)


def test_featurizer_all_fields(fixture_profiles):
    featurizer = fit_featurizer(fixture_profiles, FeatureSet.ALL)
    assert featurizer.dim == sum(len(v) for v in featurizer.vocabularies)
    vector = featurizer.transform_profile(fixture_profiles[0])
    assert vector.dim == featurizer.dim
    assert vector.norm() == pytest.approx(1.0)
    with pytest.raises(VectorizerError):
        featurizer.transform_text("نوف")


def test_featurizer_checks_vocabulary_fields():
    vocab = fit_vectorizer(["ab"], field_tag=FieldTag.DESCRIPTION)
    with pytest.raises(VectorizerError):
        Featurizer(FeatureSet.USERNAMES, (vocab,))


def test_usernames_featurizer_transforms_names(fixture_profiles):
    featurizer = fit_featurizer(fixture_profiles, FeatureSet.USERNAMES)
    assert featurizer.vocabularies[0].min_df == 1
    profile = fixture_profiles[0]
    assert np.array_equal(
        featurizer.transform_text(profile.username).to_dense(),
        featurizer.transform_profile(profile).to_dense(),
    )
