"""
Shared pytest fixtures
"""
import json

import numpy as np
import pytest

from src.classifier.model import Calibration, GenderModel
from src.classifier.persistence import save_model
from src.config import EXCEPTIONS_DIR, FIXTURE_PROFILES_PATH, GAZETTEER_PATH
from src.dataset.models import UserProfile
from src.dataset.parser import load_profiles
from src.evaluation.experiment import fit_model
from src.features.featurizer import Featurizer
from src.features.fields import FeatureSet, FieldTag
from src.features.ngrams import char_ngrams
from src.features.vocabulary import fit_vectorizer
from src.geo.gazetteer import load_gazetteer
from src.lexicon.tables import load_exception_tables
from src.text.normalize import normalize_text


@pytest.fixture(scope="session")
def fixture_profiles():
    """The bundled 60-profile synthetic dataset (30 male, 30 female)"""
    return load_profiles(FIXTURE_PROFILES_PATH).profiles


@pytest.fixture(scope="session")
def tables():
    return load_exception_tables(EXCEPTIONS_DIR)


@pytest.fixture(scope="session")
def gazetteer():
    return load_gazetteer(GAZETTEER_PATH)


@pytest.fixture
def make_profile():
    """Factory for profiles with sensible defaults"""
    counter = {"n": 0}

    def factory(**fields):
        counter["n"] += 1
        fields.setdefault("user_id", f"t{counter['n']:04d}")
        return UserProfile(**fields)

    return factory


@pytest.fixture(scope="session")
def usernames_model(fixture_profiles):
    """Calibrated usernames model trained on the fixture"""
    return fit_model(fixture_profiles, FeatureSet.USERNAMES)


def build_crafted_model() -> GenderModel:
    """
    Usernames model over the grams of "مهندس" / "مهندسة"

    Grams only the feminine form has weigh -1, shared grams 0, so
    "مهندسة" is Female and "مهندس" scores exactly 0 (Male).
    """
    masculine, feminine = normalize_text("مهندس"), normalize_text("مهندسة")
    vocab = fit_vectorizer([masculine, feminine], min_df=1, field_tag=FieldTag.USERNAMES)
    masculine_grams = set(char_ngrams(masculine))
    feminine_grams = set(char_ngrams(feminine))

    weights = []
    for gram in vocab.grams:
        if gram in feminine_grams and gram not in masculine_grams:
            weights.append(-1.0)
        elif gram in masculine_grams and gram not in feminine_grams:
            weights.append(1.0)
        else:
            weights.append(0.0)

    return GenderModel(
        weights=np.array(weights),
        bias=0.0,
        calibration=Calibration(a=3.0, b=0.0, fitted=True),
        featurizer=Featurizer(FeatureSet.USERNAMES, (vocab,)),
    )


@pytest.fixture
def crafted_model():
    return build_crafted_model()


@pytest.fixture
def crafted_model_path(tmp_path):
    path = tmp_path / "crafted.bin"
    save_model(build_crafted_model(), str(path))
    return str(path)


@pytest.fixture
def write_jsonl(tmp_path):
    """Write a list of dicts as a JSON Lines file and return its path"""

    def writer(name, records):
        path = tmp_path / name
        path.write_text(
            "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records), encoding="utf-8"
        )
        return str(path)

    return writer
