import json
import random

import pytest
from fastapi.testclient import TestClient

from src.api.app import create_app
from src.classifier.persistence import load_model
from src.cli import run_cli
from src.config import FIXTURE_PROFILES_PATH
from src.dataset.parser import load_profiles


def test_usage_errors_exit_2():
    assert run_cli([]) == 2
    assert run_cli(["predict"]) == 2
    assert run_cli(["no-such-command"]) == 2
    assert run_cli(["evaluate", "--features", "emoji"]) == 2


def test_missing_input_exits_1(tmp_path, capsys):
    assert run_cli(["stats", "--in", str(tmp_path / "missing.jsonl"), "--out", str(tmp_path)]) == 1
    assert "error:" in capsys.readouterr().err


def test_evaluate_without_sets_exits_1():
    assert run_cli(["evaluate"]) == 1


def test_predict_matches_the_http_service(crafted_model_path, capsys):
    client = TestClient(create_app(load_model(crafted_model_path)))
    rng = random.Random(4)
    pieces = ["مهندسة", "مهندس", "نوف", "محمد", "Nouf", "هند", "س", "ة"]
    for _ in range(100):
        name = " ".join(rng.choice(pieces) for _ in range(rng.randint(1, 3)))
        assert run_cli(["predict", "--model", crafted_model_path, "--name", name]) == 0
        gender, probability = capsys.readouterr().out.strip().split("\t")
        data = client.post("/predict", json={"name": name}).json()
        assert gender == data["gender"]
        assert probability == repr(data["probability"])


def test_predict_empty_name_exits_1(crafted_model_path):
    assert run_cli(["predict", "--model", crafted_model_path, "--name", " "]) == 1


def test_predict_with_missing_model_exits_1(tmp_path):
    assert run_cli(["predict", "--model", str(tmp_path / "none.bin"), "--name", "نوف"]) == 1


def test_build_lexicon_then_label(tmp_path):
    lexicon = tmp_path / "lexicon" / "lexicon.tsv"
    assert run_cli(["build-lexicon", "--in", FIXTURE_PROFILES_PATH, "--out", str(lexicon)]) == 0
    assert lexicon.exists()
    assert (tmp_path / "lexicon" / "lexicon.candidates.tsv").exists()
    assert (tmp_path / "lexicon" / "lexicon.exclusions.txt").exists()

    labeled = tmp_path / "labeled.jsonl"
    assert run_cli(["label", "--in", FIXTURE_PROFILES_PATH, "--lexicon", str(lexicon), "--out", str(labeled)]) == 0
    profiles = load_profiles(str(labeled)).profiles
    assert profiles
    assert all(p.has_gold_gender for p in profiles)


def test_train_writes_a_loadable_model(tmp_path, capsys):
    path = tmp_path / "models" / "usernames.bin"
    assert run_cli(["train", "--in", FIXTURE_PROFILES_PATH, "--out", str(path), "--epochs", "5"]) == 0
    model = load_model(str(path))
    assert model.model_version in capsys.readouterr().out
    assert model.feature_set.value == "usernames"


def test_evaluate_writes_results(tmp_path, capsys):
    out, detail = tmp_path / "results.tsv", tmp_path / "results.json"
    status = run_cli([
        "evaluate", "--train", FIXTURE_PROFILES_PATH, "--test", FIXTURE_PROFILES_PATH,
        "--baseline", "--out", str(out), "--detail", str(detail),
    ])
    assert status == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0] == "Majority Baseline\t50.0\t25.0\t50.0\t33.3"
    assert rows[1].startswith("Usernames\t")
    assert out.read_text(encoding="utf-8").splitlines()[0] == "Features\tAcc\tP\tR\tF1"
    assert len(json.loads(detail.read_text(encoding="utf-8"))) == 2


def test_evaluate_with_split_file(tmp_path, capsys):
    split = tmp_path / "split.tsv"
    lines = [f"{g}{i:02d}\t{'test' if i > 24 else 'train'}" for g in "mf" for i in range(1, 31)]
    split.write_text("\n".join(lines) + "\n", encoding="utf-8")
    status = run_cli([
        "evaluate", "--in", FIXTURE_PROFILES_PATH, "--split", str(split), "--strategy", "combined",
    ])
    assert status == 0
    assert capsys.readouterr().out.startswith("Usernames\t")


def test_valence(tmp_path, capsys):
    out = tmp_path / "valence.tsv"
    assert run_cli(["valence", "--in", FIXTURE_PROFILES_PATH, "--min-count", "2", "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8").startswith("token\tscore_m\tscore_f")
    for line in capsys.readouterr().out.splitlines():
        category, _, score, _ = line.split("\t")
        assert category in ("m", "f")
        assert float(score) >= 0.5


def test_stats(tmp_path, capsys):
    assert run_cli(["stats", "--in", FIXTURE_PROFILES_PATH, "--out", str(tmp_path / "stats")]) == 0
    assert "7 report table(s)" in capsys.readouterr().out
    assert (tmp_path / "stats" / "profession_gaps.tsv").exists()


@pytest.mark.parametrize("secret", ["k1", "k2"])
def test_anonymize(tmp_path, secret):
    out = tmp_path / "anon.jsonl"
    assert run_cli(["anonymize", "--in", FIXTURE_PROFILES_PATH, "--out", str(out), "--secret", secret]) == 0
    original = load_profiles(FIXTURE_PROFILES_PATH).profiles
    anonymized = load_profiles(str(out)).profiles
    assert len(anonymized) == len(original)
    assert {p.screen_name for p in anonymized}.isdisjoint({p.screen_name for p in original})
    assert [p.gold_gender for p in anonymized] == [p.gold_gender for p in original]


def test_label_with_geocoder_fallback(tmp_path):
    lexicon = tmp_path / "lexicon.tsv"
    assert run_cli(["build-lexicon", "--in", FIXTURE_PROFILES_PATH, "--out", str(lexicon)]) == 0
    plain, geocoded = tmp_path / "plain.jsonl", tmp_path / "geocoded.jsonl"
    common = ["label", "--in", FIXTURE_PROFILES_PATH, "--lexicon", str(lexicon)]
    assert run_cli(common + ["--out", str(plain)]) == 0
    # every fixture location is in the gazetteer or empty: the geocoder is never asked
    assert run_cli(common + ["--out", str(geocoded), "--geocode", "--geocode-cache", str(tmp_path / "geo.db")]) == 0
    assert geocoded.read_text(encoding="utf-8") == plain.read_text(encoding="utf-8")
