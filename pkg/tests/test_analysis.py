import random
from collections import Counter
from datetime import date

import pandas as pd
import pytest

from src.analysis.reports import valence_table, write_stats_report, write_valence_report
from src.analysis.stats import ProfessionPair, load_profession_pairs, stats_report
from src.analysis.valence import ValenceScore, gender_corpora, top_valence_words, tweet_tokens, valence
from src.config import PROFESSION_PAIRS_PATH


def _scores_by_token(results):
    return {s.token: s for s in results}


def test_token_in_one_category_only():
    scores = _scores_by_token(valence({"m": ["a", "b"], "f": ["c", "d"]}, min_count=1))
    assert scores["a"].scores == {"m": 1.0, "f": -1.0}
    assert scores["c"].scores == {"m": -1.0, "f": 1.0}


def test_equal_rates_score_zero():
    scores = _scores_by_token(valence({"m": ["a", "b"], "f": ["a", "a", "b", "b"]}, min_count=1))
    assert scores["a"].scores["m"] == pytest.approx(0.0)
    assert scores["a"].scores["f"] == pytest.approx(0.0)


def test_rates_are_normalized_by_category_size():
    corpora = {"m": Counter({"x": 3, "o": 7}), "f": Counter({"x": 1, "o": 9})}
    scores = _scores_by_token(valence(corpora, min_count=1))
    assert scores["x"].scores["m"] == pytest.approx(0.5)
    assert scores["x"].scores["f"] == pytest.approx(-0.5)
    assert scores["x"].counts == {"m": 3, "f": 1}
    assert scores["x"].total == 4


def test_min_count_filters_rare_tokens():
    scores = _scores_by_token(valence({"m": ["a"] * 5 + ["b"], "f": ["a", "c"]}, min_count=2))
    assert set(scores) == {"a"}


@pytest.mark.parametrize("corpora", [{"m": ["a"]}, {"m": ["a"], "f": []}])
def test_invalid_corpora(corpora):
    with pytest.raises(ValueError):
        valence(corpora)


def test_valence_matches_brute_force_on_random_corpora():
    rng = random.Random(17)
    vocabulary = [f"w{i}" for i in range(30)]
    for _ in range(1000):
        m = [rng.choice(vocabulary) for _ in range(rng.randint(1, 60))]
        f = [rng.choice(vocabulary[rng.randint(0, 10):]) for _ in range(rng.randint(1, 60))]
        results = valence({"m": m, "f": f}, min_count=1)

        assert [s.token for s in results] == sorted(set(m) | set(f))
        for s in results:
            rate_m = m.count(s.token) / len(m)
            rate_f = f.count(s.token) / len(f)
            expected_m = 2 * rate_m / (rate_m + rate_f) - 1
            expected_f = 2 * rate_f / (rate_m + rate_f) - 1
            assert abs(s.scores["m"] - expected_m) <= 1e-9
            assert abs(s.scores["f"] - expected_f) <= 1e-9
            assert -1.0 <= s.scores["m"] <= 1.0
            assert (s.scores["m"] + 1) / 2 + (s.scores["f"] + 1) / 2 == pytest.approx(1.0, abs=1e-12)


def _score(token, m, counts=None):
    return ValenceScore(token, {"m": m, "f": -m}, counts or {"m": 1, "f": 1})


def test_top_words_threshold():
    assert top_valence_words([_score("a", 0.5), _score("b", 0.2)], "m") == []
    ranked = top_valence_words([_score("a", 0.9), _score("b", 0.4)], "m")
    assert [s.token for s in ranked] == ["a"]


def test_top_words_ties_go_to_the_more_frequent_token():
    scores = [_score("rare", 0.8, {"m": 3, "f": 0}), _score("common", 0.8, {"m": 10, "f": 1})]
    assert [s.token for s in top_valence_words(scores, "m")] == ["common", "rare"]
    assert [s.token for s in top_valence_words(scores, "m", k=1)] == ["common"]


def test_tweet_tokens():
    assert tweet_tokens("صباح الخير @nouf https://t.co/x") == ["صباح", "الخير", "@user", "url"]


def test_gender_corpora_on_fixture(fixture_profiles):
    corpora = gender_corpora(fixture_profiles)
    assert set(corpora) == {"m", "f"}
    scores = _scores_by_token(valence(corpora, min_count=2))
    shared = scores["اللهم"]
    assert shared.counts == {"m": 12, "f": 12}
    assert -1.0 < shared.scores["m"] < 1.0
    assert shared.scores["m"] == pytest.approx(-shared.scores["f"])
    with pytest.raises(ValueError):
        gender_corpora(fixture_profiles, source="names")


def test_valence_report(tmp_path):
    results = valence({"m": ["a", "a", "b"], "f": ["b", "c"]}, min_count=1)
    table = valence_table(results, ["m", "f"])
    assert list(table.columns) == ["token", "score_m", "score_f", "count_m", "count_f"]
    path = tmp_path / "out" / "valence.tsv"
    write_valence_report(results, ["m", "f"], str(path))
    assert path.read_text(encoding="utf-8").splitlines()[0] == "token\tscore_m\tscore_f\tcount_m\tcount_f"


def test_empty_stats_report():
    report = stats_report([])
    assert report.gender_counts["count"].tolist() == [0, 0]
    assert report.gender_counts["percent"].tolist() == [0.0, 0.0]
    assert report.country_gender.empty
    assert report.joining_years.empty
    assert report.engagement["accounts"].tolist() == [0, 0]
    assert report.top_first_words.empty
    assert report.top_names.empty
    assert report.profession_gaps.empty


def test_gender_distribution(make_profile):
    profiles = [make_profile(gold_gender="m") for _ in range(4)] + [make_profile(gold_gender="f")]
    profiles.append(make_profile())
    table = stats_report(profiles).gender_counts
    assert table["count"].tolist() == [4, 1]
    assert table["percent"].tolist() == [80.0, 20.0]


def test_profession_gap(make_profile):
    profiles = [make_profile(description="مهندس مدني", gold_gender="m") for _ in range(94)]
    profiles += [make_profile(description="مهندسة", gold_gender="f") for _ in range(6)]
    gaps = stats_report(profiles, pairs=[ProfessionPair("مهندس", "مهندسة", "Engineering")]).profession_gaps
    row = gaps.iloc[0]
    assert (row["male_count"], row["female_count"]) == (94, 6)
    assert (row["male_percent"], row["female_percent"]) == (94.0, 6.0)


def test_fixture_report(fixture_profiles):
    pairs = load_profession_pairs(PROFESSION_PAIRS_PATH)
    report = stats_report(fixture_profiles, pairs=pairs)

    gaps = report.profession_gaps.set_index("masculine")
    assert gaps.loc["مهندس", ["male_percent", "female_percent"]].tolist() == [66.7, 33.3]
    assert gaps.loc["طبيب", ["male_percent", "female_percent"]].tolist() == [50.0, 50.0]
    assert gaps.loc["مبرمج", ["male_count", "female_count"]].tolist() == [0, 0]
    assert gaps.loc["مهندس", "domain"] == "Engineering"

    assert report.gender_counts["percent"].tolist() == [50.0, 50.0]

    years = report.joining_years
    assert years["cumulative"].iloc[-1] == 60
    assert years["cumulative"].is_monotonic_increasing
    assert years["year"].tolist() == sorted(years["year"].tolist())

    countries = report.country_gender.set_index("country")
    assert "UNK" in countries.index
    assert countries["total"].sum() == 60

    first_words = report.top_first_words
    male_top = first_words[first_words["gender"] == "m"].iloc[0]
    assert (male_top["word"], male_top["count"]) == ("مهندس", 6)

    names = report.top_names
    assert set(names["script"]) == {"arabic"}
    assert names[names["gender"] == "m"].iloc[0]["name"] == "محمد"


def test_report_is_independent_of_profile_order(fixture_profiles):
    pairs = load_profession_pairs(PROFESSION_PAIRS_PATH)
    shuffled = list(fixture_profiles)
    random.Random(2).shuffle(shuffled)
    first = stats_report(fixture_profiles, pairs=pairs).sections()
    second = stats_report(shuffled, pairs=pairs).sections()
    for name, table in first.items():
        pd.testing.assert_frame_equal(table, second[name], check_exact=False)


def test_joining_years_and_engagement(make_profile):
    profiles = [
        make_profile(gold_gender="m", created_at=date(2012, 1, 1), followers_count=10, verified=True),
        make_profile(gold_gender="f", created_at=date(2012, 6, 1), followers_count=30),
        make_profile(gold_gender="f", created_at=date(2015, 6, 1), followers_count=50),
        make_profile(gold_gender="f"),
    ]
    report = stats_report(profiles)
    assert report.joining_years.to_dict("records") == [
        {"year": 2012, "male": 1, "female": 1, "total": 2, "cumulative": 2},
        {"year": 2015, "male": 0, "female": 1, "total": 1, "cumulative": 3},
    ]
    engagement = report.engagement.set_index("gender")
    assert engagement.loc["m", "verified_percent"] == 100.0
    assert engagement.loc["f", "mean_followers"] == pytest.approx(80 / 3, abs=0.01)


def test_write_stats_report(tmp_path, fixture_profiles):
    paths = write_stats_report(stats_report(fixture_profiles), str(tmp_path / "stats"))
    assert [p.split("/")[-1] for p in paths] == [
        "gender_counts.tsv", "country_gender.tsv", "joining_years.tsv", "engagement.tsv",
        "top_first_words.tsv", "top_names.tsv", "profession_gaps.tsv",
    ]


def test_unknown_gender_profiles_stay_out_of_gender_tables(make_profile):
    report = stats_report([make_profile(gold_gender="?", description="مهندس")],
                          pairs=[ProfessionPair("مهندس", "مهندسة")])
    assert report.gender_counts["count"].tolist() == [0, 0]
    assert report.profession_gaps.iloc[0]["male_count"] == 1
