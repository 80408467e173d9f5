import json
import random
from datetime import date

import pytest

from src.dataset.anonymize import anonymize, pseudonym
from src.dataset.models import GenderLabel, MAX_FRIENDS, UserProfile
from src.dataset.parser import (
    DatasetDecodeError,
    load_exclusions,
    load_profiles,
    parse_profiles,
    profile_to_record,
    serialize_profiles,
)
from src.dataset.splits import apply_split, load_split

FULL_RECORD = {
    "user_id": "u1",
    "display_name": "نوف سناء",
    "screen_name": "nouf_s",
    "description": "مهندسة معمارية ✨",
    "location_raw": "جدة",
    "created_at": "2012-03-15",
    "followers_count": 120,
    "friends_count": 80,
    "verified": True,
    "tweets": ["صباح الخير", "https://t.co/x @friend"],
    "friend_names": ["محمد خالد", "سوسن"],
    "gold_gender": "f",
    "gold_country": "SA",
}


def _line(record) -> bytes:
    return (json.dumps(record, ensure_ascii=False) + "\n").encode("utf-8")


def test_empty_stream():
    parsed = parse_profiles(b"")
    assert parsed.profiles == []
    assert parsed.diagnostics == []


def test_full_record_round_trips():
    parsed = parse_profiles(_line(FULL_RECORD))
    assert len(parsed.profiles) == 1
    profile = parsed.profiles[0]
    assert profile.gold_gender is GenderLabel.FEMALE
    assert profile.created_at == date(2012, 3, 15)
    assert profile_to_record(profile) == FULL_RECORD


def test_duplicate_user_id_keeps_first():
    second = dict(FULL_RECORD, display_name="other")
    parsed = parse_profiles(_line(FULL_RECORD) + _line(second))
    assert [p.display_name for p in parsed.profiles] == ["نوف سناء"]
    assert len(parsed.diagnostics) == 1
    assert parsed.diagnostics[0].line_number == 2
    assert parsed.diagnostics[0].user_id == "u1"
    assert "duplicate" in parsed.diagnostics[0].message


def test_bad_records_are_skipped_with_diagnostics():
    data = (
        b"{not json\n"
        + b"[1, 2]\n"
        + _line({"user_id": "u2", "followers_count": -1})
        + _line({"user_id": "u3", "unexpected": 1})
        + _line({"user_id": "u4", "screen_name": "نوف"})
        + _line({"user_id": "u5", "gold_country": "Saudi"})
        + _line({"user_id": "u6", "friend_names": ["x"] * (MAX_FRIENDS + 1)})
        + _line({"user_id": "u7"})
    )
    parsed = parse_profiles(data)
    assert [p.user_id for p in parsed.profiles] == ["u7"]
    assert [d.line_number for d in parsed.diagnostics] == [1, 2, 3, 4, 5, 6, 7]


def test_invalid_utf8_is_fatal():
    with pytest.raises(DatasetDecodeError):
        parse_profiles(b'{"user_id": "u1"}\n\xff\xfe\n')


def test_line_separator_inside_strings_is_not_a_record_break():
    record = {"user_id": "u1", "description": "a" + chr(0x2028) + "b"}
    parsed = parse_profiles(_line(record))
    assert parsed.profiles[0].description == "a" + chr(0x2028) + "b"


def test_crlf_lines_are_accepted():
    data = b'{"user_id": "u1"}\r\n{"user_id": "u2"}\r\n'
    assert [p.user_id for p in parse_profiles(data).profiles] == ["u1", "u2"]


def test_exclusions_drop_accounts_at_ingest(tmp_path):
    path = tmp_path / "exclude.txt"
    path.write_text("# bots\nu2\n\nu3  # spam\n", encoding="utf-8")
    exclude = load_exclusions(str(path))
    assert exclude == {"u2", "u3"}

    data = b"".join(_line({"user_id": f"u{i}"}) for i in range(1, 5))
    parsed = parse_profiles(data, exclude=exclude)
    assert [p.user_id for p in parsed.profiles] == ["u1", "u4"]
    assert parsed.excluded == 2


def test_username_falls_back_to_screen_name():
    assert UserProfile(user_id="a", display_name="  ", screen_name="ali").username == "ali"
    assert UserProfile(user_id="a", display_name="علي", screen_name="ali").username == "علي"


def _random_record(rng: random.Random, index: int) -> dict:
    alphabet = "ابتثجحخدذرزسشصضطظعغفقكلمنهويةىأإآ abcXYZ123#@_.\"\\\t"

    def text(n: int) -> str:
        return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, n)))

    return {
        "user_id": f"r{index}",
        "display_name": text(15),
        "screen_name": "".join(rng.choice("abc_123") for _ in range(rng.randint(0, 8))),
        "description": text(40),
        "location_raw": text(10),
        "created_at": None if rng.random() < 0.2 else f"20{rng.randint(10, 20)}-0{rng.randint(1, 9)}-1{rng.randint(0, 9)}",
        "followers_count": rng.randint(0, 10_000),
        "friends_count": rng.randint(0, 5_000),
        "verified": rng.random() < 0.1,
        "tweets": [text(30) for _ in range(rng.randint(0, 4))],
        "friend_names": [text(12) for _ in range(rng.randint(0, 5))],
        "gold_gender": rng.choice(["m", "f", "?"]),
        "gold_country": rng.choice(["SA", "EG", "OTH", "?"]),
    }


def test_parse_serialize_parse_is_identity():
    rng = random.Random(7)
    records = [_random_record(rng, i) for i in range(300)]
    data = b"".join(_line(r) for r in records)

    first = parse_profiles(data).profiles
    assert len(first) == len(records)
    second = parse_profiles(serialize_profiles(first)).profiles
    assert second == first
    assert [profile_to_record(p) for p in second] == records


def test_fixture_dataset_loads_cleanly(fixture_profiles):
    assert len(fixture_profiles) == 60
    genders = [p.gold_gender for p in fixture_profiles]
    assert genders.count(GenderLabel.MALE) == 30
    assert genders.count(GenderLabel.FEMALE) == 30


def test_anonymize_empty():
    assert anonymize([]) == []


def test_anonymize_assigns_distinct_ids_and_keeps_content(make_profile):
    profiles = [
        make_profile(screen_name="ali", description="مهندس"),
        make_profile(screen_name="sara", description="طبيبة"),
    ]
    result = anonymize(profiles, secret=b"k")
    assert [p.user_id for p in result] == ["u000001", "u000002"]
    assert result[0].screen_name != "ali"
    assert result[0].screen_name.startswith("user_")
    assert [p.description for p in result] == ["مهندس", "طبيبة"]


def test_anonymize_is_deterministic_for_a_secret(fixture_profiles):
    first = anonymize(fixture_profiles, secret=b"run-secret")
    second = anonymize(fixture_profiles, secret=b"run-secret")
    assert first == second
    other = anonymize(fixture_profiles, secret=b"another")
    assert [p.screen_name for p in other] != [p.screen_name for p in first]


def test_pseudonym_is_keyed():
    assert pseudonym("ali", b"a") == pseudonym("ali", b"a")
    assert pseudonym("ali", b"a") != pseudonym("ali", b"b")
    assert len(pseudonym("ali", b"a")) == len("user_") + 16


def test_split_file(tmp_path, make_profile):
    path = tmp_path / "split.tsv"
    path.write_text("a\ttrain\nb\ttest\nc\ttrain\n", encoding="utf-8")
    assignment = load_split(str(path))
    assert assignment == {"a": "train", "b": "test", "c": "train"}

    profiles = [make_profile(user_id=uid) for uid in ("a", "b", "c", "d")]
    train, test = apply_split(profiles, assignment)
    assert [p.user_id for p in train] == ["a", "c"]
    assert [p.user_id for p in test] == ["b"]


@pytest.mark.parametrize("content", ["a\tvalidation\n", "a\ttrain\na\ttest\n", "a train\n"])
def test_malformed_split_file(tmp_path, content):
    path = tmp_path / "split.tsv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValueError):
        load_split(str(path))


def test_load_profiles_reads_a_file(write_jsonl):
    path = write_jsonl("p.jsonl", [{"user_id": "x", "gold_gender": "m"}])
    parsed = load_profiles(path)
    assert parsed.profiles[0].gold_gender is GenderLabel.MALE
