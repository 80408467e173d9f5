"""
Descriptive statistics of a gender-labeled dataset

Every section is a pandas DataFrame with fixed columns, so an empty dataset
gives empty (or all-zero) tables rather than errors. Profiles without a
gender label are left out of the per-gender sections.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import pandas as pd

from src.dataset.models import GenderLabel, UserProfile
from src.evaluation.metrics import round_percent
from src.lexicon.builder import Lexicon
from src.text.normalize import first_token, is_arabic_script, normalize_text

logger = logging.getLogger(__name__)

DEFAULT_TOP_K = 20
GENDERS = (GenderLabel.MALE.value, GenderLabel.FEMALE.value)

_PROFILE_COLUMNS = [
    "gender", "country", "year", "followers", "friends", "verified", "first_word", "name", "script",
]


@dataclass(frozen=True)
class ProfessionPair:
    masculine: str
    feminine: str
    domain: str = ""


def load_profession_pairs(path: str) -> List[ProfessionPair]:
    """Read masculine<TAB>feminine[<TAB>domain] rows; '#' starts a comment"""
    pairs = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            content = line.rstrip("\n")
            if not content.strip() or content.lstrip().startswith("#"):
                continue
            fields = content.split("\t")
            if len(fields) not in (2, 3):
                raise ValueError(f"{path}:{line_number}: expected 'masculine<TAB>feminine<TAB>domain'")
            pairs.append(ProfessionPair(fields[0].strip(), fields[1].strip(), fields[2].strip() if len(fields) == 3 else ""))
    logger.info(f"Loaded {len(pairs)} profession pair(s) from {path}")
    return pairs


@dataclass(frozen=True, eq=False)
class StatsReport:
    gender_counts: pd.DataFrame
    country_gender: pd.DataFrame
    joining_years: pd.DataFrame
    engagement: pd.DataFrame
    top_first_words: pd.DataFrame
    top_names: pd.DataFrame
    profession_gaps: pd.DataFrame

    def sections(self) -> Dict[str, pd.DataFrame]:
        return {
            "gender_counts": self.gender_counts,
            "country_gender": self.country_gender,
            "joining_years": self.joining_years,
            "engagement": self.engagement,
            "top_first_words": self.top_first_words,
            "top_names": self.top_names,
            "profession_gaps": self.profession_gaps,
        }


def _percent(part: int, whole: int) -> float:
    return round_percent(part / whole) if whole else 0.0


def _profile_frame(profiles: Sequence[UserProfile]) -> pd.DataFrame:
    rows = []
    for p in profiles:
        name = first_token(p.username) or ""
        rows.append({
            "gender": p.gold_gender.value,
            "country": "UNK" if p.gold_country == "?" else p.gold_country,
            "year": p.created_at.year if p.created_at is not None else None,
            "followers": p.followers_count,
            "friends": p.friends_count,
            "verified": bool(p.verified),
            "first_word": first_token(p.description) or "",
            "name": name,
            "script": "arabic" if is_arabic_script(name) else "latin",
        })
    return pd.DataFrame(rows, columns=_PROFILE_COLUMNS)


def _ranked(values: pd.Series, top_k: int, column: str) -> pd.DataFrame:
    """Value counts ranked by count desc then value, truncated to top_k"""
    counts = values[values != ""].value_counts()
    table = pd.DataFrame({column: counts.index.astype(str), "count": counts.values.astype(int)})
    table = table.sort_values(["count", column], ascending=[False, True], kind="mergesort").head(top_k)
    table.insert(0, "rank", range(1, len(table) + 1))
    return table.reset_index(drop=True)


def _gender_counts(frame: pd.DataFrame) -> pd.DataFrame:
    total = len(frame)
    counts = [int((frame["gender"] == g).sum()) for g in GENDERS]
    return pd.DataFrame({
        "gender": list(GENDERS),
        "count": counts,
        "percent": [_percent(c, total) for c in counts],
    })


def _country_gender(frame: pd.DataFrame) -> pd.DataFrame:
    columns = ["country", "male", "female", "total", "male_percent", "female_percent"]
    if frame.empty:
        return pd.DataFrame(columns=columns)
    table = pd.crosstab(frame["country"], frame["gender"]).reindex(columns=list(GENDERS), fill_value=0)
    table = table.rename(columns={"m": "male", "f": "female"}).reset_index()
    table["total"] = table["male"] + table["female"]
    table["male_percent"] = [_percent(m, t) for m, t in zip(table["male"], table["total"])]
    table["female_percent"] = [_percent(f, t) for f, t in zip(table["female"], table["total"])]
    table = table.sort_values(["total", "country"], ascending=[False, True], kind="mergesort")
    return table[columns].reset_index(drop=True)


def _joining_years(frame: pd.DataFrame) -> pd.DataFrame:
    columns = ["year", "male", "female", "total", "cumulative"]
    dated = frame.dropna(subset=["year"])
    if dated.empty:
        return pd.DataFrame(columns=columns)
    table = pd.crosstab(dated["year"].astype(int), dated["gender"]).reindex(columns=list(GENDERS), fill_value=0)
    table = table.rename(columns={"m": "male", "f": "female"}).sort_index().reset_index()
    table["total"] = table["male"] + table["female"]
    table["cumulative"] = table["total"].cumsum()
    return table[columns]


def _engagement(frame: pd.DataFrame) -> pd.DataFrame:
    rows = []
    for g in GENDERS:
        part = frame[frame["gender"] == g]
        n = len(part)
        verified = int(part["verified"].sum()) if n else 0
        rows.append({
            "gender": g,
            "accounts": n,
            "mean_followers": round(float(part["followers"].mean()), 2) if n else 0.0,
            "mean_friends": round(float(part["friends"].mean()), 2) if n else 0.0,
            "verified": verified,
            "verified_percent": _percent(verified, n),
        })
    return pd.DataFrame(rows)


def _top_first_words(frame: pd.DataFrame, lexicon: Optional[Lexicon], top_k: int) -> pd.DataFrame:
    tables = []
    for g in GENDERS:
        table = _ranked(frame.loc[frame["gender"] == g, "first_word"], top_k, "word")
        table.insert(0, "gender", g)
        tables.append(table)
    table = pd.concat(tables, ignore_index=True)

    def lexicon_gender(word: str) -> str:
        entry = lexicon.get(word) if lexicon is not None else None
        return entry.gender.value if entry is not None else ""

    table["lexicon_gender"] = [lexicon_gender(w) for w in table["word"]]
    return table[["gender", "rank", "word", "count", "lexicon_gender"]]


def _top_names(frame: pd.DataFrame, top_k: int) -> pd.DataFrame:
    tables = []
    for g in GENDERS:
        for script in ("arabic", "latin"):
            part = frame[(frame["gender"] == g) & (frame["script"] == script)]
            table = _ranked(part["name"], top_k, "name")
            table.insert(0, "script", script)
            table.insert(0, "gender", g)
            tables.append(table)
    return pd.concat(tables, ignore_index=True)[["gender", "script", "rank", "name", "count"]]


def _profession_gaps(frame: pd.DataFrame, pairs: Sequence[ProfessionPair]) -> pd.DataFrame:
    columns = [
        "masculine", "feminine", "domain", "male_count", "female_count", "male_percent", "female_percent",
    ]
    counts = frame["first_word"].value_counts()
    rows = []
    for pair in pairs:
        male = int(counts.get(normalize_text(pair.masculine), 0))
        female = int(counts.get(normalize_text(pair.feminine), 0))
        rows.append({
            "masculine": pair.masculine,
            "feminine": pair.feminine,
            "domain": pair.domain,
            "male_count": male,
            "female_count": female,
            "male_percent": _percent(male, male + female),
            "female_percent": _percent(female, male + female),
        })
    return pd.DataFrame(rows, columns=columns)


def stats_report(
    profiles: Sequence[UserProfile],
    lexicon: Optional[Lexicon] = None,
    pairs: Sequence[ProfessionPair] = (),
    top_k: int = DEFAULT_TOP_K
) -> StatsReport:
    """
    Build every report section

    Args:
        profiles: Profiles carrying a gold or predicted gender
        lexicon: Used to annotate first words with their lexicon gender
        pairs: (masculine, feminine) description words for the gap table;
            counts are first-word occurrences over all profiles
        top_k: Rows per gender in the top-word and top-name tables
    """
    all_profiles = _profile_frame(profiles)
    labeled = all_profiles[all_profiles["gender"].isin(GENDERS)]
    if len(labeled) < len(all_profiles):
        logger.info(f"{len(all_profiles) - len(labeled)} profile(s) without gender left out of per-gender tables")

    report = StatsReport(
        gender_counts=_gender_counts(labeled),
        country_gender=_country_gender(labeled),
        joining_years=_joining_years(labeled),
        engagement=_engagement(labeled),
        top_first_words=_top_first_words(labeled, lexicon, top_k),
        top_names=_top_names(labeled, top_k),
        profession_gaps=_profession_gaps(all_profiles, pairs),
    )
    logger.info(f"Computed statistics over {len(labeled)} labeled profile(s)")
    return report
