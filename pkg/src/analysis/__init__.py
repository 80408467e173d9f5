"""Corpus analyses: valence scores and descriptive statistics"""

from src.analysis.valence import (
    ValenceScore,
    gender_corpora,
    top_valence_words,
    tweet_tokens,
    valence,
)
from src.analysis.stats import (
    ProfessionPair,
    StatsReport,
    load_profession_pairs,
    stats_report,
)
from src.analysis.reports import valence_table, write_stats_report, write_valence_report

__all__ = [
    "ValenceScore",
    "gender_corpora",
    "top_valence_words",
    "tweet_tokens",
    "valence",
    "ProfessionPair",
    "StatsReport",
    "load_profession_pairs",
    "stats_report",
    "valence_table",
    "write_stats_report",
    "write_valence_report",
]
