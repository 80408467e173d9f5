"""Gender-marker lexicon: construction, storage and description matching"""

from src.lexicon.tables import ExceptionTables, LexiconError, load_exception_tables
from src.lexicon.heuristics import WordGender, heuristic_gender, counterparts
from src.lexicon.builder import (
    DEFAULT_MIN_COUNT,
    Candidate,
    EntrySource,
    ExclusionList,
    Lexicon,
    LexiconEntry,
    build_lexicon,
    collect_candidates,
)
from src.lexicon.store import (
    save_lexicon,
    load_lexicon,
    save_exclusion_list,
    load_exclusion_list,
    save_candidates,
)
from src.lexicon.matcher import match_description, label_profiles

__all__ = [
    "ExceptionTables",
    "LexiconError",
    "load_exception_tables",
    "WordGender",
    "heuristic_gender",
    "counterparts",
    "DEFAULT_MIN_COUNT",
    "Candidate",
    "EntrySource",
    "ExclusionList",
    "Lexicon",
    "LexiconEntry",
    "build_lexicon",
    "collect_candidates",
    "save_lexicon",
    "load_lexicon",
    "save_exclusion_list",
    "load_exclusion_list",
    "save_candidates",
    "match_description",
    "label_profiles",
]
