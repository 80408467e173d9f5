"""
Editable exception tables consulted by the gender heuristic

All tables are plain text files in one directory:

    feminine_no_marker.txt  feminine words without the taa marbouta suffix
    masculine_only.txt      masculine words with no feminine counterpart
    ambiguous.txt           dual-gender titles and ambiguous forms
    organizations.txt       organization words (never a person's self-description)
    irregular_pairs.tsv     masculine<TAB>feminine pairs not formed by the suffix rule

One entry per line; '#' starts a comment. Lookups use normalized forms.
"""
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List

from src.text.normalize import normalize_text, strip_decoration

logger = logging.getLogger(__name__)

FEMININE_NO_MARKER_FILE = "feminine_no_marker.txt"
MASCULINE_ONLY_FILE = "masculine_only.txt"
AMBIGUOUS_FILE = "ambiguous.txt"
ORGANIZATIONS_FILE = "organizations.txt"
IRREGULAR_PAIRS_FILE = "irregular_pairs.tsv"


class LexiconError(ValueError):
    """Invalid lexicon input or lexicon file"""


@dataclass(frozen=True)
class ExceptionTables:
    """Normalized exception tables"""
    feminine_no_marker: FrozenSet[str] = frozenset()
    masculine_only: FrozenSet[str] = frozenset()
    ambiguous: FrozenSet[str] = frozenset()
    organizations: FrozenSet[str] = frozenset()
    # normalized form -> surface of the opposite-gender word
    masculine_to_feminine: Dict[str, str] = field(default_factory=dict)
    feminine_to_masculine: Dict[str, str] = field(default_factory=dict)

    @property
    def excluded_forms(self) -> FrozenSet[str]:
        """Forms that never yield a gender label"""
        return self.ambiguous | self.organizations


def _read_entries(path: str) -> List[str]:
    if not os.path.exists(path):
        logger.warning(f"Exception table not found, treating as empty: {path}")
        return []
    entries = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            entry = line.split("#", 1)[0].strip()
            if entry:
                entries.append(entry)
    return entries


def _normalized_set(path: str) -> FrozenSet[str]:
    return frozenset(normalize_text(word) for word in _read_entries(path))


def load_exception_tables(directory: str) -> ExceptionTables:
    """
    Load all exception tables from a directory

    Raises:
        LexiconError: If a line of the irregular pair table is malformed
    """
    masculine_to_feminine: Dict[str, str] = {}
    feminine_to_masculine: Dict[str, str] = {}
    for line in _read_entries(os.path.join(directory, IRREGULAR_PAIRS_FILE)):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"Irregular pair must be 'masculine<TAB>feminine', got '{line}'")
        masculine, feminine = strip_decoration(parts[0]), strip_decoration(parts[1])
        masculine_to_feminine[normalize_text(masculine)] = feminine
        feminine_to_masculine[normalize_text(feminine)] = masculine

    tables = ExceptionTables(
        feminine_no_marker=_normalized_set(os.path.join(directory, FEMININE_NO_MARKER_FILE)),
        masculine_only=_normalized_set(os.path.join(directory, MASCULINE_ONLY_FILE)),
        ambiguous=_normalized_set(os.path.join(directory, AMBIGUOUS_FILE)),
        organizations=_normalized_set(os.path.join(directory, ORGANIZATIONS_FILE)),
        masculine_to_feminine=masculine_to_feminine,
        feminine_to_masculine=feminine_to_masculine,
    )
    logger.info(
        f"Loaded exception tables from {directory}: "
        f"{len(tables.feminine_no_marker)} feminine-no-marker, "
        f"{len(tables.masculine_only)} masculine-only, "
        f"{len(tables.excluded_forms)} excluded, "
        f"{len(masculine_to_feminine)} irregular pairs"
    )
    return tables
