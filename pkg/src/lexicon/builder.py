"""
Gender-marker lexicon construction from profile descriptions

The first word of a self-description is a strong gender signal. Building
the lexicon:

    1. collect the first word of every non-empty description
    2. count normalized forms and drop those seen fewer than min_count times
    3. tag each survivor with heuristic_gender (ambiguous words are excluded)
    4. add the opposite-gender counterpart of every tagged word
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from src.dataset.models import UserProfile
from src.lexicon.heuristics import HAA, TAA_MARBOUTA, WordGender, counterparts, heuristic_gender
from src.lexicon.tables import ExceptionTables, LexiconError
from src.text.normalize import first_surface_token, normalize_text

logger = logging.getLogger(__name__)

DEFAULT_MIN_COUNT = 2


class EntrySource(str, Enum):
    HEURISTIC = "heuristic"
    EXCEPTION_LIST = "exception_list"
    COUNTERPART = "counterpart"


@dataclass(frozen=True)
class LexiconEntry:
    """A normalized description word and its gender"""
    normalized_form: str
    surface_variants: Tuple[str, ...]
    gender: WordGender
    source: EntrySource
    corpus_count: int = 0

    @property
    def canonical_surface(self) -> str:
        return self.surface_variants[0]


@dataclass(frozen=True)
class ExclusionList:
    """Normalized tokens that never yield a gender label"""
    tokens: FrozenSet[str] = frozenset()

    def __contains__(self, token: object) -> bool:
        return token in self.tokens

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Candidate:
    """A frequent first word, before exclusion and counterpart generation"""
    normalized_form: str
    count: int
    surfaces: Tuple[str, ...]
    gender: WordGender


class Lexicon:
    """Read-only lookup table over lexicon entries, keyed by normalized form"""

    def __init__(self, entries: Iterable[LexiconEntry]):
        self._entries: Dict[str, LexiconEntry] = {}
        for entry in entries:
            if entry.gender is WordGender.AMBIGUOUS:
                raise LexiconError(f"Ambiguous word '{entry.normalized_form}' cannot be a lexicon entry")
            if entry.normalized_form in self._entries:
                raise LexiconError(f"Duplicate lexicon entry '{entry.normalized_form}'")
            self._entries[entry.normalized_form] = entry

    def get(self, normalized_form: str) -> Optional[LexiconEntry]:
        return self._entries.get(normalized_form)

    def __contains__(self, normalized_form: object) -> bool:
        return normalized_form in self._entries

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def entries(self) -> List[LexiconEntry]:
        return list(self._entries.values())


def _canonical_surface(surfaces: Counter) -> str:
    """Most frequent spelling, preferring one that shows the taa marbouta"""
    ranked = sorted(surfaces.items(), key=lambda item: (-item[1], item[0]))
    for surface, _ in ranked:
        if surface.endswith(TAA_MARBOUTA):
            return surface
    return ranked[0][0]


def _haa_spelled(candidate: Candidate) -> bool:
    """Heuristic-masculine word ending in haa, often a feminine word typed without the taa marbouta"""
    return candidate.gender is WordGender.MASCULINE and candidate.surfaces[0].endswith(HAA)


def _feminine_spelled_with_haa(existing: list, target_gender: WordGender, surface: str) -> bool:
    surfaces, gender, source, _ = existing
    return (
        target_gender is WordGender.FEMININE
        and gender is WordGender.MASCULINE
        and source is EntrySource.HEURISTIC
        and surface.endswith(TAA_MARBOUTA)
        and surfaces[0].endswith(HAA)
    )


def collect_candidates(
    profiles: Iterable[UserProfile],
    min_count: int,
    tables: ExceptionTables
) -> List[Candidate]:
    """
    First description words seen at least min_count times, tagged by the heuristic

    Sorted by (count desc, normalized form asc). This is the intermediate
    list exported for manual curation.
    """
    counts: Counter = Counter()
    spellings: Dict[str, Counter] = defaultdict(Counter)

    for profile in profiles:
        if not profile.description.strip():
            continue
        surface = first_surface_token(profile.description)
        if surface is None:
            continue
        normalized = normalize_text(surface)
        counts[normalized] += 1
        spellings[normalized][surface] += 1

    candidates = []
    for normalized, count in sorted(counts.items(), key=lambda item: (-item[1], item[0])):
        if count < min_count:
            continue
        canonical = _canonical_surface(spellings[normalized])
        others = sorted(
            (s for s in spellings[normalized] if s != canonical),
            key=lambda s: (-spellings[normalized][s], s),
        )
        candidates.append(Candidate(
            normalized_form=normalized,
            count=count,
            surfaces=(canonical, *others),
            gender=heuristic_gender(canonical, tables),
        ))

    logger.info(f"{len(counts)} unique first word(s), {len(candidates)} seen at least {min_count} times")
    return candidates


def build_lexicon(
    profiles: Iterable[UserProfile],
    min_count: int,
    tables: ExceptionTables
) -> Tuple[List[LexiconEntry], ExclusionList]:
    """
    Build the gender-marker lexicon from profile descriptions

    Args:
        profiles: Profiles whose descriptions are scanned
        min_count: Minimum occurrences of a first word (at least 2)
        tables: Exception tables

    Returns:
        Tuple of (entries sorted by count desc then form, exclusion list)

    Raises:
        LexiconError: If min_count is below 2
    """
    if min_count < 2:
        raise LexiconError(f"min_count must be at least 2, got {min_count}")

    candidates = collect_candidates(profiles, min_count, tables)
    exclusions = set(tables.excluded_forms)

    # normalized form -> [surfaces, gender, source, count]
    building: Dict[str, list] = {}
    for candidate in candidates:
        if candidate.gender is WordGender.AMBIGUOUS:
            exclusions.add(candidate.normalized_form)
            continue
        listed = (
            candidate.normalized_form in tables.feminine_no_marker
            or candidate.normalized_form in tables.masculine_only
            or candidate.normalized_form in tables.masculine_to_feminine
            or candidate.normalized_form in tables.feminine_to_masculine
        )
        source = EntrySource.EXCEPTION_LIST if listed else EntrySource.HEURISTIC
        building[candidate.normalized_form] = [
            list(candidate.surfaces), candidate.gender, source, candidate.count
        ]

    for candidate in candidates:
        if candidate.normalized_form not in building:
            continue
        if _haa_spelled(candidate):
            continue
        target_gender = candidate.gender.opposite()
        for surface in counterparts(candidate.surfaces[0], candidate.gender, tables):
            normalized = normalize_text(surface)
            if not normalized or normalized in exclusions:
                continue
            existing = building.get(normalized)
            if existing is None:
                building[normalized] = [[surface], target_gender, EntrySource.COUNTERPART, 0]
            elif existing[1] is target_gender:
                if surface not in existing[0]:
                    existing[0].append(surface)
            elif _feminine_spelled_with_haa(existing, target_gender, surface):
                surfaces = [surface] + [s for s in existing[0] if s != surface]
                building[normalized] = [surfaces, target_gender, EntrySource.COUNTERPART, existing[3]]
            else:
                logger.warning(
                    f"Counterpart '{surface}' of '{candidate.normalized_form}' conflicts "
                    f"with a {existing[1].value} entry; excluding '{normalized}'"
                )
                del building[normalized]
                exclusions.add(normalized)

    entries = [
        LexiconEntry(
            normalized_form=normalized,
            surface_variants=tuple(surfaces),
            gender=gender,
            source=source,
            corpus_count=count,
        )
        for normalized, (surfaces, gender, source, count) in building.items()
    ]
    entries.sort(key=lambda e: (-e.corpus_count, e.normalized_form))

    n_feminine = sum(1 for e in entries if e.gender is WordGender.FEMININE)
    logger.info(
        f"Built lexicon with {len(entries)} entries "
        f"({len(entries) - n_feminine} masculine, {n_feminine} feminine), "
        f"{len(exclusions)} excluded form(s)"
    )
    return entries, ExclusionList(frozenset(exclusions))
