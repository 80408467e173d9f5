"""
Offline gazetteer: free-text user location -> country code

Aliases (city names, country names, demonyms, Arabic and Latin spellings)
are normalized at load time, so "جدة", "جده" and "JEDDAH" hit the same key.
Lookup tries the whole location first, then every alias that occurs on
token boundaries; the longest alias wins and ties go to the earliest one.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

import regex

from src.geo.countries import ISO_ALPHA2, UNKNOWN_COUNTRY, to_country_category
from src.text.normalize import normalize_text

logger = logging.getLogger(__name__)

_TOKEN = regex.compile(r"[\p{L}\p{N}]+")


class GazetteerError(ValueError):
    """Invalid gazetteer file"""


@dataclass(frozen=True)
class Gazetteer:
    """Normalized alias -> ISO alpha-2 code"""
    aliases: Mapping[str, str]
    max_alias_tokens: int = 1

    def __len__(self) -> int:
        return len(self.aliases)

    def lookup(self, alias: str) -> Optional[str]:
        return self.aliases.get(alias_key(alias))


def alias_key(text: str) -> str:
    """Normalized, token-joined form used as gazetteer key"""
    return " ".join(_TOKEN.findall(normalize_text(text)))


def build_gazetteer(pairs: List[Tuple[str, str]]) -> Gazetteer:
    """
    Build a gazetteer from (alias, code) pairs

    Raises:
        GazetteerError: On an empty alias, a code that is not ISO alpha-2,
            or aliases mapped to more than one code (all listed)
    """
    aliases: Dict[str, str] = {}
    conflicts: Dict[str, set] = {}
    for alias, code in pairs:
        key = alias_key(alias)
        code = code.strip().upper()
        if not key:
            raise GazetteerError(f"Alias '{alias}' is empty after normalization")
        if code not in ISO_ALPHA2:
            raise GazetteerError(f"Unknown country code '{code}' for alias '{alias}'")
        if key in aliases and aliases[key] != code:
            conflicts.setdefault(key, {aliases[key]}).add(code)
            continue
        aliases[key] = code

    if conflicts:
        listing = ", ".join(f"'{k}' -> {sorted(v)}" for k, v in sorted(conflicts.items()))
        raise GazetteerError(f"Conflicting gazetteer aliases: {listing}")

    max_tokens = max((len(k.split(" ")) for k in aliases), default=1)
    return Gazetteer(aliases=aliases, max_alias_tokens=max_tokens)


def load_gazetteer(path: str) -> Gazetteer:
    """
    Load a gazetteer TSV of alias<TAB>code rows ('#' starts a comment)

    Raises:
        GazetteerError: On malformed rows or invalid content
    """
    pairs: List[Tuple[str, str]] = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            content = line.rstrip("\n")
            if not content.strip() or content.lstrip().startswith("#"):
                continue
            fields = content.split("\t")
            if len(fields) != 2:
                raise GazetteerError(f"{path}:{line_number}: expected 'alias<TAB>code'")
            pairs.append((fields[0], fields[1]))

    gazetteer = build_gazetteer(pairs)
    logger.info(f"Loaded gazetteer with {len(gazetteer)} aliases from {path}")
    return gazetteer


def map_location(location_raw: str, gazetteer: Gazetteer) -> str:
    """
    Map a free-text location to an Arab country code, "OTH" or "UNK"

    Args:
        location_raw: User-entered location (may be empty)
        gazetteer: Loaded gazetteer

    Returns:
        One of the 22 Arab League codes, "OTH" for a match outside the
        Arab world, "UNK" for empty input or no match
    """
    if not location_raw or not location_raw.strip():
        return UNKNOWN_COUNTRY

    tokens = _TOKEN.findall(normalize_text(location_raw))
    if not tokens:
        return UNKNOWN_COUNTRY

    code = gazetteer.aliases.get(" ".join(tokens))
    if code is not None:
        return to_country_category(code)

    best_length, best_code = 0, None
    for start in range(len(tokens)):
        for end in range(start + 1, min(len(tokens), start + gazetteer.max_alias_tokens) + 1):
            key = " ".join(tokens[start:end])
            code = gazetteer.aliases.get(key)
            # strict '>' keeps the earliest of equally long aliases
            if code is not None and len(key) > best_length:
                best_length, best_code = len(key), code

    if best_code is None:
        return UNKNOWN_COUNTRY
    return to_country_category(best_code)


def country_distribution(locations: List[str], gazetteer: Gazetteer) -> Dict[str, int]:
    """
    Count mapped country codes over a list of raw locations

    Returns:
        code -> count, ordered by count desc then code
    """
    counts: Dict[str, int] = {}
    for location in locations:
        code = map_location(location, gazetteer)
        counts[code] = counts.get(code, 0) + 1
    return dict(sorted(counts.items(), key=lambda item: (-item[1], item[0])))
