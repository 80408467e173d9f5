"""
Description matching and dataset labeling
"""
import logging
from typing import List, Optional

from src.dataset.models import GenderLabel, UserProfile
from src.geo.countries import UNKNOWN_COUNTRY
from src.geo.gazetteer import Gazetteer, map_location
from src.geo.geocoder import LocationResolver
from src.lexicon.builder import ExclusionList, Lexicon
from src.lexicon.heuristics import WordGender
from src.text.normalize import first_token

logger = logging.getLogger(__name__)


def match_description(description: str, lexicon: Lexicon, exclusions: ExclusionList) -> GenderLabel:
    """
    Gender label implied by the first word of a profile description

    Returns:
        MALE or FEMALE when the first word is a lexicon entry, UNKNOWN when
        the description has no word, the word is excluded, or it is not in
        the lexicon
    """
    token = first_token(description)
    if token is None or token in exclusions:
        return GenderLabel.UNKNOWN

    entry = lexicon.get(token)
    if entry is None:
        return GenderLabel.UNKNOWN
    return GenderLabel.MALE if entry.gender is WordGender.MASCULINE else GenderLabel.FEMALE


def label_profiles(
    profiles: List[UserProfile],
    lexicon: Lexicon,
    exclusions: ExclusionList,
    gazetteer: Optional[Gazetteer] = None,
    keep_unmatched: bool = False,
    resolver: Optional[LocationResolver] = None
) -> List[UserProfile]:
    """
    Annotate profiles with gender from their description and country from their location

    Args:
        profiles: Profiles to label
        lexicon: Gender-marker lexicon
        exclusions: Excluded first words
        gazetteer: When given, gold_country is set from location_raw
        keep_unmatched: Keep profiles whose description yields no gender
        resolver: Used instead of the gazetteer when given (gazetteer plus
            geocoder fallback)

    Returns:
        Labeled profiles in input order
    """
    labeled = []
    unmatched = 0
    for profile in profiles:
        gender = match_description(profile.description, lexicon, exclusions)
        if gender is GenderLabel.UNKNOWN:
            unmatched += 1
            if not keep_unmatched:
                continue

        update = {"gold_gender": gender}
        country = None
        if resolver is not None:
            country = resolver.resolve(profile.location_raw)
        elif gazetteer is not None:
            country = map_location(profile.location_raw, gazetteer)
        if country is not None:
            update["gold_country"] = "?" if country == UNKNOWN_COUNTRY else country
        labeled.append(profile.model_copy(update=update))

    logger.info(
        f"Labeled {len(profiles) - unmatched} of {len(profiles)} profile(s) from descriptions"
        + ("" if keep_unmatched else f"; dropped {unmatched} unmatched")
    )
    return labeled
