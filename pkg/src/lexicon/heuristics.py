"""
Gender marker rules: the taa marbouta suffix heuristic and counterpart generation
"""
from enum import Enum
from typing import List

from src.lexicon.tables import ExceptionTables, LexiconError
from src.text.normalize import normalize_text, strip_decoration

TAA_MARBOUTA = "ة"
HAA = "ه"
YAA = "ي"
ALIF_MAQSOURA = "ى"
KASRATAN = chr(0x064D)


class WordGender(str, Enum):
    MASCULINE = "masculine"
    FEMININE = "feminine"
    AMBIGUOUS = "ambiguous"

    def opposite(self) -> "WordGender":
        if self is WordGender.AMBIGUOUS:
            raise LexiconError("Ambiguous words have no opposite gender")
        return WordGender.FEMININE if self is WordGender.MASCULINE else WordGender.MASCULINE


def heuristic_gender(word: str, tables: ExceptionTables) -> WordGender:
    """
    Gender of a single description word

    The exception tables are consulted on the normalized form; the suffix
    rule looks at the surface form, where taa marbouta is still distinct
    from haa.

    Args:
        word: Surface token (diacritics allowed)
        tables: Exception tables

    Returns:
        FEMININE for feminine-without-marker words, AMBIGUOUS for
        dual-gender and organization words, otherwise FEMININE when the
        surface ends in taa marbouta and MASCULINE when it does not

    Raises:
        LexiconError: If the word is empty
    """
    surface = strip_decoration(word)
    normalized = normalize_text(word)
    if not normalized:
        raise LexiconError("Cannot assign a gender to an empty word")

    if normalized in tables.feminine_no_marker:
        return WordGender.FEMININE
    if normalized in tables.excluded_forms:
        return WordGender.AMBIGUOUS
    if surface.endswith(TAA_MARBOUTA):
        return WordGender.FEMININE
    return WordGender.MASCULINE


def counterparts(word: str, gender: WordGender, tables: ExceptionTables) -> List[str]:
    """
    Opposite-gender surface forms of a word, with common spelling variants

    Feminine forms are the masculine form plus taa marbouta (also written
    with a plain haa); masculine forms drop the suffix. Defective nouns
    ending in yaa also get the alif maqsoura and tanween spellings.
    Masculine-only and feminine-without-marker words have no counterpart
    unless listed in the irregular pair table.
    """
    surface = strip_decoration(word)
    normalized = normalize_text(word)

    if gender is WordGender.AMBIGUOUS or not surface:
        return []
    if gender is WordGender.MASCULINE and normalized in tables.masculine_to_feminine:
        return [tables.masculine_to_feminine[normalized]]
    if gender is WordGender.FEMININE and normalized in tables.feminine_to_masculine:
        return [tables.feminine_to_masculine[normalized]]
    if normalized in tables.masculine_only or normalized in tables.feminine_no_marker:
        return []

    if gender is WordGender.FEMININE:
        if not surface.endswith(TAA_MARBOUTA) or len(surface) < 2:
            return []
        stem = surface[:-1]
        if stem.endswith(YAA) and len(stem) > 1:
            return [stem, stem[:-1] + ALIF_MAQSOURA, stem[:-1] + KASRATAN]
        return [stem]

    if surface.endswith(ALIF_MAQSOURA):
        base = surface[:-1] + YAA
    else:
        base = surface
    return [base + TAA_MARBOUTA, base + HAA]
