"""
Arabic text normalization.

normalize_text makes lexicon lookups and character n-grams insensitive to
orthographic noise in profile text:

    1. compatibility decomposition (NFKC) of decorated and presentation forms
    2. removal of diacritics, Quranic marks and tatweel
    3. alif variants -> bare alif, taa marbouta -> haa, alif maqsoura -> yaa
    4. lower-casing of non-Arabic text
    5. whitespace collapsed to single spaces, trimmed

Steps are re-applied until the text stops changing, so the result is a
fixed point (normalize_text(normalize_text(x)) == normalize_text(x)).
"""
import unicodedata
from typing import Optional

import regex


def _char_class(*ranges) -> str:
    parts = []
    for lo, hi in ranges:
        if lo == hi:
            parts.append(regex.escape(chr(lo)))
        else:
            parts.append(f"{regex.escape(chr(lo))}-{regex.escape(chr(hi))}")
    return "[" + "".join(parts) + "]"


# Harakat (fathatan..sukun and the extended marks up to U+065F), superscript
# alef, Quranic annotation signs
_DIACRITICS = regex.compile(_char_class(
    (0x0610, 0x061A),
    (0x064B, 0x065F),
    (0x0670, 0x0670),
    (0x06D6, 0x06DC),
    (0x06DF, 0x06E8),
    (0x06EA, 0x06ED),
))
_TATWEEL = chr(0x0640)

# Presentation-form code points left over after NFKC have no base-letter
# decomposition (ornate parentheses, BOM, ...): drop them.
_PRESENTATION_FORMS = regex.compile(_char_class((0xFB50, 0xFDFF), (0xFE70, 0xFEFF)))

_LETTER_FOLDING = {
    0x0622: 0x0627,  # alef with madda
    0x0623: 0x0627,  # alef with hamza above
    0x0625: 0x0627,  # alef with hamza below
    0x0671: 0x0627,  # alef wasla
    0x0629: 0x0647,  # taa marbouta -> haa
    0x0649: 0x064A,  # alef maqsoura -> yaa
}

_WHITESPACE = regex.compile(r"\s+")
_LETTER_RUN = regex.compile(r"\p{L}+")
_ARABIC_LETTER = regex.compile(r"\p{Script=Arabic}")

_MAX_PASSES = 8


def _strip_once(text: str) -> str:
    s = unicodedata.normalize("NFKC", text)
    s = s.replace(_TATWEEL, "")
    s = _DIACRITICS.sub("", s)
    s = _PRESENTATION_FORMS.sub("", s)
    s = s.lower()
    s = _WHITESPACE.sub(" ", s)
    return s.strip()


def _normalize_once(text: str) -> str:
    return _strip_once(text).translate(_LETTER_FOLDING)


def _fixed_point(step, text: str) -> str:
    current = text
    for _ in range(_MAX_PASSES):
        updated = step(current)
        if updated == current:
            return updated
        current = updated
    return current


def strip_decoration(text: str) -> str:
    """
    Normalize text without folding letters.

    Same as normalize_text except that alif variants, taa marbouta and
    alif maqsoura are kept, so gender markers stay visible.
    """
    if not text:
        return ""
    return _fixed_point(_strip_once, text)


def normalize_text(text: str) -> str:
    """
    Canonicalize text for matching and featurization.

    Args:
        text: Any Unicode string

    Returns:
        Normalized text (see module docstring for the rules)
    """
    if not text:
        return ""
    return _fixed_point(_normalize_once, text)


def first_token(description: str) -> Optional[str]:
    """
    Return the first run of letters of the normalized description.

    Leading punctuation, emoji and digits are skipped; hyphens and
    underscores separate tokens. Returns None when there is no letter.
    """
    match = _LETTER_RUN.search(normalize_text(description))
    return match.group(0) if match else None


def first_surface_token(description: str) -> Optional[str]:
    """First letter run of the description before letter folding (keeps taa marbouta)."""
    match = _LETTER_RUN.search(strip_decoration(description))
    return match.group(0) if match else None


def is_arabic_script(text: str) -> bool:
    """True when the text contains at least one Arabic-script letter."""
    return bool(_ARABIC_LETTER.search(text))
