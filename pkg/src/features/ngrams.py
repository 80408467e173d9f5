"""
Character n-gram extraction
"""
from typing import List, Tuple

DEFAULT_NGRAM_RANGE: Tuple[int, int] = (2, 5)


def char_ngrams(text: str, n_range: Tuple[int, int] = DEFAULT_NGRAM_RANGE) -> List[str]:
    """
    All contiguous substrings of length low..high, internal spaces included

    A non-empty string shorter than low yields itself as a single gram.

    Args:
        text: Normalized text
        n_range: (low, high) with 1 <= low <= high

    Returns:
        Grams as a list (a multiset: repeats are kept), ordered by length
        then position

    Raises:
        ValueError: If the range is invalid
    """
    low, high = n_range
    if low < 1 or low > high:
        raise ValueError(f"Invalid n-gram range {n_range}: need 1 <= low <= high")

    if not text:
        return []
    if len(text) < low:
        return [text]

    grams = []
    for n in range(low, min(high, len(text)) + 1):
        grams.extend(text[i:i + n] for i in range(len(text) - n + 1))
    return grams
