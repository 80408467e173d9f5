"""
Valence scores: how strongly a token's usage rate leans to one category

For a token x and categories L_1..L_k with token totals T_i:

    rate_i  = C(x | L_i) / T_i
    score_i = 2 * rate_i / sum_l rate_l - 1

so every score lies in [-1, +1] whatever the corpus sizes, and with two
categories (score_1 + 1)/2 + (score_2 + 1)/2 = 1.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Union

from src.dataset.models import GenderLabel, UserProfile
from src.features.fields import preprocess_tweet
from src.text.normalize import normalize_text

logger = logging.getLogger(__name__)

DEFAULT_MIN_COUNT = 5
DEFAULT_THRESHOLD = 0.5


@dataclass(frozen=True)
class ValenceScore:
    token: str
    scores: Dict[str, float]
    counts: Dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def tweet_tokens(text: str) -> List[str]:
    """Whitespace tokens of a text after URL/mention placeholders and normalization"""
    return normalize_text(preprocess_tweet(text)).split()


def valence(
    corpora: Mapping[str, Union[Counter, Iterable[str]]],
    min_count: int = DEFAULT_MIN_COUNT
) -> List[ValenceScore]:
    """
    Valence of every token whose total count reaches min_count

    Args:
        corpora: category -> token multiset (a Counter or any iterable of tokens)
        min_count: Minimum count of a token over all categories

    Returns:
        Scores sorted by token

    Raises:
        ValueError: With fewer than two categories or an empty category
    """
    if len(corpora) < 2:
        raise ValueError(f"Valence needs at least two categories, got {len(corpora)}")

    counters = {
        category: tokens if isinstance(tokens, Counter) else Counter(tokens)
        for category, tokens in corpora.items()
    }
    totals = {category: sum(counter.values()) for category, counter in counters.items()}
    empty = sorted(category for category, total in totals.items() if total <= 0)
    if empty:
        raise ValueError(f"Categories without tokens: {', '.join(empty)}")

    vocabulary = set()
    for counter in counters.values():
        vocabulary.update(counter)

    results = []
    for token in sorted(vocabulary):
        counts = {category: int(counters[category][token]) for category in counters}
        if sum(counts.values()) < min_count:
            continue
        rates = {category: counts[category] / totals[category] for category in counters}
        rate_sum = sum(rates.values())
        scores = {category: 2.0 * rate / rate_sum - 1.0 for category, rate in rates.items()}
        results.append(ValenceScore(token=token, scores=scores, counts=counts))

    logger.info(f"Scored {len(results)} of {len(vocabulary)} token(s) (min_count={min_count})")
    return results


def top_valence_words(
    scores: Sequence[ValenceScore],
    category: str,
    threshold: float = DEFAULT_THRESHOLD,
    k: Optional[int] = None
) -> List[ValenceScore]:
    """
    Tokens scoring above threshold for a category

    Ranked by score desc, then count in the category desc, then token.
    """
    kept = [s for s in scores if s.scores.get(category, -1.0) > threshold]
    kept.sort(key=lambda s: (-s.scores[category], -s.counts.get(category, 0), s.token))
    return kept if k is None else kept[:k]


def gender_corpora(profiles: Sequence[UserProfile], source: str = "tweets") -> Dict[str, Counter]:
    """
    Token multisets per gender ("m", "f") from tweets or descriptions

    Profiles without a gold gender are skipped.
    """
    if source not in ("tweets", "description"):
        raise ValueError(f"Unknown valence source '{source}' (expected tweets or description)")

    corpora = {GenderLabel.MALE.value: Counter(), GenderLabel.FEMALE.value: Counter()}
    for profile in profiles:
        if not profile.has_gold_gender:
            continue
        texts = profile.tweets if source == "tweets" else (profile.description,)
        counter = corpora[profile.gold_gender.value]
        for text in texts:
            counter.update(tweet_tokens(text))
    return corpora
