"""
Profile fields used as classifier input
"""
from enum import Enum

import regex

from src.dataset.models import UserProfile

MAX_AGGREGATED_TWEETS = 200

_URL = regex.compile(r"(?:https?://|www\.)\S+", regex.IGNORECASE)
_MENTION = regex.compile(r"@\w+")


class FieldTag(str, Enum):
    """Text field a vocabulary is fitted on"""
    USERNAMES = "usernames"
    DESCRIPTION = "description"
    TWEETS = "tweets"    # all tweets of a user, aggregated
    TWEET = "tweet"      # first tweet only


class FeatureSet(str, Enum):
    """Classifier input: one field, or the three main fields combined"""
    USERNAMES = "usernames"
    DESCRIPTION = "description"
    TWEETS = "tweets"
    TWEET = "tweet"
    ALL = "all"

    @property
    def fields(self):
        if self is FeatureSet.ALL:
            return (FieldTag.USERNAMES, FieldTag.DESCRIPTION, FieldTag.TWEETS)
        return (FieldTag(self.value),)

    @property
    def label(self) -> str:
        """Row label used in evaluation reports"""
        return "All" if self is FeatureSet.ALL else self.value.capitalize()


# Usernames are short and the corpora small: keep every gram.
DEFAULT_MIN_DF = {
    FieldTag.USERNAMES: 1,
    FieldTag.DESCRIPTION: 2,
    FieldTag.TWEETS: 2,
    FieldTag.TWEET: 2,
}


def preprocess_tweet(text: str) -> str:
    """Replace URLs with "URL" and user mentions with "@USER"."""
    return _MENTION.sub("@USER", _URL.sub("URL", text))


def prepare_text(text: str, field: FieldTag) -> str:
    """Field-specific preprocessing of one raw text"""
    if field in (FieldTag.TWEETS, FieldTag.TWEET):
        return preprocess_tweet(text)
    return text


def field_text(profile: UserProfile, field: FieldTag) -> str:
    """
    Raw text of one profile field

    usernames: display name, screen name when the display name is empty
    description: profile description
    tweets: up to 200 preprocessed tweets joined by single spaces
    tweet: the first tweet in record order, preprocessed
    """
    if field is FieldTag.USERNAMES:
        return profile.username
    if field is FieldTag.DESCRIPTION:
        return profile.description
    if field is FieldTag.TWEETS:
        return " ".join(preprocess_tweet(t) for t in profile.tweets[:MAX_AGGREGATED_TWEETS])
    if field is FieldTag.TWEET:
        return preprocess_tweet(profile.tweets[0]) if profile.tweets else ""
    raise ValueError(f"Unknown field: {field}")
