"""
Pydantic models for profile records
"""
import re
from datetime import date
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

MAX_FRIENDS = 100

_COUNTRY_FIELD = re.compile(r"^(?:[A-Z]{2}|OTH|\?)$")


class GenderLabel(str, Enum):
    """Gender label; values are the dataset codes"""
    MALE = "m"
    FEMALE = "f"
    UNKNOWN = "?"

    @property
    def word(self) -> str:
        return {"m": "male", "f": "female", "?": "unknown"}[self.value]


class UserProfile(BaseModel):
    """One account record (one line of a profile dataset)"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    user_id: str = Field(min_length=1)
    display_name: str = ""
    screen_name: str = ""
    description: str = ""
    location_raw: str = ""
    created_at: Optional[date] = None
    followers_count: int = Field(default=0, ge=0)
    friends_count: int = Field(default=0, ge=0)
    verified: bool = False
    tweets: Tuple[str, ...] = ()
    friend_names: Tuple[str, ...] = Field(default=(), max_length=MAX_FRIENDS)
    gold_gender: GenderLabel = GenderLabel.UNKNOWN
    gold_country: str = "?"

    @field_validator("screen_name")
    @classmethod
    def _ascii_screen_name(cls, value: str) -> str:
        if not value.isascii():
            raise ValueError("screen_name must be ASCII")
        return value

    @field_validator("gold_country")
    @classmethod
    def _country_code(cls, value: str) -> str:
        if not _COUNTRY_FIELD.match(value):
            raise ValueError(f"gold_country must be a 2-letter code, 'OTH' or '?', got '{value}'")
        return value

    @property
    def username(self) -> str:
        """Display name, falling back to the screen name when it is empty"""
        return self.display_name if self.display_name.strip() else self.screen_name

    @property
    def has_gold_gender(self) -> bool:
        return self.gold_gender is not GenderLabel.UNKNOWN
