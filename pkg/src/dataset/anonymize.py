"""
Replace account identifiers with artificial ones before data is shared
"""
import hashlib
import hmac
import logging
import secrets
from typing import List, Optional

from src.dataset.models import UserProfile

logger = logging.getLogger(__name__)

PSEUDONYM_LENGTH = 16


def new_run_secret() -> bytes:
    """Fresh random secret for one anonymization run"""
    return secrets.token_bytes(32)


def pseudonym(screen_name: str, secret: bytes) -> str:
    """Deterministic keyed pseudonym for a screen name"""
    digest = hmac.new(secret, screen_name.encode("utf-8"), hashlib.sha256).hexdigest()
    return f"user_{digest[:PSEUDONYM_LENGTH]}"


def anonymize(profiles: List[UserProfile], secret: Optional[bytes] = None) -> List[UserProfile]:
    """
    Assign artificial user IDs and pseudonymous screen names

    Args:
        profiles: Profiles in dataset order
        secret: Run-scoped key for pseudonyms; a random one is drawn if omitted

    Returns:
        New profiles with user_id "u000001", "u000002", ... in input order and
        screen_name replaced by a keyed pseudonym; every other field unchanged
    """
    if secret is None:
        secret = new_run_secret()

    width = max(6, len(str(len(profiles))))
    anonymized = [
        profile.model_copy(update={
            "user_id": f"u{index:0{width}d}",
            "screen_name": pseudonym(profile.screen_name, secret) if profile.screen_name else "",
        })
        for index, profile in enumerate(profiles, start=1)
    ]

    logger.info(f"Anonymized {len(anonymized)} profile(s)")
    return anonymized
