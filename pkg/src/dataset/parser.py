"""
Line-delimited profile records: parsing, serialization and ingest filtering
"""
import json
import logging
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, List, Optional, Set, Union

from pydantic import ValidationError

from src.dataset.models import UserProfile

logger = logging.getLogger(__name__)

# Field order of the documented schema
SCHEMA_FIELDS = (
    "user_id",
    "display_name",
    "screen_name",
    "description",
    "location_raw",
    "created_at",
    "followers_count",
    "friends_count",
    "verified",
    "tweets",
    "friend_names",
    "gold_gender",
    "gold_country",
)


class DatasetDecodeError(ValueError):
    """The record stream is not valid UTF-8"""


@dataclass(frozen=True)
class RecordDiagnostic:
    """A record-level problem; the record is skipped, parsing continues"""
    line_number: int
    message: str
    user_id: Optional[str] = None

    def __str__(self) -> str:
        prefix = f"line {self.line_number}"
        if self.user_id:
            prefix += f" (user_id={self.user_id})"
        return f"{prefix}: {self.message}"


@dataclass(frozen=True)
class ParsedDataset:
    """Profiles in input order plus the diagnostics for rejected lines"""
    profiles: List[UserProfile]
    diagnostics: List[RecordDiagnostic] = field(default_factory=list)
    excluded: int = 0


def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(p) for p in item["loc"]) or "record"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def parse_profiles(
    stream: Union[BinaryIO, bytes],
    exclude: Optional[Set[str]] = None
) -> ParsedDataset:
    """
    Parse a UTF-8 stream of JSON Lines profile records

    Args:
        stream: Binary file object or raw bytes
        exclude: user_ids dropped at ingest (account filter list)

    Returns:
        ParsedDataset with well-formed profiles in input order

    Raises:
        DatasetDecodeError: If the stream is not valid UTF-8
    """
    raw = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
    try:
        text = bytes(raw).decode("utf-8")
    except UnicodeDecodeError as e:
        raise DatasetDecodeError(f"Profile stream is not valid UTF-8: {e}")

    exclude = exclude or set()
    profiles: List[UserProfile] = []
    diagnostics: List[RecordDiagnostic] = []
    seen_ids: Set[str] = set()
    excluded = 0

    # split on "\n" only: U+2028 and friends may appear inside JSON strings
    for line_number, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip():
            continue

        try:
            payload = json.loads(line)
        except json.JSONDecodeError as e:
            diagnostics.append(RecordDiagnostic(line_number, f"malformed JSON: {e.msg}"))
            continue

        if not isinstance(payload, dict):
            diagnostics.append(RecordDiagnostic(line_number, "record must be a JSON object"))
            continue

        user_id = payload.get("user_id") if isinstance(payload.get("user_id"), str) else None
        try:
            profile = UserProfile.model_validate(payload)
        except ValidationError as e:
            diagnostics.append(RecordDiagnostic(line_number, _validation_message(e), user_id))
            continue

        if profile.user_id in seen_ids:
            diagnostics.append(
                RecordDiagnostic(line_number, "duplicate user_id, first occurrence kept", profile.user_id)
            )
            continue
        seen_ids.add(profile.user_id)

        if profile.user_id in exclude:
            excluded += 1
            continue

        profiles.append(profile)

    for diagnostic in diagnostics:
        logger.warning(f"Skipped record at {diagnostic}")
    logger.info(
        f"Parsed {len(profiles)} profile(s), {len(diagnostics)} rejected, {excluded} excluded"
    )
    return ParsedDataset(profiles=profiles, diagnostics=diagnostics, excluded=excluded)


def profile_to_record(profile: UserProfile) -> dict:
    """Schema-ordered JSON-compatible dict for one profile"""
    data = profile.model_dump(mode="json")
    return {name: data[name] for name in SCHEMA_FIELDS}


def serialize_profiles(profiles: Iterable[UserProfile]) -> bytes:
    """Serialize profiles as UTF-8 JSON Lines (inverse of parse_profiles)"""
    lines = [
        json.dumps(profile_to_record(p), ensure_ascii=False, separators=(",", ":"))
        for p in profiles
    ]
    return ("\n".join(lines) + "\n" if lines else "").encode("utf-8")


def load_exclusions(path: str) -> Set[str]:
    """Read an exclusion list: one user_id per line, '#' starts a comment"""
    with open(path, "r", encoding="utf-8") as f:
        return {
            line.split("#", 1)[0].strip()
            for line in f
            if line.split("#", 1)[0].strip()
        }


def load_profiles(path: str, exclude: Optional[Set[str]] = None) -> ParsedDataset:
    """Parse a profile dataset file"""
    with open(path, "rb") as f:
        return parse_profiles(f, exclude=exclude)


def write_profiles(path: str, profiles: Iterable[UserProfile]) -> None:
    """Write profiles to a JSON Lines file"""
    with open(path, "wb") as f:
        f.write(serialize_profiles(profiles))
