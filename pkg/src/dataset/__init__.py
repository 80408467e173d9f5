"""Profile records: schema, ingest, anonymization and splits"""

from src.dataset.models import GenderLabel, UserProfile, MAX_FRIENDS
from src.dataset.parser import (
    DatasetDecodeError,
    ParsedDataset,
    RecordDiagnostic,
    parse_profiles,
    serialize_profiles,
    load_profiles,
    write_profiles,
    load_exclusions,
)
from src.dataset.anonymize import anonymize, pseudonym, new_run_secret
from src.dataset.splits import load_split, apply_split

__all__ = [
    # Models
    "GenderLabel",
    "UserProfile",
    "MAX_FRIENDS",
    # Ingest
    "DatasetDecodeError",
    "ParsedDataset",
    "RecordDiagnostic",
    "parse_profiles",
    "serialize_profiles",
    "load_profiles",
    "write_profiles",
    "load_exclusions",
    # Anonymization
    "anonymize",
    "pseudonym",
    "new_run_secret",
    # Splits
    "load_split",
    "apply_split",
]
