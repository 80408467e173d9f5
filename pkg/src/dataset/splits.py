"""
Explicit train/test split files: one "user_id<TAB>train|test" per line
"""
import logging
from typing import Dict, List, Tuple

from src.dataset.models import UserProfile

logger = logging.getLogger(__name__)

SPLIT_NAMES = ("train", "test")


def load_split(path: str) -> Dict[str, str]:
    """
    Read a split file

    Raises:
        ValueError: On a malformed line, an unknown split name or a repeated user_id
    """
    assignment: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{line_number}: expected 'user_id<TAB>split'")
            user_id, split = parts[0].strip(), parts[1].strip()
            if split not in SPLIT_NAMES:
                raise ValueError(f"{path}:{line_number}: unknown split '{split}'")
            if user_id in assignment:
                raise ValueError(f"{path}:{line_number}: user_id '{user_id}' listed twice")
            assignment[user_id] = split
    return assignment


def apply_split(
    profiles: List[UserProfile],
    assignment: Dict[str, str]
) -> Tuple[List[UserProfile], List[UserProfile]]:
    """Partition profiles into (train, test); unassigned profiles are left out"""
    train = [p for p in profiles if assignment.get(p.user_id) == "train"]
    test = [p for p in profiles if assignment.get(p.user_id) == "test"]
    missing = len(profiles) - len(train) - len(test)
    if missing:
        logger.warning(f"{missing} profile(s) not listed in the split file were ignored")
    return train, test
