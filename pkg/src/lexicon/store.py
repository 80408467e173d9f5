"""
Lexicon files: the lexicon TSV, the exclusion list and the candidate list

Lexicon TSV columns: normalized_form, gender, source, count, variants
(variants comma-joined, canonical spelling first).
"""
import logging
import os
from typing import Iterable, List

from src.lexicon.builder import Candidate, EntrySource, ExclusionList, Lexicon, LexiconEntry
from src.lexicon.heuristics import WordGender
from src.lexicon.tables import LexiconError
from src.text.normalize import normalize_text

logger = logging.getLogger(__name__)

LEXICON_HEADER = ("normalized_form", "gender", "source", "count", "variants")
CANDIDATE_HEADER = ("normalized_form", "count", "heuristic_gender", "surfaces")


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def save_lexicon(path: str, entries: Iterable[LexiconEntry]) -> None:
    """Write lexicon entries as TSV"""
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write("\t".join(LEXICON_HEADER) + "\n")
        for entry in entries:
            f.write("\t".join((
                entry.normalized_form,
                entry.gender.value,
                entry.source.value,
                str(entry.corpus_count),
                ",".join(entry.surface_variants),
            )) + "\n")


def load_lexicon(path: str) -> Lexicon:
    """
    Read a lexicon TSV

    Raises:
        LexiconError: On a malformed row, an unknown gender/source, or a
            variant that does not normalize to its row's form
    """
    entries: List[LexiconEntry] = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line or line_number == 1 and line.startswith(LEXICON_HEADER[0]):
                continue
            fields = line.split("\t")
            if len(fields) != len(LEXICON_HEADER):
                raise LexiconError(f"{path}:{line_number}: expected {len(LEXICON_HEADER)} columns")
            normalized, gender, source, count, variants = fields
            try:
                entry = LexiconEntry(
                    normalized_form=normalized,
                    surface_variants=tuple(v for v in variants.split(",") if v),
                    gender=WordGender(gender),
                    source=EntrySource(source),
                    corpus_count=int(count),
                )
            except ValueError as e:
                raise LexiconError(f"{path}:{line_number}: {e}")
            if not entry.surface_variants:
                raise LexiconError(f"{path}:{line_number}: entry has no surface variants")
            for variant in entry.surface_variants:
                if normalize_text(variant) != normalized:
                    raise LexiconError(
                        f"{path}:{line_number}: variant '{variant}' does not normalize to '{normalized}'"
                    )
            entries.append(entry)

    lexicon = Lexicon(entries)
    logger.info(f"Loaded {len(lexicon)} lexicon entries from {path}")
    return lexicon


def save_exclusion_list(path: str, exclusions: ExclusionList) -> None:
    """Write the exclusion list, one token per line, sorted"""
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        for token in sorted(exclusions.tokens):
            f.write(token + "\n")


def load_exclusion_list(path: str) -> ExclusionList:
    """Read an exclusion list; entries are normalized on load"""
    with open(path, "r", encoding="utf-8") as f:
        tokens = {
            normalize_text(line.split("#", 1)[0])
            for line in f
            if line.split("#", 1)[0].strip()
        }
    return ExclusionList(frozenset(tokens))


def save_candidates(path: str, candidates: Iterable[Candidate]) -> None:
    """Write the frequency-filtered candidate list for manual curation"""
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write("\t".join(CANDIDATE_HEADER) + "\n")
        for candidate in candidates:
            f.write("\t".join((
                candidate.normalized_form,
                str(candidate.count),
                candidate.gender.value,
                ",".join(candidate.surfaces),
            )) + "\n")
