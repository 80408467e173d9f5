"""
TSV writers for analysis reports
"""
import logging
import os
from typing import Dict, List, Sequence

import pandas as pd

from src.analysis.stats import StatsReport
from src.analysis.valence import ValenceScore

logger = logging.getLogger(__name__)


def write_stats_report(report: StatsReport, out_dir: str) -> List[str]:
    """
    Write one <section>.tsv file per report section

    Returns:
        Paths written, in section order
    """
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for name, table in report.sections().items():
        path = os.path.join(out_dir, f"{name}.tsv")
        table.to_csv(path, sep="\t", index=False)
        paths.append(path)
    logger.info(f"Wrote {len(paths)} statistics table(s) to {out_dir}")
    return paths


def valence_table(scores: Sequence[ValenceScore], categories: Sequence[str]) -> pd.DataFrame:
    """token, then score_<category> and count_<category> per category"""
    rows: List[Dict[str, object]] = []
    for s in scores:
        row: Dict[str, object] = {"token": s.token}
        for category in categories:
            row[f"score_{category}"] = s.scores[category]
        for category in categories:
            row[f"count_{category}"] = s.counts[category]
        rows.append(row)
    columns = ["token"] + [f"score_{c}" for c in categories] + [f"count_{c}" for c in categories]
    return pd.DataFrame(rows, columns=columns)


def write_valence_report(scores: Sequence[ValenceScore], categories: Sequence[str], path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    valence_table(scores, categories).to_csv(path, sep="\t", index=False, float_format="%.6f")
    logger.info(f"Wrote {len(scores)} valence score(s) to {path}")
