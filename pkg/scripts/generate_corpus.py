#!/usr/bin/env python3
"""Generate synthetic GraphDocument corpora from the rows of corpus_matrix.csv.

Each row names a corpus and asks for ``count`` random connected graphs on ``n``
vertices with no cycle longer than ``max_circumference``. Graph ``i`` of a row
is drawn with seed ``seed + i``, so reruns reproduce the same files.
"""

import csv
import logging
import sys
from pathlib import Path
from typing import Dict, List

sys.path.insert(0, str(Path(__file__).resolve().parent))

from wllab.core.errors import WlLabError  # noqa: E402
from wllab.core.logger import setup_logging  # noqa: E402
from wllab.graph_io import dump_graph  # noqa: E402
from wllab.synth import random_bounded_graph  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "corpus"
CSV_PATH = ROOT / "corpus_matrix.csv"

COLUMNS = ("name", "n", "max_circumference", "feature_classes", "count", "seed")

logger = logging.getLogger("wllab.corpus")


def parse_row(row: Dict[str, str]) -> Dict[str, object]:
    missing = [c for c in COLUMNS if not (row.get(c) or "").strip()]
    if missing:
        raise ValueError(f"row {row} is missing {', '.join(missing)}")
    parsed: Dict[str, object] = {"name": row["name"].strip()}
    for column in COLUMNS[1:]:
        parsed[column] = int(row[column])
    return parsed


def generate_row(row: Dict[str, object], out: Path) -> List[Path]:
    folder = out / str(row["name"])
    written = []
    for i in range(int(row["count"])):
        g = random_bounded_graph(
            int(row["n"]),
            int(row["max_circumference"]),
            feature_classes=int(row["feature_classes"]),
            seed=int(row["seed"]) + i,
        )
        written.append(dump_graph(g, folder / f"{row['name']}-{i:04d}.json"))
    return written


def main(csv_path: Path = CSV_PATH, out: Path = OUT) -> int:
    setup_logging("INFO")
    if not csv_path.exists():
        logger.error(f"Missing CSV matrix at {csv_path}")
        return 1

    with open(csv_path, "r", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))

    generated = 0
    failed = 0
    for raw in rows:
        try:
            row = parse_row(raw)
            generated += len(generate_row(row, out))
        except (ValueError, WlLabError) as e:
            logger.warning(f"Skipping row {raw.get('name', '?')}: {e}")
            failed += 1

    logger.info(f"Generated {generated} graphs from {len(rows)} rows ({failed} failed)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
