"""Dimension tables and Gram reports as CSV or JSON files."""

import csv
import json
from pathlib import Path

from blobalg.core.models import DimensionRowModel, GramReportModel, OutputFormat
from blobalg.reptheory import dimension, weights
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)


def dimension_table(max_m: int) -> list[DimensionRowModel]:
    """Rows m = 0..max_m of standard module dimensions by weight."""
    rows = []
    for m in range(0, max_m + 1):
        dims = {l: dimension(m, l) for l in weights(m)}
        rows.append(DimensionRowModel(m=m, dims=dims, total=sum(d * d for d in dims.values())))
    return rows


def _prepare(path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def export_dimensions(
    rows: list[DimensionRowModel], output_path: Path, fmt: OutputFormat = OutputFormat.CSV
) -> Path:
    """
    Write a dimension table.

    CSV has one row per m and one column per weight (blank where the weight
    does not occur), then the sum of squares.
    """
    output_path = _prepare(output_path)
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        with open(output_path, "w") as f:
            json.dump([row.model_dump() for row in rows], f, indent=2)
    else:
        top = max((row.m for row in rows), default=0)
        columns = list(range(-top, top)) if top else [0]
        with open(output_path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["m", *[f"l={l}" for l in columns], "total"])
            for row in rows:
                writer.writerow([row.m, *[row.dims.get(l, "") for l in columns], row.total])
    logger.info(f"Exported dimension table ({len(rows)} rows) to {output_path}")
    return output_path


def export_gram(
    reports: list[GramReportModel], output_path: Path, fmt: OutputFormat = OutputFormat.JSON
) -> Path:
    """
    Write Gram reports.

    JSON carries the full reports; CSV has one row per report with the basis,
    the determinant and its factorisation, and the matrix rows joined by ' | '.
    """
    output_path = _prepare(output_path)
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.CSV:
        with open(output_path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(
                ["m", "weight", "dimension", "basis", "determinant", "factors", "remainder", "matrix"]
            )
            for r in reports:
                writer.writerow([
                    r.m,
                    r.weight,
                    r.dimension,
                    " ".join(r.basis),
                    r.determinant,
                    " ".join(f"{f.factor}^{f.multiplicity}" for f in r.factors),
                    r.remainder,
                    " | ".join(", ".join(row) for row in r.matrix),
                ])
    else:
        with open(output_path, "w") as f:
            json.dump([r.model_dump() for r in reports], f, indent=2)
    logger.info(f"Exported {len(reports)} Gram reports to {output_path}")
    return output_path
