"""
Command reports: human-readable tables followed by a fenced JSON block carrying the same
verdicts for machines.
"""
import json
from typing import Any, Dict, Iterable, List, Optional, Tuple

import pandas as pd
from tabulate import tabulate

from pluripotential.config.engine_config import EngineConfig
from pluripotential.core.cohomology import CohomologyTable
from pluripotential.core.complexes import GradedSpace, Key, ValidationReport
from pluripotential.io.document import format_key, format_matrix


class Report:
    """
    Accumulates the sections of a command's output.

    Attributes:
        title (str): First line of the human-readable part.
        payload (Dict[str, Any]): JSON-serializable data emitted after the tables.
    """
    def __init__(self, title: str, config: Optional[EngineConfig] = None) -> None:
        self.title = title
        self.config = config or EngineConfig()
        self.payload: Dict[str, Any] = {}
        self._sections: List[Tuple[str, Any]] = []

    def add_line(self, text: str) -> None:
        self._sections.append(("line", text))

    def add_table(self, heading: str, frame: pd.DataFrame) -> None:
        self._sections.append(("table", (heading, frame)))

    def render(self) -> str:
        lines = [self.title, ""]
        for section, content in self._sections:
            if section == "line":
                lines.append(content)
                continue
            heading, frame = content
            lines.append(heading)
            if frame.empty:
                lines.append("(empty)")
            else:
                shown = frame.head(self.config.max_report_rows)
                lines.append(tabulate(shown, headers='keys', tablefmt=self.config.table_format, showindex=True))
                if len(frame) > len(shown):
                    lines.append(f"... {len(frame) - len(shown)} more rows")
            lines.append("")
        lines += ["```json", json.dumps(self.payload, indent=2, sort_keys=True, ensure_ascii=False), "```", ""]
        return "\n".join(lines)


def _bounding_box(keys: Iterable[Key]) -> Tuple[range, range]:
    keys = list(keys)
    ps, qs = [key[0] for key in keys], [key[1] for key in keys]
    return range(min(ps), max(ps) + 1), range(max(qs), min(qs) - 1, -1)


def grid_frame(values: Dict[Key, int], keys: Iterable[Key]) -> pd.DataFrame:
    """
    Dimensions laid out like a picture of a bicomplex: q decreasing down the rows, p increasing
    along the columns. A cochain grading gives a single row.
    """
    keys = list(keys)
    if not keys:
        return pd.DataFrame()
    if isinstance(keys[0], int):
        degrees = range(min(keys), max(keys) + 1)
        return pd.DataFrame([[values.get(n, 0) for n in degrees]], index=["dim"], columns=[f"n={n}" for n in degrees])
    ps, qs = _bounding_box(keys)
    rows = [[values.get((p, q), 0) for p in ps] for q in qs]
    return pd.DataFrame(rows, index=[f"q={q}" for q in qs], columns=[f"p={p}" for p in ps])


def cohomology_frame(table: CohomologyTable, keys: Iterable[Key]) -> pd.DataFrame:
    return grid_frame(table.dims, keys)


def space_frame(space: GradedSpace) -> pd.DataFrame:
    return grid_frame(space.dims, space.support)


def dims_payload(values: Dict[Key, int]) -> Dict[str, int]:
    return {format_key(key): dim for key, dim in values.items() if dim}


def defects_frame(report: ValidationReport) -> pd.DataFrame:
    records = [{"location": format_key(defect.location), "relation": defect.relation,
                "nonzero entries": sum(1 for _ in defect.matrix.items())} for defect in report.defects]
    return pd.DataFrame(records)


def validation_payload(report: ValidationReport) -> Dict[str, Any]:
    return {
        "kind": report.kind,
        "valid": report.is_valid,
        "defects": [{"location": format_key(defect.location), "relation": defect.relation,
                     "matrix": format_matrix(defect.matrix)} for defect in report.defects],
    }


def validation_report(report: ValidationReport, config: Optional[EngineConfig] = None) -> Report:
    output = Report(f"validate: {report.kind} is {'valid' if report.is_valid else 'invalid'}", config)
    if not report.is_valid:
        output.add_table("defects", defects_frame(report))
    output.payload = validation_payload(report)
    return output


def nonzero_locations(blocks: Dict[Key, Any]) -> List[str]:
    """Keys of the blocks that are not zero matrices."""
    return [format_key(key) for key, block in blocks.items() if not block.is_zero()]


def matrices_payload(blocks: Dict[Key, Any]) -> Dict[str, Any]:
    return {format_key(key): format_matrix(block) for key, block in blocks.items() if not block.is_zero()}
