import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping

import pandas as pd

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


@dataclass
class Table:
    """One output curve with the metadata it is written with."""

    name: str
    frame: pd.DataFrame
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def warnings(self) -> List[str]:
        if "warning" not in self.frame:
            return []
        return [w for w in self.frame["warning"].fillna("") if w]


def _header_lines(metadata: Mapping[str, Any], config_text: str) -> List[str]:
    lines = [f"# {key}: {value}" for key, value in metadata.items()]
    lines.append("# config:")
    lines += [
        f"#   {line}" for line in config_text.splitlines() if line.strip()
    ]
    return lines


def write_csv(
    table: Table, path: str, metadata: Mapping[str, Any], config_text: str
) -> None:
    """
    CSV with the metadata as leading ``#`` comment lines; read it back with
    ``pandas.read_csv(path, comment="#")``.
    """
    with open(path, "w", encoding="utf-8", newline="") as handle:
        for line in _header_lines(metadata, config_text):
            handle.write(line + "\n")
        table.frame.to_csv(handle, index=False, float_format=FLOAT_FORMAT)


def _jsonable(value: Any) -> Any:
    if isinstance(value, float) and value != value:
        return None
    if hasattr(value, "item"):
        return _jsonable(value.item())
    return value


def write_json(
    table: Table, path: str, metadata: Mapping[str, Any], config_text: str
) -> None:
    """JSON with the same rows as the CSV plus a metadata object."""
    rows = [
        {key: _jsonable(value) for key, value in row.items()}
        for row in table.frame.to_dict(orient="records")
    ]
    document = {
        "metadata": {**metadata, "config": config_text},
        "columns": list(table.frame.columns),
        "rows": rows,
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2)
        handle.write("\n")


WRITERS = {"csv": write_csv, "json": write_json}


def write_table(
    table: Table,
    directory: str,
    prefix: str,
    fmt: str,
    metadata: Mapping[str, Any],
    config_text: str,
) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"{prefix}_{table.name}.{fmt}")
    WRITERS[fmt](table, path, {**metadata, **table.metadata}, config_text)
    logger.info(f"Wrote {len(table.frame)} rows to {path}")
    return path
