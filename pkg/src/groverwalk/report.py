"""Machine-readable run reports."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any

__all__ = ["RunReport", "num"]


def num(x: float | int) -> str:
    """Decimal string with 12 significant digits; tiny values print as ``0``."""
    if isinstance(x, (bool,)):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if abs(x) < 5e-13:
        x = 0.0
    return format(x, ".12g")


@dataclass
class RunReport:
    command: str
    selector: str | None
    inputs: dict[str, Any]
    results: dict[str, Any]
    tolerances: dict[str, str]
    version: str
    table: list[dict[str, Any]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))

    def to_csv(self) -> str:
        if not self.table:
            return ""
        cols: list[str] = []
        for row in self.table:
            cols += [c for c in row if c not in cols]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for row in self.table:
            w.writerow({k: _cell(v) for k, v in row.items()})
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}" + (f" {self.selector}" if self.selector else "")]
        _render(self.results, lines, "  ")
        if self.table and self.command == "verify":
            lines.append("  table:")
            for row in self.table:
                lines.append("    " + "  ".join(f"{k}={_cell(v)}" for k, v in row.items()))
        lines.append("  tolerances: " + ", ".join(f"{k}={v}" for k, v in self.tolerances.items()))
        return "\n".join(lines)


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return "" if v is None else str(v)


def _render(obj: Any, lines: list[str], indent: str) -> None:
    for k, v in obj.items():
        if v is None:
            lines.append(f"{indent}{k}: none")
        elif isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            _render(v, lines, indent + "  ")
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                lines.append(indent + "  - " + ", ".join(f"{a}={_cell(b)}" for a, b in item.items()))
        else:
            lines.append(f"{indent}{k}: {_cell(v)}")
