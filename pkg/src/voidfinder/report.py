"""Run reports and file IO: canonical JSON, CSV projections, cloud formats.

Floats serialize at 17 significant digits, so a loaded report re-serializes
byte-identically and identical runs produce identical files. All writes are
atomic (temp file in the target directory, then rename).
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field

from .errors import NonFiniteCoordinate, ParseError, TooFewPoints
from .geom import PointCloud


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _emit(obj) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_emit(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_emit(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@dataclass
class Report:
    """Everything a run produces, ready for serialization.

    ``timings`` (seconds per stage) stays out of the serialized document
    unless explicitly requested, so identical runs write identical bytes.
    """

    config: dict
    n: int
    hull: list[int]
    segment_count: int
    top_segments: list[dict]
    best: dict
    dv: dict
    history: list[dict]
    converged: bool
    orders_used: int
    polygon: list[dict]
    polygon_area: float
    diagnostics: dict
    timings: dict = field(default_factory=dict)

    def to_jsonable(self, include_timings: bool = False) -> dict:
        doc = {
            "config": self.config,
            "n": self.n,
            "hull_size": len(self.hull),
            "hull": list(self.hull),
            "segment_count": self.segment_count,
            "top_segments": self.top_segments,
            "best": self.best,
            "dv": self.dv,
            "history": self.history,
            "converged": self.converged,
            "orders_used": self.orders_used,
            "polygon": self.polygon,
            "polygon_area": self.polygon_area,
            "diagnostics": self.diagnostics,
        }
        if include_timings:
            doc["timings"] = self.timings
        return doc


def history_csv(history) -> str:
    lines = ["order,members,new_members"]
    prev = 0
    for row in history:
        order, members = (row["order"], row["members"]) if isinstance(row, dict) else row
        lines.append(f"{order},{members},{members - prev}")
        prev = members
    return "\n".join(lines) + "\n"


def save_report(report, path: str, fmt: str = "json", include_timings: bool = False):
    """Write a report (Report or a loaded dict) as canonical JSON, or project
    its per-order history as CSV."""
    doc = report.to_jsonable(include_timings) if isinstance(report, Report) else report
    if fmt == "json":
        atomic_write_text(path, _emit(doc) + "\n")
    elif fmt == "csv":
        atomic_write_text(path, history_csv(doc["history"]))
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def load_report(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


# --- point cloud files ----------------------------------------------------


def cloud_format_for(path: str, explicit: str | None = None) -> str:
    if explicit:
        return explicit
    return "json" if path.lower().endswith(".json") else "csv"


def save_cloud(cloud: PointCloud, path: str, fmt: str = "csv") -> None:
    if fmt == "csv":
        rows = [f"{fmt_float(x)},{fmt_float(y)}" for x, y in cloud.coords]
        atomic_write_text(path, "\n".join(rows) + "\n")
    elif fmt == "json":
        atomic_write_text(path, _emit([[float(x), float(y)] for x, y in cloud.coords]) + "\n")
    else:
        raise ValueError(f"unknown cloud format {fmt!r}")


def _parse_csv_cloud(text: str):
    pts = []
    lines = text.splitlines()
    data_lines = [(no, ln.strip()) for no, ln in enumerate(lines, 1) if ln.strip()]
    for pos, (lineno, line) in enumerate(data_lines):
        parts = line.split(",")
        try:
            if len(parts) != 2:
                raise ValueError(f"expected 2 fields, got {len(parts)}")
            pts.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            # a non-numeric first line followed by data is a header
            if pos == 0 and len(data_lines) > 1:
                continue
            raise ParseError(lineno, str(exc)) from None
    return pts


def _parse_json_cloud(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    if not isinstance(data, list):
        raise ParseError(1, "expected a JSON array of [x, y] pairs")
    pts = []
    for row in data:
        if not (isinstance(row, (list, tuple)) and len(row) == 2):
            raise ParseError(1, f"expected [x, y] pair, got {row!r}")
        try:
            pts.append((float(row[0]), float(row[1])))
        except (TypeError, ValueError):
            raise ParseError(1, f"non-numeric pair {row!r}") from None
    return pts


def load_cloud(path: str, fmt: str = "csv") -> PointCloud:
    """Read a cloud file; record order defines the identifiers.

    CSV is one "x,y" per line with an optional header; JSON is an array of
    [x, y] pairs.
    """
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if fmt == "csv":
        pts = _parse_csv_cloud(text)
    elif fmt == "json":
        pts = _parse_json_cloud(text)
    else:
        raise ValueError(f"unknown cloud format {fmt!r}")
    if len(pts) < 3:
        raise TooFewPoints(f"need at least 3 points, found {len(pts)}")
    for x, y in pts:
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NonFiniteCoordinate(f"non-finite coordinate ({x}, {y})")
    return PointCloud(pts)
