"""Output records shared by the CLI and the scripts.

Every result is one :class:`OutputRecord`.  The JSON form is::

    {"schema_version": 1, "command": ..., "params": {...},
     "result": {...}, "annotations": [...]}

with keys in exactly that order.  Payloads only hold JSON-native values:
rationals become strings such as ``"80/13"`` (integral ones become ints),
tuples become lists and mapping keys become strings.  The table form lists
the same leaves as ``path  value`` rows, so both carry identical numbers.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .perm import Permutation

SCHEMA_VERSION = 1


def jsonable(obj: Any) -> Any:
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Permutation):
        return str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(x) for x in items]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


@dataclass(frozen=True)
class OutputRecord:
    command: str
    params: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)
    annotations: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        # normalise once so equality survives a JSON round trip
        object.__setattr__(self, "params", jsonable(self.params))
        object.__setattr__(self, "result", jsonable(self.result))
        object.__setattr__(self, "annotations", jsonable(self.annotations))

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "annotations": self.annotations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        data = json.loads(text)
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
        return cls(data["command"], data["params"], data["result"], data["annotations"])

    def to_table(self) -> str:
        return render_table(self)


def flatten(obj: Any, prefix: str = "") -> list[tuple[str, Any]]:
    """Leaves of a JSON-native value as ``(dotted.path, value)`` pairs."""
    if isinstance(obj, dict):
        if not obj:
            return [(prefix, {})]
        out = []
        for k, v in obj.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else str(k))
        return out
    if isinstance(obj, list):
        if not obj:
            return [(prefix, [])]
        out = []
        for i, v in enumerate(obj):
            out += flatten(v, f"{prefix}[{i}]")
        return out
    return [(prefix, obj)]


def format_scalar(value: Any) -> str:
    if value is None:
        return "-"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value == {}:
        return "{}"
    if value == []:
        return "[]"
    return str(value)


def render_table(rec: OutputRecord) -> str:
    rows = [("command", rec.command)]
    rows += flatten({"params": rec.params, "result": rec.result})
    rows += [(f"note[{i}]", a) for i, a in enumerate(rec.annotations)]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {format_scalar(v)}" for k, v in rows)


def parse_table(text: str) -> list[tuple[str, str]]:
    """Inverse of the row layout of :func:`render_table` (values stay text)."""
    out = []
    for line in text.splitlines():
        key, _, value = line.partition("  ")
        out.append((key, value.strip()))
    return out
