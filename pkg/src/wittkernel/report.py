"""ClassificationReport: the record every CLI command emits."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .rational import Place

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ClassificationReport",
    "type": "object",
    "additionalProperties": False,
    "required": ["command", "inputs", "verdicts", "invariants", "witnesses",
                 "theorem_tags", "version"],
    "properties": {
        "command": {"type": "string", "minLength": 1},
        "inputs": {"type": "object", "additionalProperties": {"type": "string"}},
        "verdicts": {
            "type": "object",
            "additionalProperties": {
                "anyOf": [
                    {"type": "boolean"}, {"type": "string"}, {"type": "integer"},
                    {"type": "array", "items": {"type": ["string", "integer"]}},
                ]
            },
        },
        "invariants": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name", "place", "value"],
                "properties": {
                    "name": {"type": "string"},
                    "place": {"type": ["string", "null"]},
                    "value": {"type": ["string", "integer", "boolean"]},
                },
            },
        },
        "witnesses": {"type": "object", "additionalProperties": {"type": "string"}},
        "theorem_tags": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["verdict", "theorem"],
                "properties": {"verdict": {"type": "string"}, "theorem": {"type": "string"}},
            },
        },
        "version": {"type": "string"},
    },
}


@dataclass
class ClassificationReport:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    verdicts: dict[str, object] = field(default_factory=dict)
    invariants: list[tuple[str, Place | None, object]] = field(default_factory=list)
    witnesses: dict[str, str] = field(default_factory=dict)
    theorem_tags: list[tuple[str, str]] = field(default_factory=list)

    def verdict(self, name: str, value, theorem: str) -> None:
        """Record a verdict together with the result that justifies it."""
        self.verdicts[name] = value
        self.theorem_tags.append((name, theorem))

    def invariant(self, name: str, place: Place | None, value) -> None:
        self.invariants.append((name, place, value))

    def _sorted_invariants(self):
        # stable: grouped by name in insertion order, places 2 < 3 < ... < inf
        order = {}
        for name, _, _ in self.invariants:
            order.setdefault(name, len(order))

        def key(row):
            name, place, _ = row
            return (order[name], (-1, 0) if place is None else place.sort_key)

        return sorted(self.invariants, key=key)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": dict(self.inputs),
            "verdicts": {k: _jsonable(v) for k, v in self.verdicts.items()},
            "invariants": [
                {"name": n, "place": None if p is None else str(p), "value": _jsonable(v)}
                for n, p, v in self._sorted_invariants()
            ],
            "witnesses": dict(self.witnesses),
            "theorem_tags": [{"verdict": v, "theorem": t} for v, t in self.theorem_tags],
            "version": __version__,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=True) + "\n"

    def to_text(self) -> str:
        tags = dict(self.theorem_tags)
        lines = [f"command: {self.command}"]
        for k, v in self.inputs.items():
            lines.append(f"  input {k} = {v}")
        lines.append("verdicts:")
        for k, v in self.verdicts.items():
            tag = f"  [{tags[k]}]" if k in tags else ""
            lines.append(f"  {k}: {_text(v)}{tag}")
        if self.invariants:
            lines.append("invariants:")
            for n, p, v in self._sorted_invariants():
                where = "" if p is None else f" @ {p}"
                lines.append(f"  {n}{where}: {_text(v)}")
        if self.witnesses:
            lines.append("witnesses:")
            for k, v in self.witnesses.items():
                lines.append(f"  {k}: {v}")
        return "\n".join(lines) + "\n"


def _jsonable(v):
    if isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, (list, tuple, set, frozenset)):
        items = [_jsonable(x) for x in v]
        return items
    return str(v)


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)
