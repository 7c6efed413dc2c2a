"""Check records and the JSON certificate envelope."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA = "padic-thue/1"


def to_jsonable(x: Any) -> Any:
    """Convert values produced by the pipeline into plain JSON types."""
    from .integer_kernel import RationalInterval
    from .padic import PadicInt

    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return "inf" if math.isinf(x) else x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, RationalInterval):
        return x.to_json()
    if isinstance(x, PadicInt):
        return {"residue": x.residue, "p": x.p, "k": x.k}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(x)]
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    raise TypeError(f"cannot serialize {type(x).__name__}")


@dataclass
class Check:
    name: str
    value: Any
    expected: Any
    status: str
    inputs: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "inputs": to_jsonable(self.inputs),
            "value": to_jsonable(self.value),
            "expected": to_jsonable(self.expected),
            "status": self.status,
        }


def make_check(name: str, value, expected, inputs=None, ok: bool | None = None) -> Check:
    if ok is None:
        ok = value == expected
    return Check(name, value, expected, "pass" if ok else "fail", dict(inputs or {}))


@dataclass
class Divergence:
    """A published value that the computation does not reproduce."""

    claim: str
    paper_value: Any
    computed_value: Any
    note: str

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "paper_value": to_jsonable(self.paper_value),
            "computed_value": to_jsonable(self.computed_value),
            "note": self.note,
            "status": "corrected",
        }


def envelope(kind: str, body: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, **to_jsonable(body)}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"
