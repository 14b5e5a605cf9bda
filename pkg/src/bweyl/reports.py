"""Verification report records shared by the checking modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .signed_perm import format_window


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one exhaustive check over a stated universe."""

    lemma_id: str
    n: int
    universe_size: int
    passed: bool
    witnesses: tuple = ()
    vacuous: bool = False
    counts: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.lemma_id,
            "n": self.n,
            "checked": self.universe_size,
            "pass": self.passed,
            "witnesses": [_jsonify(w) for w in self.witnesses],
            "vacuous": self.vacuous,
            "counts": dict(sorted(self.counts.items())),
        }


@dataclass(frozen=True)
class SplittingReport:
    """Outcome of one splitting check of a pair of element sets."""

    is_splitting: bool
    size_check: bool
    counts: tuple[int, int, int]  # (#X, #Y, #group)
    failure_witness: tuple | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "splitting": self.is_splitting,
            "size_check": self.size_check,
            "counts": {
                "x": self.counts[0],
                "y": self.counts[1],
                "group": self.counts[2],
            },
            "witness": _jsonify(self.failure_witness),
        }


def _jsonify(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, tuple) and obj and all(isinstance(x, int) for x in obj):
        return format_window(obj)
    if isinstance(obj, (tuple, list)):
        return [_jsonify(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    return str(obj)
