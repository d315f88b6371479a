"""Structured verification records with JSON and text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class VerificationReport:
    """One bounded check: what was tested, on what, and the outcome.

    Every verdict other than a structural one is qualified by the horizon
    recorded in ``horizon`` and spelled out in ``caveats``.
    """

    theorem: str
    instance: str
    verdict: str
    witnesses: Dict[str, Any] = field(default_factory=dict)
    horizon: Dict[str, Any] = field(default_factory=dict)
    caveats: List[str] = field(default_factory=list)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "horizon": self.horizon,
            "caveats": self.caveats,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.theorem}: {self.verdict}", f"  instance: {self.instance}"]
        for k in sorted(self.witnesses):
            lines.append(f"  {k}: {_flat(self.witnesses[k])}")
        if self.horizon:
            params = ", ".join(f"{k}={self.horizon[k]}" for k in sorted(self.horizon))
            lines.append(f"  parameters: {params}")
        for c in self.caveats:
            lines.append(f"  note: {c}")
        return "\n".join(lines) + "\n"


def _flat(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "{" + ", ".join(_flat(v) for v in value) + "}"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_flat(v)}" for k, v in value.items())
    return str(value)
