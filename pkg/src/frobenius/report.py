"""Report records and deterministic JSON output."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .registry import CHECKS


def _clean(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return float(f"{value:.12e}")
    if isinstance(value, complex):
        return {"re": float(f"{value.real:.12e}"), "im": float(f"{value.imag:.12e}")}
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return repr(value)


@dataclass
class Report:
    command: str
    config: dict
    checks: list = field(default_factory=list)

    def add(self, check_id: str, status: str, data=None, residual=None):
        if check_id not in CHECKS:
            raise KeyError(f"unregistered check {check_id!r}")
        if status not in ("exact-pass", "numeric-pass", "fail", "skipped"):
            raise ValueError(f"bad status {status!r}")
        rec = {
            "check_id": check_id,
            "equation_tag": CHECKS[check_id]["tag"],
            "status": status,
        }
        if residual is not None:
            rec["residual"] = _clean(residual)
        if data is not None:
            rec["data"] = _clean(data)
        self.checks.append(rec)

    @property
    def ok(self) -> bool:
        return all(c["status"] != "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "schema": "report/v1",
            "tool": {"name": "frobenius", "version": __version__},
            "command": self.command,
            "config": _clean(self.config),
            "ok": self.ok,
            "checks": self.checks,
        }

    def write(self, path: str):
        """Atomic, byte-deterministic JSON dump."""
        payload = json.dumps(self.to_dict(), indent=2, sort_keys=True)
        directory = os.path.dirname(os.path.abspath(path)) or "."
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload + "\n")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
