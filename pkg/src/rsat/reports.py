"""Verdict-plus-witness result type shared by detectors and verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class VerificationReport:
    """Boolean verdict plus a structured witness.

    For a failing verdict the witness identifies the violation (a
    non-edge/color pair, a rainbow clique, a removed/added edge set, ...)
    precisely enough to replay it against the input.
    """

    verdict: bool
    witness: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.verdict


def ok(witness: Any = None, note: str = "") -> VerificationReport:
    return VerificationReport(True, witness, note)


def fail(witness: Any = None, note: str = "") -> VerificationReport:
    return VerificationReport(False, witness, note)
