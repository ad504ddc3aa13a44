"""Exception hierarchy.

Every domain error carries a stable ``code`` and a ``witness`` dict so callers
(and the CLI) can report failures as data.
"""

from __future__ import annotations

from typing import Any


class AsBundlesError(Exception):
    code = "error"

    def __init__(self, message: str, **witness: Any):
        super().__init__(message)
        self.witness = witness

    def to_json(self) -> dict:
        return {"code": self.code, "message": str(self), "witness": self.witness}


class MixedVariant(AsBundlesError):
    code = "mixed_variant"


class AbstractUnsupported(AsBundlesError):
    code = "abstract_unsupported"


class ReciprocityViolation(AsBundlesError):
    code = "reciprocity_violation"


class BadInfinitePlace(AsBundlesError):
    code = "bad_infinite_place"


class DuplicatePlace(AsBundlesError):
    code = "duplicate_place"


class InvalidIndexSequence(AsBundlesError):
    code = "invalid_index_sequence"


class AbstractWithD(AsBundlesError):
    code = "abstract_with_d"


class InvalidContext(AsBundlesError):
    code = "invalid_context"


class DescentFailure(AsBundlesError):
    code = "descent_failure"

    def __init__(self, t: int, m: int, d: int):
        super().__init__(
            f"twist {t} has multiplicity {m}, not divisible by rank {d}",
            t=t, m=m, d=d,
        )
        self.t, self.m, self.d = t, m, d


class IntegralityBug(AsBundlesError):
    code = "integrality_bug"


class IncompatibleAtom(AsBundlesError):
    code = "incompatible_atom"
