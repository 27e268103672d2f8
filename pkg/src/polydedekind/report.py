from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

__all__ = ["IdentityReport", "SumParams", "PreconditionError"]


class PreconditionError(ValueError):
    """An identity checker was called outside the hypotheses of its identity."""


@dataclass(frozen=True)
class SumParams:
    h: int
    m: int
    p: int = 1
    k: int = 1

    def __post_init__(self):
        if self.h < 1 or self.m < 1:
            raise PreconditionError(f"h and m must be positive, got h={self.h}, m={self.m}")


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity check.

    ``holds`` is derived from ``lhs == rhs``; there is no tolerance anywhere.
    ``params`` keeps insertion order, which the CLI relies on.
    """

    identity: str
    params: Dict[str, int]
    lhs: Fraction
    rhs: Fraction
    holds: bool = field(init=False)
    details: Dict[str, bool] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        ok = self.lhs == self.rhs and all(self.details.values())
        object.__setattr__(self, "holds", ok)

    def __bool__(self) -> bool:
        return self.holds
