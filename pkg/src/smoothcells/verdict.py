"""Result type shared by the smoothness engines."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Literal

Engine = Literal["typeA", "restricted_list", "bp", "oracle"]


@dataclass(frozen=True)
class SmoothnessVerdict:
    smooth: bool
    engine: Engine
    # a (pattern, positions) pair, a (subsystem, sigma) pair, or a Poincare polynomial
    witness: Any = None

    def __bool__(self):
        return self.smooth
