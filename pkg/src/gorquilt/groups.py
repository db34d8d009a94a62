"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .polyhedral.intlinalg import cokernel


@dataclass(frozen=True)
class FinAbGroup:
    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        facs = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in facs):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(facs, facs[1:])):
            raise ValueError("each invariant factor must divide the next")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "invariant_factors", facs)

    @classmethod
    def cokernel_of(cls, M, nrows=None) -> "FinAbGroup":
        tors, free = cokernel(M, nrows)
        return cls(tuple(tors), free)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    @property
    def order(self):
        """Group order, or ``None`` when infinite."""
        return None if self.free_rank else prod(self.invariant_factors)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors), "free_rank": self.free_rank, "text": str(self)}
