"""Shared ranking result model.

Every grade-based method (majority judgement, the three-grade score form, the
strong/weak approval procedure) returns a :class:`RankedResult`: candidates in
final order with competition-style ranks, raw per-grade counts, and explicit
tie groups.  Ties are never silently broken — candidates with fully identical
grade profiles share a rank and are reported as a tie group in registration
order.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from .core import GradeScale


class Block(Enum):
    """Approval-procedure blocks, best block first."""

    STRONG_MAJORITY = "strong_majority"
    ELECTABLE = "electable"
    UNELECTABLE = "unelectable"


@dataclass(frozen=True)
class RankedEntry:
    """One row of a ranking.

    ``counts`` are raw per-grade counts, best grade first.  The optional
    fields are method-specific: ``block`` for the approval procedure,
    ``majority_grade`` for majority judgement, ``score``/``tiebreak`` for the
    three-grade score form.
    """

    rank: int
    candidate: str
    name: str
    counts: tuple[int, ...]
    block: Block | None = None
    majority_grade: str | None = None
    score: int | None = None
    tiebreak: int | None = None


@dataclass(frozen=True)
class RankedResult:
    """Final ranking of one election.

    ``tie_groups`` lists every maximal group of candidates with identical
    grade profiles (groups of size >= 2 only), members in registration order.
    ``rejected`` is used by the approval procedure when no candidate clears
    the majority-approval threshold.
    """

    method: str
    scale: GradeScale
    n_voters: int
    entries: tuple[RankedEntry, ...]
    tie_groups: tuple[tuple[str, ...], ...] = field(default_factory=tuple)
    rejected: bool = False

    @property
    def order(self) -> tuple[str, ...]:
        """Candidate ids, best first (ties in registration order)."""
        return tuple(e.candidate for e in self.entries)

    @property
    def winner(self) -> str | None:
        """The unique rank-1 candidate, or None if rejected or tied at the top."""
        if self.rejected or not self.entries:
            return None
        top = self.entries[0].candidate
        for group in self.tie_groups:
            if top in group:
                return None
        return top


def competition_ranks(tie_keys: Sequence[object]) -> tuple[list[int], list[list[int]]]:
    """Ranks ("1224" style) for an already-sorted sequence.

    ``tie_keys[i]`` identifies the equivalence class of position ``i``; equal
    adjacent keys share a rank.  Returns (ranks, tie groups as position lists,
    size >= 2 only).
    """
    ranks: list[int] = []
    groups: list[list[int]] = []
    current: list[int] = []
    for pos, key in enumerate(tie_keys):
        if pos > 0 and key == tie_keys[pos - 1]:
            ranks.append(ranks[-1])
            current.append(pos)
        else:
            if len(current) > 1:
                groups.append(current)
            current = [pos]
            ranks.append(pos + 1)
    if len(current) > 1:
        groups.append(current)
    return ranks, groups
