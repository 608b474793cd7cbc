"""Majority judgement on an arbitrary ordered grade scale.

A candidate's majority grade is the lower middlemost of their ballots when
sorted best grade first (0-based position ``total // 2``).  Ties between
candidates sharing a majority grade are broken by iterated removal: repeatedly
take the current majority grade out of the profile and compare again.  The
whole removal sequence of one candidate is their *majority value*; comparing
majority values lexicographically (grade positions, best = 0) is equivalent to
running the pairwise iterated tie-break, and is how :func:`mj_rank` sorts.

Candidates whose removal sequences are exhausted while still identical — i.e.
with fully identical grade profiles — are reported as a tie group.
"""

from dataclasses import dataclass

from .core import ElectionProfile, GradeProfile, GradeScale, VoteError
from .results import RankedEntry, RankedResult, competition_ranks


@dataclass(frozen=True)
class MajorityGrade:
    """A majority grade as scale position (0 = best) plus its label."""

    index: int
    label: str


def _lower_median_index(counts: list[int], total: int) -> int:
    """Grade position of the lower middlemost ballot (best-first order)."""
    target = total // 2
    cumulative = 0
    for position, count in enumerate(counts):
        cumulative += count
        if cumulative > target:
            return position
    raise VoteError("profile counts do not cover the median position")


def majority_grade(profile: GradeProfile, scale: GradeScale) -> MajorityGrade:
    """The majority (median) grade of one candidate.  Needs at least one ballot."""
    if profile.total == 0:
        raise VoteError("majority grade undefined without ballots")
    index = _lower_median_index(list(profile.counts), profile.total)
    return MajorityGrade(index, scale.labels[index])


def majority_value(profile: GradeProfile) -> tuple[int, ...]:
    """The full iterated-removal sequence of grade positions.

    Element 0 is the majority grade; each later element is the majority grade
    after removing all previous elements, one ballot at a time.  Smaller is
    better, so candidates compare by lexicographic order of these tuples.
    """
    counts = list(profile.counts)
    total = profile.total
    sequence = []
    while total > 0:
        position = _lower_median_index(counts, total)
        sequence.append(position)
        counts[position] -= 1
        total -= 1
    return tuple(sequence)


def mj_rank(election: ElectionProfile) -> RankedResult:
    """Rank all candidates by majority judgement with the iterated tie-break."""
    if election.n_voters == 0:
        raise VoteError("cannot rank an election without ballots")
    values = [majority_value(p) for p in election.profiles]
    order = sorted(range(len(election.candidates)), key=lambda i: values[i])
    ranks, groups = competition_ranks([values[i] for i in order])
    entries = tuple(
        RankedEntry(
            rank=ranks[pos],
            candidate=election.candidates[i].id,
            name=election.candidates[i].name,
            counts=election.profiles[i].counts,
            majority_grade=election.scale.labels[values[i][0]],
        )
        for pos, i in enumerate(order)
    )
    tie_groups = tuple(
        tuple(election.candidates[order[pos]].id for pos in group)
        for group in groups
    )
    return RankedResult(
        method="mj",
        scale=election.scale,
        n_voters=election.n_voters,
        entries=entries,
        tie_groups=tie_groups,
    )
