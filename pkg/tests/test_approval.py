"""Strong/weak approval blocks and ranking."""

import functools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gradevote import (
    APPROVAL_SCALE,
    ApprovalTally,
    Block,
    Candidate,
    ConfigError,
    GradeScale,
    approval_rank,
    borderline_candidates,
    build_profiles,
    classify_block,
    election_from_counts,
    mj3_rank,
)
from gradevote.fixtures import greater_smalltown
from gradevote.mj3 import MJ3_SCALE_LABELS

SCALE3 = GradeScale(MJ3_SCALE_LABELS)

tallies = st.tuples(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40)).map(
    lambda t: ApprovalTally(*t)
)


def test_block_classification():
    assert classify_block(ApprovalTally(50, 20, 30)) is Block.STRONG_MAJORITY
    assert classify_block(ApprovalTally(10, 80, 10)) is Block.ELECTABLE
    assert classify_block(ApprovalTally(16, 1, 83)) is Block.UNELECTABLE
    assert classify_block(ApprovalTally(0, 0, 7)) is Block.UNELECTABLE


def test_block_labels():
    assert Block.STRONG_MAJORITY.value == "strong_majority"
    assert Block.ELECTABLE.value == "electable"
    assert Block.UNELECTABLE.value == "unelectable"


@given(tallies)
def test_strong_majority_implies_electable_threshold(tally):
    if classify_block(tally) is Block.STRONG_MAJORITY:
        assert 2 * tally.a_any > tally.n_total


@given(tallies)
def test_exactly_one_block(tally):
    block = classify_block(tally)
    strong = tally.a_strong > tally.n_none
    everyday = 2 * tally.a_any > tally.n_total
    if strong:
        assert block is Block.STRONG_MAJORITY
    elif everyday:
        assert block is Block.ELECTABLE
    else:
        assert block is Block.UNELECTABLE


# ---------------------------------------------------------------------------
# town fixture
# ---------------------------------------------------------------------------

def _town_result():
    fx = greater_smalltown()
    election = build_profiles(fx.scale, fx.candidates, fx.ballots)
    return approval_rank(election)


def test_town_order_and_blocks():
    result = _town_result()
    assert result.order == ("cathy", "jenny", "elsa", "belinda", "ines", "uma")
    blocks = [entry.block for entry in result.entries]
    assert blocks == [
        Block.STRONG_MAJORITY,
        Block.STRONG_MAJORITY,
        Block.STRONG_MAJORITY,
        Block.ELECTABLE,
        Block.ELECTABLE,
        Block.UNELECTABLE,
    ]
    assert not result.rejected
    assert result.winner == "cathy"
    assert result.entries[0].counts == (50, 20, 30)
    assert result.entries[-1].counts == (16, 1, 83)


def test_town_has_no_borderline_candidates():
    assert borderline_candidates(_town_result()) == ()


# ---------------------------------------------------------------------------
# rejection and edge cases
# ---------------------------------------------------------------------------

def _approval_election(counts_by_id):
    candidates = [Candidate(cid) for cid in counts_by_id]
    return election_from_counts(APPROVAL_SCALE, candidates, counts_by_id)


def test_everyone_below_majority_rejects_the_ballot():
    result = approval_rank(
        _approval_election({"a": (1, 0, 4), "b": (0, 2, 3)})
    )
    assert result.rejected
    assert result.winner is None
    # the ranking itself is still reported
    assert result.order == ("b", "a")
    assert all(e.block is Block.UNELECTABLE for e in result.entries)


def test_exact_half_is_not_elected_but_flagged():
    result = approval_rank(
        _approval_election({"a": (1, 1, 2), "b": (0, 1, 3)})
    )
    assert result.rejected
    assert borderline_candidates(result) == ("a",)


def test_single_unanimous_candidate():
    result = approval_rank(_approval_election({"a": (3, 0, 0)}))
    assert result.winner == "a"
    assert result.entries[0].block is Block.STRONG_MAJORITY


def test_identical_tallies_tie():
    result = approval_rank(
        _approval_election({"a": (2, 1, 1), "b": (2, 1, 1)})
    )
    assert result.tie_groups == (("a", "b"),)
    assert result.winner is None


def test_requires_approval_scale():
    election = election_from_counts(
        SCALE3, [Candidate("a")], {"a": (1, 0, 0)}
    )
    with pytest.raises(ConfigError):
        approval_rank(election)


# ---------------------------------------------------------------------------
# oracle: comparison sort with an independently written comparator
# ---------------------------------------------------------------------------

def _oracle_order(counts_by_id):
    def compare(x, y):
        (_, (xs, xw, xn)), (_, (ys, yw, yn)) = x, y
        x_sm, y_sm = xs > xn, ys > yn
        if x_sm != y_sm:
            return -1 if x_sm else 1
        if x_sm:
            key_x, key_y = (xs, xs + xw), (ys, ys + yw)
        else:
            key_x, key_y = (xs + xw, xs), (ys + yw, ys)
        if key_x == key_y:
            return 0
        return -1 if key_x > key_y else 1

    items = list(counts_by_id.items())
    # stable sort keeps registration order inside equal keys
    return tuple(cid for cid, _ in sorted(items, key=functools.cmp_to_key(compare)))


def test_ranking_matches_comparator_oracle_on_seeded_draws():
    rng = random.Random(926)
    for _ in range(120):
        n_candidates = rng.randint(1, 10)
        counts_by_id = {}
        for i in range(n_candidates):
            strong = rng.randint(0, 6)
            weak = rng.randint(0, 6)
            none = rng.randint(0, 6)
            counts_by_id[f"c{i:02d}"] = (strong, weak, none)
        total = max(sum(c) for c in counts_by_id.values())
        counts_by_id = {
            cid: (s, w, n + total - (s + w + n))
            for cid, (s, w, n) in counts_by_id.items()
        }
        result = approval_rank(_approval_election(counts_by_id))
        assert result.order == _oracle_order(counts_by_id)


@st.composite
def same_total_tallies(draw, max_candidates=5, total=8):
    n = draw(st.integers(1, max_candidates))
    out = {}
    for i in range(n):
        strong = draw(st.integers(0, total))
        weak = draw(st.integers(0, total - strong))
        out[f"c{i}"] = (strong, weak, total - strong - weak)
    return out


@settings(max_examples=250, deadline=None)
@given(same_total_tallies())
def test_ranking_agrees_with_score_pairs_everywhere(counts_by_id):
    """strong/weak/none ranking == score-pair ranking on relabeled grades."""
    by_approval = approval_rank(_approval_election(counts_by_id))
    candidates = [Candidate(cid) for cid in counts_by_id]
    by_score = mj3_rank(election_from_counts(SCALE3, candidates, counts_by_id))
    assert by_approval.order == by_score.order
    assert by_approval.tie_groups == by_score.tie_groups


@given(same_total_tallies())
def test_rejected_iff_no_majority_approval(counts_by_id):
    result = approval_rank(_approval_election(counts_by_id))
    has_majority = any(
        2 * (s + w) > (s + w + n) for s, w, n in counts_by_id.values()
    )
    assert result.rejected == (not has_majority)
    if result.rejected:
        assert result.winner is None
