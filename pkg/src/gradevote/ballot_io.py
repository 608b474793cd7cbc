"""Ballot ingestion, election configuration, and result rendering.

Wire formats:

* Ballots, CSV (long format): header ``voter_id,candidate,grade``, one graded
  candidate per row, UTF-8.  A voter's unmentioned candidates complete to the
  worst grade, so approval-style ballots only list what the voter marked.
* Ballots, JSON: list of ``{"voter_id": ..., "grades": {candidate: grade}}``.
* Bracket ballots, JSON: list of ``{"voter_id": ..., "accept": bool,
  "choices": ["upper"|"lower", ...]}`` with one choice per internal node of
  the halving tree, in preorder.  (Long-format CSV cannot carry per-node
  marks, so brackets are JSON-only.)
* Election config, JSON: ``{"method": ..., "scale": [...], "candidates":
  [{"id", "name", "party", "profession"}], "options": {"limit", "seed"}}``.
* Results: a text table mirroring the classic presentation (rank, candidate,
  one percentage column per grade, double rules at block boundaries), or JSON
  / CSV documents carrying exact counts.  Table percentages are rounded
  half-up to whole percent; machine formats are never rounded.

Row-level problems (unknown grade, unknown candidate, duplicate marks) reject
the row and are reported; they never silently drop a voter's other valid
rows.  File-level problems (unreadable input, malformed header) raise.
"""

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .approval import APPROVAL_SCALE, borderline_candidates
from .bracket import BracketBallot, BracketResult, bracket_tree
from .core import (
    Ballot,
    Candidate,
    ConfigError,
    GradeScale,
    ValidationError,
)
from .mj3 import MJ3_SCALE_LABELS
from .results import Block, RankedEntry, RankedResult

METHODS = ("mj", "mj3", "approval3", "bracket")

BALLOT_CSV_HEADER = ("voter_id", "candidate", "grade")

REJECTED_BANNER = "ballot rejected: no candidate reached majority approval"


# --------------------------------------------------------------------------
# election configuration
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ElectionConfig:
    """Everything needed to reproduce one tally."""

    method: str
    scale: GradeScale | None
    candidates: tuple[Candidate, ...] = ()
    limit: int = 8
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ConfigError(
                f"unknown method {self.method!r}; expected one of {METHODS}"
            )
        object.__setattr__(self, "scale", _resolve_scale(self.method, self.scale))
        if self.limit < 2:
            raise ConfigError("exhaustive limit must be at least 2")


def _resolve_scale(method: str, scale: GradeScale | None) -> GradeScale | None:
    if method == "bracket":
        return None  # grades play no role
    if method == "approval3":
        if scale is not None and scale != APPROVAL_SCALE:
            raise ConfigError(
                f"method approval3 uses the fixed scale {APPROVAL_SCALE.labels!r}"
            )
        return APPROVAL_SCALE
    if method == "mj3":
        if scale is None:
            return GradeScale(MJ3_SCALE_LABELS)
        if scale.size != 3:
            raise ConfigError("method mj3 needs a 3-grade scale")
        return scale
    return scale if scale is not None else GradeScale(MJ3_SCALE_LABELS)


def load_config(source: "str | Path | io.TextIOBase") -> ElectionConfig:
    """Load an :class:`ElectionConfig` from a JSON document."""
    try:
        document = json.loads(_read_text(source))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise ConfigError("config must be a JSON object")
    known = {"method", "scale", "candidates", "options"}
    unknown = sorted(set(document) - known)
    if unknown:
        raise ConfigError(f"unknown config keys {unknown!r}")
    method = document.get("method")
    if not isinstance(method, str):
        raise ConfigError("config needs a string 'method'")
    scale = None
    if "scale" in document:
        labels = document["scale"]
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ConfigError("'scale' must be a list of grade labels")
        scale = GradeScale(tuple(labels))
    candidates = []
    for i, row in enumerate(document.get("candidates", [])):
        if not isinstance(row, dict) or not isinstance(row.get("id"), str):
            raise ConfigError(f"candidate #{i + 1} needs a string 'id'")
        candidates.append(
            Candidate(
                id=row["id"],
                name=row.get("name", ""),
                party=row.get("party"),
                profession=row.get("profession"),
            )
        )
    options = document.get("options", {})
    if not isinstance(options, dict):
        raise ConfigError("'options' must be an object")
    return ElectionConfig(
        method=method,
        scale=scale,
        candidates=tuple(candidates),
        limit=int(options.get("limit", 8)),
        seed=options.get("seed"),
    )


def config_to_json(config: ElectionConfig) -> str:
    document: dict = {"method": config.method}
    if config.scale is not None:
        document["scale"] = list(config.scale.labels)
    document["candidates"] = [
        {
            "id": c.id,
            "name": c.name,
            **({"party": c.party} if c.party else {}),
            **({"profession": c.profession} if c.profession else {}),
        }
        for c in config.candidates
    ]
    document["options"] = {"limit": config.limit}
    if config.seed is not None:
        document["options"]["seed"] = config.seed
    return json.dumps(document, indent=2) + "\n"


# --------------------------------------------------------------------------
# ballot parsing
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ParseIssue:
    """One rejected row/entry and why."""

    row: int | None
    voter: str | None
    reason: str


@dataclass
class ParseReport:
    """What happened while reading a ballot file."""

    n_rows: int = 0
    n_ballots: int = 0
    issues: list[ParseIssue] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues


def _read_text(source: "str | Path | io.TextIOBase") -> str:
    if hasattr(source, "read"):
        return source.read()
    return Path(source).read_text(encoding="utf-8")


def _looks_like_json(text: str) -> bool:
    head = text.lstrip()[:1]
    return head in ("[", "{")


def parse_ballots(
    source: "str | Path | io.TextIOBase",
    scale: GradeScale,
    candidates: Sequence[Candidate] = (),
) -> tuple[list[Ballot], ParseReport, tuple[Candidate, ...]]:
    """Read graded ballots from CSV or JSON.

    With registered ``candidates``, rows naming anyone else are rejected;
    without, candidates are inferred in first-appearance order.  Returns the
    ballots (voters in first-appearance order), the parse report, and the
    candidate roster actually in effect.
    """
    text = _read_text(source)
    if isinstance(source, (str, Path)) and str(source).endswith(".json"):
        json_input = True
    else:
        json_input = _looks_like_json(text) and text.strip() != ""
    if json_input:
        return _parse_ballots_json(text, scale, candidates)
    return _parse_ballots_csv(text, scale, candidates)


def _parse_ballots_csv(
    text: str, scale: GradeScale, candidates: Sequence[Candidate]
) -> tuple[list[Ballot], ParseReport, tuple[Candidate, ...]]:
    report = ParseReport()
    rows = [r for r in csv.reader(io.StringIO(text))]
    if not rows:
        report.notes.append("empty input: no ballots")
        return [], report, tuple(candidates)
    header = tuple(cell.strip() for cell in rows[0])
    if header != BALLOT_CSV_HEADER:
        raise ValidationError(
            f"malformed header {header!r}; expected {BALLOT_CSV_HEADER!r}"
        )
    registered = {c.id: c for c in candidates}
    infer = not registered
    roster: dict[str, Candidate] = dict(registered)
    grades: dict[str, dict[str, str]] = {}
    for line_no, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        report.n_rows += 1
        if len(row) != 3:
            report.issues.append(
                ParseIssue(line_no, None, f"expected 3 fields, got {len(row)}")
            )
            continue
        voter, cid, grade = (cell.strip() for cell in row)
        if not voter:
            report.issues.append(ParseIssue(line_no, None, "empty voter_id"))
            continue
        if infer and cid and cid not in roster:
            roster[cid] = Candidate(cid)
        if cid not in roster:
            report.issues.append(
                ParseIssue(line_no, voter, f"unknown candidate {cid!r}")
            )
            continue
        if grade not in scale.labels:
            report.issues.append(
                ParseIssue(line_no, voter, f"unknown grade {grade!r}")
            )
            continue
        ballot = grades.setdefault(voter, {})
        if cid in ballot:
            report.issues.append(
                ParseIssue(line_no, voter, f"duplicate grade for candidate {cid!r}")
            )
            continue
        ballot[cid] = grade
    if report.n_rows == 0:
        report.notes.append("empty input: no ballots")
    ballots = [Ballot(voter, dict(g)) for voter, g in grades.items()]
    _flag_blank_ballots(ballots, report)
    report.n_ballots = len(ballots)
    return ballots, report, tuple(roster.values())


def _parse_ballots_json(
    text: str, scale: GradeScale, candidates: Sequence[Candidate]
) -> tuple[list[Ballot], ParseReport, tuple[Candidate, ...]]:
    report = ParseReport()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"ballots are not valid JSON: {exc}") from None
    if not isinstance(document, list):
        raise ValidationError("JSON ballots must be a list of objects")
    registered = {c.id: c for c in candidates}
    infer = not registered
    roster: dict[str, Candidate] = dict(registered)
    ballots: list[Ballot] = []
    seen: set[str] = set()
    for index, entry in enumerate(document, start=1):
        report.n_rows += 1
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("voter_id"), str)
            or not isinstance(entry.get("grades", {}), dict)
        ):
            report.issues.append(
                ParseIssue(index, None, "entry needs 'voter_id' and 'grades' object")
            )
            continue
        voter = entry["voter_id"]
        if voter in seen:
            report.issues.append(ParseIssue(index, voter, "duplicate voter_id"))
            continue
        seen.add(voter)
        kept: dict[str, str] = {}
        for cid, grade in entry.get("grades", {}).items():
            if infer and cid not in roster:
                roster[cid] = Candidate(cid)
            if cid not in roster:
                report.issues.append(
                    ParseIssue(index, voter, f"unknown candidate {cid!r}")
                )
                continue
            if not isinstance(grade, str) or grade not in scale.labels:
                report.issues.append(
                    ParseIssue(index, voter, f"unknown grade {grade!r}")
                )
                continue
            kept[cid] = grade
        ballots.append(Ballot(voter, kept))
    if not document:
        report.notes.append("empty input: no ballots")
    _flag_blank_ballots(ballots, report)
    report.n_ballots = len(ballots)
    return ballots, report, tuple(roster.values())


def _flag_blank_ballots(ballots: Sequence[Ballot], report: ParseReport) -> None:
    blank = [b.voter_id for b in ballots if not b.grades]
    if blank:
        report.notes.append(
            "ballots grading no candidate (count at the worst grade everywhere): "
            + ", ".join(blank)
        )


def ballots_to_csv(ballots: Sequence[Ballot]) -> str:
    """Serialize graded ballots in the long CSV format.

    A ballot grading no candidate has no rows to write and would silently
    vanish from the electorate on re-parse, so blank ballots are refused here;
    give them one explicit worst-grade row, or use the JSON format.
    """
    blank = [b.voter_id for b in ballots if not b.grades]
    if blank:
        raise ValidationError(
            f"blank ballots {blank!r} cannot be expressed in long CSV; "
            f"write an explicit worst-grade row or use JSON"
        )
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BALLOT_CSV_HEADER)
    for ballot in ballots:
        for cid, grade in ballot.grades.items():
            writer.writerow([ballot.voter_id, cid, grade])
    return out.getvalue()


def parse_bracket_ballots(
    source: "str | Path | io.TextIOBase", candidates: Sequence[Candidate]
) -> tuple[list[BracketBallot], ParseReport]:
    """Read bracket ballots (JSON list) for a known candidate roster."""
    report = ParseReport()
    try:
        document = json.loads(_read_text(source))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bracket ballots are not valid JSON: {exc}") from None
    if not isinstance(document, list):
        raise ValidationError("bracket ballots must be a JSON list of objects")
    n_nodes = len(bracket_tree([c.id for c in candidates]))
    ballots: list[BracketBallot] = []
    seen: set[str] = set()
    for index, entry in enumerate(document, start=1):
        report.n_rows += 1
        if not isinstance(entry, dict) or not isinstance(entry.get("voter_id"), str):
            report.issues.append(ParseIssue(index, None, "entry needs 'voter_id'"))
            continue
        voter = entry["voter_id"]
        if voter in seen:
            report.issues.append(ParseIssue(index, voter, "duplicate voter_id"))
            continue
        accept = entry.get("accept")
        choices = entry.get("choices")
        if not isinstance(accept, bool):
            report.issues.append(ParseIssue(index, voter, "'accept' must be a boolean"))
            continue
        if (
            not isinstance(choices, list)
            or not all(c in ("upper", "lower") for c in choices)
        ):
            report.issues.append(
                ParseIssue(index, voter, "'choices' must list \"upper\"/\"lower\" marks")
            )
            continue
        if len(choices) != n_nodes:
            report.issues.append(
                ParseIssue(
                    index, voter, f"expected {n_nodes} half marks, got {len(choices)}"
                )
            )
            continue
        seen.add(voter)
        ballots.append(BracketBallot(voter, accept, tuple(choices)))
    if not document:
        report.notes.append("empty input: no ballots")
    report.n_ballots = len(ballots)
    return ballots, report


def bracket_ballots_to_json(ballots: Sequence[BracketBallot]) -> str:
    return json.dumps(
        [
            {"voter_id": b.voter_id, "accept": b.accept, "choices": list(b.half_choices)}
            for b in ballots
        ],
        indent=2,
    ) + "\n"


# --------------------------------------------------------------------------
# result rendering
# --------------------------------------------------------------------------

def percent_half_up(count: int, total: int) -> int:
    """Round 100*count/total half-up to a whole percent."""
    if total == 0:
        return 0
    return (200 * count + total) // (2 * total)


def _table(rows: list[list[str]], double_after: set[int]) -> str:
    """Plain text table; row indexes in ``double_after`` get a double rule below."""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for index, row in enumerate(rows):
        cells = [
            cell.ljust(widths[i]) if i in (0, 1) else cell.rjust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
        if index in double_after:
            lines.append("=" * (sum(widths) + 2 * (len(widths) - 1)))
    return "\n".join(lines)


def render_result(result: RankedResult, fmt: str = "table") -> str:
    """Render a ranking as ``table``, ``json``, or ``csv``."""
    if fmt == "table":
        return _render_table(result)
    if fmt == "json":
        return _render_json(result)
    if fmt == "csv":
        return _render_csv(result)
    raise ConfigError(f"unknown result format {fmt!r}")


def _extra_columns(result: RankedResult) -> list[tuple[str, object]]:
    if result.method == "mj":
        return [("majority", lambda e: e.majority_grade or "")]
    if result.method == "mj3":
        return [
            ("score", lambda e: str(e.score)),
            ("tiebreak", lambda e: str(e.tiebreak)),
        ]
    return []


def _render_table(result: RankedResult) -> str:
    headers = ["rank", "candidate", *result.scale.labels]
    extras = _extra_columns(result)
    headers += [name for name, _ in extras]
    rows = [headers]
    double_after = {0}
    for index, entry in enumerate(result.entries):
        rows.append(
            [
                str(entry.rank),
                entry.name,
                *(
                    str(percent_half_up(c, result.n_voters))
                    for c in entry.counts
                ),
                *(str(fetch(entry)) for _, fetch in extras),
            ]
        )
        nxt = (
            result.entries[index + 1] if index + 1 < len(result.entries) else None
        )
        if nxt is not None and entry.block is not None and nxt.block != entry.block:
            double_after.add(index + 1)
    lines = []
    if result.rejected:
        lines.append(REJECTED_BANNER)
    lines.append(_table(rows, double_after))
    for group in result.tie_groups:
        lines.append("tied: " + " = ".join(group))
    if result.method == "approval3":
        for cid in borderline_candidates(result):
            lines.append(
                f"borderline: {cid} approved by exactly half the electorate"
            )
    lines.append(f"{result.n_voters} ballots")
    return "\n".join(lines) + "\n"


def _render_json(result: RankedResult) -> str:
    document = {
        "method": result.method,
        "scale": list(result.scale.labels),
        "n_voters": result.n_voters,
        "rejected": result.rejected,
        "entries": [
            {
                "rank": e.rank,
                "candidate": e.candidate,
                "name": e.name,
                "counts": list(e.counts),
                "percent": [
                    percent_half_up(c, result.n_voters) for c in e.counts
                ],
                "block": e.block.value if e.block else None,
                "majority_grade": e.majority_grade,
                "score": e.score,
                "tiebreak": e.tiebreak,
            }
            for e in result.entries
        ],
        "tie_groups": [list(g) for g in result.tie_groups],
    }
    return json.dumps(document, indent=2) + "\n"


def parse_result_json(text: str) -> RankedResult:
    """Re-parse a JSON result document (inverse of the json renderer)."""
    document = json.loads(text)
    entries = tuple(
        RankedEntry(
            rank=e["rank"],
            candidate=e["candidate"],
            name=e["name"],
            counts=tuple(e["counts"]),
            block=Block(e["block"]) if e.get("block") else None,
            majority_grade=e.get("majority_grade"),
            score=e.get("score"),
            tiebreak=e.get("tiebreak"),
        )
        for e in document["entries"]
    )
    return RankedResult(
        method=document["method"],
        scale=GradeScale(tuple(document["scale"])),
        n_voters=document["n_voters"],
        entries=entries,
        tie_groups=tuple(tuple(g) for g in document["tie_groups"]),
        rejected=document["rejected"],
    )


def _render_csv(result: RankedResult) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["rank", "candidate", "name", *result.scale.labels,
         "block", "majority_grade", "score", "tiebreak"]
    )
    for e in result.entries:
        writer.writerow(
            [
                e.rank,
                e.candidate,
                e.name,
                *e.counts,
                e.block.value if e.block else "",
                e.majority_grade or "",
                "" if e.score is None else e.score,
                "" if e.tiebreak is None else e.tiebreak,
            ]
        )
    return out.getvalue()


def render_bracket(result: BracketResult, fmt: str = "table") -> str:
    """Render a bracket outcome as ``table``, ``json``, or ``csv``."""
    if fmt == "json":
        document = {
            "method": "bracket",
            "candidates": list(result.candidates),
            "accept": {
                "yes": result.accept_yes,
                "no": result.accept_no,
                "accepted": result.ballot_accepted,
            },
            "trace": [
                {
                    "candidates": list(d.node.candidates),
                    "upper": list(d.node.upper),
                    "lower": list(d.node.lower),
                    "votes_upper": d.votes_upper,
                    "votes_lower": d.votes_lower,
                    "chosen": d.chosen,
                    "tie": d.tie,
                }
                for d in result.elimination_trace
            ],
            "winner": result.winner,
        }
        return json.dumps(document, indent=2) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["step", "candidates", "votes_upper", "votes_lower", "chosen", "tie"]
        )
        for step, d in enumerate(result.elimination_trace, start=1):
            writer.writerow(
                [
                    step,
                    " ".join(d.node.candidates),
                    d.votes_upper,
                    d.votes_lower,
                    d.chosen,
                    "yes" if d.tie else "no",
                ]
            )
        writer.writerow(["winner", result.winner or "", "", "", "", ""])
        return out.getvalue()
    if fmt != "table":
        raise ConfigError(f"unknown result format {fmt!r}")
    lines = []
    if result.ballot_accepted:
        lines.append(
            f"ballot accepted ({result.accept_yes} yes, {result.accept_no} no)"
        )
    else:
        lines.append(
            f"ballot rejected ({result.accept_yes} yes, {result.accept_no} no): "
            "no winner"
        )
    rows = [["step", "candidates", "upper", "lower", "chosen"]]
    for step, d in enumerate(result.elimination_trace, start=1):
        rows.append(
            [
                str(step),
                " ".join(d.node.candidates),
                str(d.votes_upper),
                str(d.votes_lower),
                d.chosen + (" (tie)" if d.tie else ""),
            ]
        )
    lines.append(_table(rows, {0}))
    if result.winner is not None:
        lines.append(f"winner: {result.winner}")
    return "\n".join(lines) + "\n"
