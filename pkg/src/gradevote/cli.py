"""Command-line surface.

Three verbs:

* ``gradevote tally`` — run one election from a config and a ballot file.
* ``gradevote check`` — run the property harness against an election:
  participation (no-show) search, partition-consistency checks on three-grade
  scales, plus optional randomized sweeps.
* ``gradevote demo``  — tally a built-in fixture and optionally write its
  config and ballot files for further experiments.

Exit codes: 0 success, 1 validation failure, 2 configuration error,
3 property violation found by ``check``.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .approval import approval_rank, borderline_candidates
from .ballot_io import (
    ElectionConfig,
    ParseReport,
    REJECTED_BANNER,
    ballots_to_csv,
    bracket_ballots_to_json,
    config_to_json,
    load_config,
    parse_ballots,
    parse_bracket_ballots,
    render_bracket,
    render_result,
)
from .bracket import bracket_elect
from .core import Ballot, ConfigError, ElectionProfile, VoteError, build_profiles
from .fixtures import FIXTURES, load_fixture
from .mj import mj_rank
from .mj3 import mj3_rank
from .properties import (
    NoShowCounterexample,
    check_consistency,
    manipulation_probe,
    polarization_sweep,
    random_consistency_sweep,
    search_no_show,
)

RANKERS = {"mj": mj_rank, "mj3": mj3_rank, "approval3": approval_rank}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradevote",
        description="Grade-based election tallying and property checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tally = sub.add_parser("tally", help="tally one election")
    _common_flags(tally)
    tally.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="result rendering (default: table)",
    )
    tally.set_defaults(func=cmd_tally)

    check = sub.add_parser("check", help="run the property harness")
    _common_flags(check)
    check.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report rendering (default: text)",
    )
    check.add_argument(
        "--limit", type=int, default=None,
        help="exhaustive partition limit (default: config option, else 8)",
    )
    check.add_argument(
        "--samples", type=int, default=None,
        help="sample this many random partitions when above the limit",
    )
    check.add_argument(
        "--seed", type=int, default=None,
        help="seed for randomized property sweeps",
    )
    check.add_argument(
        "--random", type=int, default=0, metavar="N",
        help="additionally run N random-instance consistency and polarization sweeps",
    )
    check.add_argument(
        "--probe", metavar="VOTER",
        help="probe one voter's alternative ballots (informational)",
    )
    check.set_defaults(func=cmd_check)

    demo = sub.add_parser("demo", help="tally a built-in fixture")
    demo.add_argument(
        "name", nargs="?",
        help="fixture name; omit to list the available fixtures",
    )
    demo.add_argument(
        "--outdir", help="also write the fixture's config and ballot files here"
    )
    demo.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="result rendering (default: table)",
    )
    demo.set_defaults(func=cmd_demo)
    return parser


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="election config JSON")
    sub.add_argument(
        "--method", choices=tuple(RANKERS) + ("bracket",),
        help="tallying method (overrides the config's)",
    )
    sub.add_argument("--ballots", help="ballot file (CSV or JSON, or '-' for stdin)")


def _resolve_config(args: argparse.Namespace) -> ElectionConfig:
    if args.config:
        config = load_config(args.config)
        if args.method and args.method != config.method:
            config = ElectionConfig(
                method=args.method,
                scale=config.scale,
                candidates=config.candidates,
                limit=config.limit,
                seed=config.seed,
            )
        return config
    if not args.method:
        raise ConfigError("pass --config or --method")
    return ElectionConfig(method=args.method, scale=None)


def _ballot_source(args: argparse.Namespace):
    if not args.ballots:
        raise ConfigError("pass --ballots (a CSV/JSON file, or '-' for stdin)")
    return sys.stdin if args.ballots == "-" else args.ballots


@dataclass
class _GradeElection:
    config: ElectionConfig
    ballots: list[Ballot]
    election: ElectionProfile
    report: ParseReport


def _load_grade_election(args: argparse.Namespace, config: ElectionConfig) -> _GradeElection:
    ballots, report, candidates = parse_ballots(
        _ballot_source(args), config.scale, config.candidates
    )
    _print_report(report)
    if not candidates:
        raise VoteError("no candidates registered or inferred from ballots")
    election = build_profiles(config.scale, candidates, ballots)
    return _GradeElection(config, ballots, election, report)


def _print_report(report: ParseReport) -> None:
    for issue in report.issues:
        where = f"row {issue.row}" if issue.row is not None else "input"
        voter = f" voter {issue.voter}" if issue.voter else ""
        print(f"warning: {where}{voter}: {issue.reason} (row rejected)",
              file=sys.stderr)
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)


def cmd_tally(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    if config.method == "bracket":
        if not config.candidates:
            raise ConfigError("bracket elections need candidates in the config")
        ballots, report = parse_bracket_ballots(
            _ballot_source(args), config.candidates
        )
        _print_report(report)
        result = bracket_elect(config.candidates, ballots)
        print(render_bracket(result, args.format), end="")
        return 0 if report.ok else 1
    loaded = _load_grade_election(args, config)
    result = RANKERS[config.method](loaded.election)
    print(render_result(result, args.format), end="")
    return 0 if loaded.report.ok else 1


def _describe_outcome(outcome) -> str:
    if outcome.kind == "winner":
        return outcome.winner
    if outcome.kind == "tie":
        return "tie(" + ", ".join(outcome.tied) + ")"
    return "rejected"


def _describe_counterexample(ce: NoShowCounterexample) -> str:
    grades = ", ".join(f"{cid}={label}" for cid, label in ce.grades.items())
    who = f" voter {ce.voter_id}" if ce.voter_id else ""
    return (
        f"{ce.kind}{who} ({grades}): "
        f"{_describe_outcome(ce.before)} -> {_describe_outcome(ce.after)}"
    )


def cmd_check(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    if config.method == "bracket":
        raise ConfigError(
            "the property harness covers grade methods (mj, mj3, approval3)"
        )
    loaded = _load_grade_election(args, config)
    election, ballots = loaded.election, loaded.ballots
    limit = args.limit if args.limit is not None else config.limit
    seed = args.seed if args.seed is not None else config.seed

    findings = 0
    report: dict = {
        "method": config.method,
        "n_voters": election.n_voters,
        "candidates": [c.id for c in election.candidates],
    }
    lines = [
        f"method: {config.method}  ballots: {election.n_voters}  "
        f"candidates: {len(election.candidates)}"
    ]

    counterexamples = search_no_show(election, ballots, method=config.method)
    findings += len(counterexamples)
    report["no_show"] = {
        "n_counterexamples": len(counterexamples),
        "counterexamples": [
            {
                "kind": ce.kind,
                "voter_id": ce.voter_id,
                "grades": dict(ce.grades),
                "before": _describe_outcome(ce.before),
                "after": _describe_outcome(ce.after),
            }
            for ce in counterexamples
        ],
    }
    lines.append(f"no-show search: {len(counterexamples)} counterexample(s)")
    lines.extend(f"  {_describe_counterexample(ce)}" for ce in counterexamples)

    if election.scale.size == 3 and election.n_voters >= 2:
        if election.n_voters <= limit or args.samples:
            consistency = check_consistency(
                election, ballots, limit=limit, samples=args.samples, seed=seed
            )
            findings += len(consistency.violations)
            report["consistency"] = {
                "n_partitions_checked": consistency.n_partitions_checked,
                "n_premise_satisfied": consistency.n_premise_satisfied,
                "n_violations": len(consistency.violations),
                "sampled": consistency.sampled,
            }
            lines.append(
                f"consistency: {consistency.n_partitions_checked} partitions, "
                f"{consistency.n_premise_satisfied} matched the premise, "
                f"{len(consistency.violations)} violation(s)"
                + (" [sampled]" if consistency.sampled else "")
            )
        else:
            report["consistency"] = None
            lines.append(
                f"consistency: skipped ({election.n_voters} ballots exceed the "
                f"limit of {limit}; raise --limit or pass --samples)"
            )
    else:
        report["consistency"] = None
        lines.append("consistency: skipped (needs a 3-grade scale and 2+ ballots)")

    if config.method == "approval3":
        result = approval_rank(election)
        borderline = borderline_candidates(result)
        report["borderline"] = list(borderline)
        for cid in borderline:
            lines.append(f"borderline: {cid} approved by exactly half the electorate")
        if result.rejected:
            lines.append(REJECTED_BANNER)

    if args.random:
        sweep = random_consistency_sweep(args.random, seed=seed)
        polarization = polarization_sweep(args.random, seed=seed)
        findings += len(sweep.violations) + len(polarization)
        report["random_sweeps"] = {
            "n_instances": args.random,
            "consistency_partitions": sweep.n_partitions_checked,
            "consistency_violations": len(sweep.violations),
            "polarization_violations": len(polarization),
        }
        lines.append(
            f"random sweeps: {args.random} instances, "
            f"{sweep.n_partitions_checked} partitions, "
            f"{len(sweep.violations) + len(polarization)} violation(s)"
        )

    if args.probe:
        probe = manipulation_probe(
            election, ballots, args.probe, method=config.method
        )
        report["probe"] = {
            "voter_id": probe.voter_id,
            "honest_winner": probe.honest_winner,
            "n_alternatives": probe.n_alternatives,
            "improving": [
                {"grades": dict(d.grades), "winner": d.winner}
                for d in probe.improving
            ],
        }
        lines.append(
            f"probe {probe.voter_id}: {len(probe.improving)} improving deviation(s) "
            f"out of {probe.n_alternatives} (informational)"
        )

    violations_found = findings > 0
    report["violations_found"] = violations_found
    lines.append(
        "result: PROPERTY VIOLATIONS FOUND" if violations_found else "result: ok"
    )
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))
    if not loaded.report.ok:
        return 1
    return 3 if violations_found else 0


def cmd_demo(args: argparse.Namespace) -> int:
    if not args.name:
        for name in FIXTURES:
            fixture = load_fixture(name)
            print(f"{name:13s} {fixture.method:10s} {fixture.notes}")
        return 0
    try:
        fixture = load_fixture(args.name)
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from None

    if fixture.method == "bracket":
        result = bracket_elect(fixture.candidates, fixture.bracket_ballots)
        rendered = render_bracket(result, args.format)
    else:
        election = build_profiles(fixture.scale, fixture.candidates, fixture.ballots)
        rendered = render_result(RANKERS[fixture.method](election), args.format)
    print(rendered, end="")

    if args.outdir:
        outdir = Path(args.outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        config = ElectionConfig(
            method=fixture.method, scale=fixture.scale, candidates=fixture.candidates
        )
        config_path = outdir / f"{fixture.name}.config.json"
        config_path.write_text(config_to_json(config), encoding="utf-8")
        if fixture.method == "bracket":
            ballots_path = outdir / f"{fixture.name}.ballots.json"
            ballots_path.write_text(
                bracket_ballots_to_json(fixture.bracket_ballots), encoding="utf-8"
            )
        else:
            ballots_path = outdir / f"{fixture.name}.ballots.csv"
            ballots_path.write_text(ballots_to_csv(fixture.ballots), encoding="utf-8")
        print(f"wrote {config_path}", file=sys.stderr)
        print(f"wrote {ballots_path}", file=sys.stderr)
    return 0


def main(argv: "list[str] | None" = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VoteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
