#!/usr/bin/env python3
"""Render every built-in fixture, optionally writing its wire-format files.

Prints each fixture's tallied result (table format by default) and, with
--outdir, writes the matching config + ballots files that `gradevote tally`
accepts, so the fixtures double as ready-made CLI examples.
"""

import argparse
from pathlib import Path

from gradevote import bracket_elect, build_profiles
from gradevote.ballot_io import (
    ElectionConfig,
    ballots_to_csv,
    bracket_ballots_to_json,
    config_to_json,
    render_bracket,
    render_result,
)
from gradevote.cli import RANKERS
from gradevote.fixtures import fixture_names, load_fixture


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    parser.add_argument(
        "--outdir", help="also write config/ballot files for each fixture"
    )
    args = parser.parse_args(argv)

    for name in fixture_names():
        fixture = load_fixture(name)
        print(f"== {name}: {fixture.notes}")
        if fixture.method == "bracket":
            result = bracket_elect(fixture.candidates, fixture.bracket_ballots)
            print(render_bracket(result, args.format), end="")
        else:
            election = build_profiles(
                fixture.scale, fixture.candidates, fixture.ballots
            )
            print(render_result(RANKERS[fixture.method](election), args.format), end="")
        print()
        if args.outdir:
            _write_wire_files(fixture, Path(args.outdir))
    return 0


def _write_wire_files(fixture, outdir):
    outdir.mkdir(parents=True, exist_ok=True)
    config = ElectionConfig(
        method=fixture.method, scale=fixture.scale, candidates=fixture.candidates
    )
    (outdir / f"{fixture.name}.config.json").write_text(
        config_to_json(config), encoding="utf-8"
    )
    if fixture.method == "bracket":
        ballots = bracket_ballots_to_json(fixture.bracket_ballots)
        path = outdir / f"{fixture.name}.ballots.json"
    else:
        ballots = ballots_to_csv(fixture.ballots)
        path = outdir / f"{fixture.name}.ballots.csv"
    path.write_text(ballots, encoding="utf-8")
    print(f"wrote {outdir / (fixture.name + '.config.json')} and {path}")


if __name__ == "__main__":
    raise SystemExit(main())
