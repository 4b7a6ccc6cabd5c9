"""Command-line front end: validate inputs, derate a fleet, run scenario sweeps.

Exit codes: 0 success, 1 validation failures, 2 IO/schema errors,
3 compute errors. Set DROUGHTCAP_LOG=DEBUG|INFO|WARNING to control
verbosity.
"""

import csv
import logging
import os
import sys
from datetime import date
from pathlib import Path

import click

from .aggregate import derate_fleet, write_report_csv, write_summary_json
from .errors import DroughtcapError, FleetValidationError
from .fleet import load_fleet, validate_fleet
from .scenario import apply_to_registry, load_scenarios, standard_scenarios

log = logging.getLogger("droughtcap")

EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_COMPUTE = 3


def _iso_date(_ctx, param, value):
    if value is None:
        return None
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise click.BadParameter(f"{param.name} must be an ISO date, got {value!r}")


def _input_options(fn):
    for opt in reversed([
        click.option("--fleet", "fleet_path", required=True,
                     type=click.Path(path_type=Path), help="fleet.csv path"),
        click.option("--hydrology", "hydrology_path", type=click.Path(path_type=Path),
                     help="hydrology.csv path (default: next to fleet.csv)"),
        click.option("--weather", "weather_path", type=click.Path(path_type=Path),
                     help="weather.csv path (default: next to fleet.csv)"),
        click.option("--curves", "curves_path", type=click.Path(path_type=Path),
                     help="wind curves.csv path (default: packaged curves)"),
    ]):
        fn = opt(fn)
    return fn


def _run_options(fn):
    for opt in reversed([
        click.option("--start", required=True, callback=_iso_date,
                     help="first day, ISO date"),
        click.option("--end", required=True, callback=_iso_date,
                     help="last day, ISO date (inclusive)"),
        click.option("--out", "out_dir", required=True,
                     type=click.Path(path_type=Path), help="output directory"),
        click.option("--jobs", default=1, show_default=True,
                     type=click.IntRange(min=1), help="parallel workers"),
        click.option("--no-regulatory-limit", is_flag=True,
                     help="drop the once-through discharge temperature limit"),
    ]):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Daily drought capacity derating for generating fleets."""
    level = os.environ.get("DROUGHTCAP_LOG", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )


def _load(fleet_path, hydrology_path, weather_path, curves_path):
    try:
        return load_fleet(
            fleet_path,
            hydrology_path=hydrology_path,
            weather_path=weather_path,
            curves_path=curves_path,
        )
    except FleetValidationError as exc:
        click.echo(f"input validation failed:\n{exc}", err=True)
        sys.exit(EXIT_IO)
    except OSError as exc:
        click.echo(f"cannot read inputs: {exc}", err=True)
        sys.exit(EXIT_IO)


def _check_range(start, end):
    if start > end:
        raise click.UsageError(f"--start {start} is after --end {end}")


@main.command()
@_input_options
@_run_options
def derate(fleet_path, hydrology_path, weather_path, curves_path,
           start, end, out_dir, jobs, no_regulatory_limit):
    """Compute daily usable capacity and write report.csv + summary.json."""
    _check_range(start, end)
    reg = _load(fleet_path, hydrology_path, weather_path, curves_path)
    try:
        report = derate_fleet(
            reg, start, end, no_regulatory_limit=no_regulatory_limit, jobs=jobs
        )
    except DroughtcapError as exc:
        click.echo(f"derating failed: {exc}", err=True)
        sys.exit(EXIT_COMPUTE)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_report_csv(report, out_dir / "report.csv")
    write_summary_json(report, out_dir / "summary.json")
    log.info("wrote %s and %s", out_dir / "report.csv", out_dir / "summary.json")


@main.command()
@_input_options
@_run_options
@click.option("--scenarios", "scenarios_path", type=click.Path(path_type=Path),
              help="scenarios TOML (default: baseline, C1-C3, R10-R30)")
@click.option("--water-temp-response", default=0.6, show_default=True,
              help="degC of water temperature per degC of air uplift for the "
                   "built-in sweep (a scenarios file carries its own values)")
def scenario(fleet_path, hydrology_path, weather_path, curves_path,
             start, end, out_dir, jobs, no_regulatory_limit, scenarios_path,
             water_temp_response):
    """Run a scenario sweep: one report set per scenario plus a summary table."""
    _check_range(start, end)
    reg = _load(fleet_path, hydrology_path, weather_path, curves_path)
    try:
        scenarios = (
            load_scenarios(scenarios_path) if scenarios_path
            else standard_scenarios(water_temp_response)
        )
    except (DroughtcapError, OSError) as exc:
        click.echo(f"cannot read scenarios: {exc}", err=True)
        sys.exit(EXIT_IO)

    rows = []
    for s in scenarios:
        try:
            report = derate_fleet(
                apply_to_registry(reg, s), start, end,
                no_regulatory_limit=no_regulatory_limit, jobs=jobs,
            )
        except DroughtcapError as exc:
            click.echo(f"scenario {s.name!r} failed: {exc}", err=True)
            sys.exit(EXIT_COMPUTE)
        scen_dir = out_dir / s.name
        scen_dir.mkdir(parents=True, exist_ok=True)
        write_report_csv(report, scen_dir / "report.csv")
        write_summary_json(report, scen_dir / "summary.json")
        for cat in sorted(report.summary):
            rows.append([s.name, cat, f"{report.summary[cat]['median_cf']:.6f}"])
        log.info("scenario %s done", s.name)

    with (out_dir / "scenario_summary.csv").open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["scenario", "category", "median_cf"])
        writer.writerows(rows)


@main.command()
@_input_options
def validate(fleet_path, hydrology_path, weather_path, curves_path):
    """Check input files against the schemas and invariants; no compute."""
    try:
        problems = validate_fleet(
            fleet_path,
            hydrology_path=hydrology_path,
            weather_path=weather_path,
            curves_path=curves_path,
        )
    except OSError as exc:
        click.echo(f"cannot read inputs: {exc}", err=True)
        sys.exit(EXIT_IO)
    for p in problems:
        click.echo(str(p))
    if problems:
        click.echo(f"{len(problems)} problem(s) found", err=True)
        sys.exit(EXIT_VALIDATION)
    click.echo("inputs are valid")


if __name__ == "__main__":
    main()
