"""Command-line surface: reproduce the reference evaluation, inspect
spaces and profiles, export analyses, sample sessions, run the service.

Human-readable tables go to stdout; machine formats only appear under
--out/--format so piping stays predictable. Exit codes: 0 success,
1 usage error, 2 data/validation error, 3 reproduction mismatch.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import enumeration
from .analysis import analyze, export
from .diversity import EmptyBucketError
from .model import InvalidDocument, Profile, ScenarioSpace
from .presets import BUILTIN_PROFILE_IDS, builtin_crosswalk_space, builtin_profile
from .rational import RationalFormatError, parse_rational
from .sampler import build_path, plan_to_doc
from .serialization import deserialize_profile, deserialize_space
from .store import UnknownProfile


class ReproMismatch(Exception):
    """Reference counts did not reproduce."""


def _load_space(space_file: str | None) -> ScenarioSpace:
    if space_file is None:
        return builtin_crosswalk_space()
    try:
        return deserialize_space(Path(space_file).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InvalidDocument(f"space file not found: {space_file}") from None


def _load_profile(ref: str, space: ScenarioSpace) -> Profile:
    if ref in BUILTIN_PROFILE_IDS:
        return builtin_profile(ref)
    path = Path(ref)
    if path.exists():
        return deserialize_profile(path.read_text(encoding="utf-8"), space)
    raise UnknownProfile(ref)


@click.group()
def cli():
    """Scenario engine for personalized crossing-training sessions."""


@cli.command()
@click.option("--space", "space_file", default=None, help="Space document (default: built-in).")
def schema(space_file):
    """Print the active scenario space."""
    space = _load_space(space_file)
    click.echo(f"features: {len(space.features)}   groups: {len(space.groups)}   "
               f"combinations: {space.combination_count()}")
    click.echo("")
    for feat in space.features:
        group = space.group_by_id(feat.group_id)
        values = ", ".join(
            f"{v}" + (f" ({feat.labels[i]})" if feat.labels else "")
            for i, v in enumerate(feat.values)
        )
        click.echo(f"  f{feat.feature_id:<3} {feat.name:<30} [{group.name}]")
        click.echo(f"       {values}")


@cli.command()
@click.option("--profile", "profile_ref", required=True, help="Built-in profile id or document path.")
@click.option("--fast", is_flag=True, help="Use the convolution counter (falls back if unsupported).")
@click.option("--space", "space_file", default=None)
def counts(profile_ref, fast, space_file):
    """Per-bucket scenario counts and totals for one profile."""
    space = _load_space(space_file)
    profile = _load_profile(profile_ref, space)
    if fast:
        result = enumeration.count_by_bucket(space, profile, prefer_fast=True)
    else:
        result = enumeration.count_by_bucket_bruteforce(space, profile)
    click.echo(f"{'k':>4} {'cd':>8} {'all':>12} {'profile':>12}")
    for k in range(result.k_max + 1):
        if result.count_all[k] == 0 and result.count_profile[k] == 0:
            continue
        cd = Fraction(k, result.k_max)
        click.echo(f"{k:>4} {float(cd):>8.3f} {result.count_all[k]:>12} {result.count_profile[k]:>12}")
    pct = 100.0 * result.total_profile / result.total_all
    click.echo(f"{result.total_profile} / {result.total_all} ({pct:.1f}%)")


@cli.command()
@click.option("--profile", "profile_ref", required=True)
@click.option("--exclude-constrained", is_flag=True, help="Drop features pinned by the constraint.")
@click.option("--space", "space_file", default=None)
def variance(profile_ref, exclude_constrained, space_file):
    """Per-feature value-evenness V by consistent difficulty."""
    space = _load_space(space_file)
    profile = _load_profile(profile_ref, space)
    result = analyze(space, profile, exclude_constrained=exclude_constrained)
    ids = [fid for fid, _ in result.feature_names]
    click.echo(f"{'cd':>8} " + " ".join(f"f{fid:<6}" for fid in ids))
    if result.curves:
        for i, (cd, _) in enumerate(result.curves[0].points):
            row = " ".join(f"{curve.points[i][1]:<7.4f}" for curve in result.curves)
            click.echo(f"{float(cd):>8.3f} {row}")
    if result.excluded_features:
        click.echo(f"excluded (constraint-pinned): {', '.join('f%d' % f for f in result.excluded_features)}")


@cli.command(name="analyze")
@click.option("--profile", "profile_ref", required=True)
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
@click.option("--format", "formats", default="csv,json,svg", help="Comma-separated: csv,json,svg.")
@click.option("--space", "space_file", default=None)
def analyze_cmd(profile_ref, out_dir, formats, space_file):
    """Write the full export set for one profile."""
    space = _load_space(space_file)
    profile = _load_profile(profile_ref, space)
    wanted = [f.strip() for f in formats.split(",") if f.strip()]
    for fmt in wanted:
        if fmt not in ("csv", "json", "svg"):
            raise click.UsageError(f"unknown format {fmt!r}")
    result = analyze(space, profile)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for fmt in wanted:
        path = out / f"{profile.profile_id}.{fmt}"
        export(result, fmt, path)
        click.echo(f"wrote {path}")


@cli.command()
@click.option("--profile", "profile_ref", required=True)
@click.option("--cd", "cd_target", required=True, help="Target consistent difficulty, e.g. 0.5 or 1/2.")
@click.option("--n", "count", default=1, show_default=True, help="Scenarios to sample.")
@click.option("--seed", default=0, show_default=True)
@click.option("--space", "space_file", default=None)
def sample(profile_ref, cd_target, count, seed, space_file):
    """Sample a diverse scenario set at one difficulty; plan JSON to stdout."""
    space = _load_space(space_file)
    profile = _load_profile(profile_ref, space)
    try:
        target = parse_rational(cd_target, "--cd")
    except RationalFormatError:
        try:
            target = Fraction(cd_target)
        except ValueError:
            raise click.UsageError(f"--cd {cd_target!r} is not a number") from None
    plan = build_path(space, profile, [target], per_level=count, seed=seed)
    substituted = {step.requested_cd for step in plan.steps if step.requested_cd is not None}
    for requested in sorted(substituted):
        used = next(s.cd for s in plan.steps if s.requested_cd == requested)
        click.echo(
            f"warning: no scenarios at cd={requested}; substituted nearest bucket cd={used}",
            err=True,
        )
    click.echo(json.dumps(plan_to_doc(plan, space), indent=2, ensure_ascii=False))


EXPECTED_COUNTS = {
    "profile-1": 290304,
    "profile-2-easy": 9216,
    "profile-2-medium": 31104,
    "profile-2-hard": 73728,
    "profile-3": 16384,
    "profile-4": 147456,
}

EXPECTED_TOTAL = 331776


@cli.command(name="paper-repro")
@click.option("--out", "out_dir", default="repro-out", show_default=True,
              type=click.Path(file_okay=False))
def paper_repro(out_dir):
    """Re-run the reference evaluation and verify the published totals."""
    space = builtin_crosswalk_space()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    failures = []
    click.echo(f"{'profile':<20} {'expected':>10} {'fast':>10} {'brute':>10}  result")
    for pid, expected in EXPECTED_COUNTS.items():
        profile = builtin_profile(pid)
        fast = enumeration.count_by_bucket_fast(space, profile)
        brute = enumeration.count_by_bucket_bruteforce(space, profile)
        ok = (
            fast.total_profile == expected
            and brute.total_profile == expected
            and fast == brute
            and fast.total_all == EXPECTED_TOTAL
        )
        if not ok:
            failures.append(pid)
        click.echo(
            f"{pid:<20} {expected:>10} {fast.total_profile:>10} {brute.total_profile:>10}  "
            f"{'PASS' if ok else 'FAIL'}"
        )

    for pid in ("profile-1", "profile-2", "profile-2-easy", "profile-2-medium",
                "profile-2-hard", "profile-3", "profile-4"):
        result = analyze(space, builtin_profile(pid))
        for fmt in ("csv", "json", "svg"):
            export(result, fmt, out / f"{pid}.{fmt}")
    click.echo(f"artifacts written to {out}")
    click.echo(
        "note: the profile-2 stage constraints (crossing length, timer-equipped "
        "traffic light, staged volume caps) are a derived encoding, reconstructed "
        "to match the published stage totals; the stage descriptions alone "
        "underdetermine it. Encodings are data and can be edited per profile."
    )
    if failures:
        raise ReproMismatch(f"counts did not reproduce for: {', '.join(failures)}")
    click.echo("all counts reproduced")


@cli.command()
@click.option("--addr", default="127.0.0.1:8000", show_default=True, help="host:port to bind.")
@click.option("--store", "store_dir", default="profiles", show_default=True,
              type=click.Path(file_okay=False))
@click.option("--space", "space_file", default=None)
@click.option("--console", "console_dir", default=None, type=click.Path(file_okay=False),
              help="Static console assets to serve at /.")
@click.option("--dev-cors", is_flag=True, help="Allow any origin (development only).")
def serve(addr, store_dir, space_file, console_dir, dev_cors):
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app

    space = _load_space(space_file)
    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError(f"--addr must look like host:port, got {addr!r}")
    app = create_app(space=space, store_dir=store_dir, console_dir=console_dir, dev_cors=dev_cors)
    uvicorn.run(app, host=host, port=int(port))


def main(argv=None) -> int:
    """Entry point with documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except ReproMismatch as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except (InvalidDocument, UnknownProfile, EmptyBucketError, RationalFormatError) as exc:
        if isinstance(exc, UnknownProfile):
            click.echo(
                f"error: unknown profile {exc.profile_id!r} "
                f"(built-ins: {', '.join(BUILTIN_PROFILE_IDS)})",
                err=True,
            )
        else:
            click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
