"""Per-profile analysis assembly and artifact export.

``analyze`` bundles everything a report needs: totals, per-bucket
counts (all vs admitted), per-feature variance curves, and collapse
thresholds - the cd values at the edges of the difficulty range where
some feature's diversity drops below 0.5 while the adjacent interior
plateau stays above 0.9. Thresholds are reported as observations;
nothing downstream asserts their exact position.

Exports are deterministic byte-for-byte: stable ordering everywhere,
floats in CSV/SVG formatted to 6 significant digits, JSON floats kept
at full precision so the JSON round-trip reproduces an equal analysis.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import constraints as cx
from .diversity import VarianceCurve, variance_curves_from_table
from .enumeration import (
    BucketCounts,
    bucket_table_bruteforce,
    bucket_table_fast,
    UnsupportedConstraintShape,
)
from .model import Profile, ScenarioSpace
from .rational import format_rational, parse_rational
from .scoring import delta as difficulty_step
from .serialization import space_fingerprint


@dataclass(frozen=True)
class Thresholds:
    low_cd_collapse: Optional[Fraction]
    high_cd_collapse: Optional[Fraction]


@dataclass(frozen=True)
class ProfileAnalysis:
    profile_id: str
    profile_version: int
    space_fingerprint: str
    total_all: int
    total_profile: int
    percentage: float
    delta: Fraction
    buckets: BucketCounts
    curves: tuple[VarianceCurve, ...]
    feature_names: tuple[tuple[int, str], ...]  # reported features only
    excluded_features: tuple[int, ...]
    thresholds: Thresholds


def constrained_feature_ids(profile: Profile, space: ScenarioSpace) -> tuple[int, ...]:
    """Features pinned to a single value by the normalized constraint."""
    norm = cx.normalize(profile.constraint, space)
    fixed = []
    allows: list[cx.Allow] = []
    if isinstance(norm, cx.Allow):
        allows = [norm]
    elif isinstance(norm, cx.And):
        allows = [a for a in norm.args if isinstance(a, cx.Allow)]
    for a in allows:
        if len(a.values) == 1:
            fixed.append(a.feature_id)
    return tuple(sorted(fixed))


def _collapse_thresholds(
    curves: tuple[VarianceCurve, ...],
) -> Thresholds:
    """Edges where diversity collapses next to a healthy plateau.

    A bucket is collapsed when any reported feature has V < 0.5 and
    healthy when every reported feature has V > 0.9. The low threshold
    is the lowest collapsed cd that still has some healthier interior
    above it; the high threshold mirrors it from the top.
    """
    if not curves:
        return Thresholds(None, None)
    cds = [cd for cd, _ in curves[0].points]
    mins = []
    for i in range(len(cds)):
        mins.append(min(curve.points[i][1] for curve in curves))
    collapsed = [v < 0.5 for v in mins]
    healthy = [v > 0.9 for v in mins]

    low: Optional[Fraction] = None
    for i, cd in enumerate(cds):
        if collapsed[i] and any(healthy[j] for j in range(i + 1, len(cds))):
            low = cd
            break
    high: Optional[Fraction] = None
    for i in range(len(cds) - 1, -1, -1):
        if collapsed[i] and any(healthy[j] for j in range(i)):
            high = cds[i]
            break
    return Thresholds(low, high)


def analyze(
    space: ScenarioSpace,
    profile: Profile,
    use_fast_counting: bool = True,
    exclude_constrained: bool = True,
) -> ProfileAnalysis:
    """Full per-profile analysis; identical output on either counting path."""
    if use_fast_counting:
        try:
            table = bucket_table_fast(space, profile)
        except UnsupportedConstraintShape:
            table = bucket_table_bruteforce(space, profile)
    else:
        table = bucket_table_bruteforce(space, profile)

    excluded = constrained_feature_ids(profile, space) if exclude_constrained else ()
    curves = tuple(variance_curves_from_table(table, space, excluded))
    feature_names = tuple(
        (f.feature_id, f.name) for f in space.features if f.feature_id not in excluded
    )
    counts = table.counts
    total_all = counts.total_all
    total_profile = counts.total_profile
    return ProfileAnalysis(
        profile_id=profile.profile_id,
        profile_version=profile.version,
        space_fingerprint=space_fingerprint(space),
        total_all=total_all,
        total_profile=total_profile,
        percentage=100.0 * total_profile / total_all,
        delta=difficulty_step(space, profile),
        buckets=counts,
        curves=curves,
        feature_names=feature_names,
        excluded_features=tuple(excluded),
        thresholds=_collapse_thresholds(curves),
    )


# ---------------------------------------------------------------------------
# JSON


def analysis_to_doc(analysis: ProfileAnalysis) -> dict:
    counts = analysis.buckets
    return {
        "profile_id": analysis.profile_id,
        "profile_version": analysis.profile_version,
        "space_fingerprint": analysis.space_fingerprint,
        "total_all": analysis.total_all,
        "total_profile": analysis.total_profile,
        "percentage": analysis.percentage,
        "delta": format_rational(analysis.delta),
        "k_max": counts.k_max,
        "buckets": [
            {
                "k": k,
                "cd": format_rational(Fraction(k, counts.k_max)),
                "count_all": counts.count_all[k],
                "count_profile": counts.count_profile[k],
            }
            for k in range(counts.k_max + 1)
        ],
        "curves": [
            {
                "feature_id": curve.feature_id,
                "feature_name": dict(analysis.feature_names)[curve.feature_id],
                "points": [
                    {"cd": format_rational(cd), "v": v} for cd, v in curve.points
                ],
            }
            for curve in analysis.curves
        ],
        "excluded_features": list(analysis.excluded_features),
        "thresholds": {
            "low_cd_collapse": (
                format_rational(analysis.thresholds.low_cd_collapse)
                if analysis.thresholds.low_cd_collapse is not None
                else None
            ),
            "high_cd_collapse": (
                format_rational(analysis.thresholds.high_cd_collapse)
                if analysis.thresholds.high_cd_collapse is not None
                else None
            ),
        },
    }


def analysis_from_doc(doc: dict) -> ProfileAnalysis:
    k_max = doc["k_max"]
    count_all = [0] * (k_max + 1)
    count_profile = [0] * (k_max + 1)
    for bucket in doc["buckets"]:
        count_all[bucket["k"]] = bucket["count_all"]
        count_profile[bucket["k"]] = bucket["count_profile"]
    curves = tuple(
        VarianceCurve(
            feature_id=c["feature_id"],
            points=tuple((parse_rational(p["cd"]), float(p["v"])) for p in c["points"]),
        )
        for c in doc["curves"]
    )
    feature_names = tuple((c["feature_id"], c["feature_name"]) for c in doc["curves"])
    raw_thresholds = doc["thresholds"]
    return ProfileAnalysis(
        profile_id=doc["profile_id"],
        profile_version=doc["profile_version"],
        space_fingerprint=doc["space_fingerprint"],
        total_all=doc["total_all"],
        total_profile=doc["total_profile"],
        percentage=float(doc["percentage"]),
        delta=parse_rational(doc["delta"]),
        buckets=BucketCounts(k_max, tuple(count_all), tuple(count_profile)),
        curves=curves,
        feature_names=feature_names,
        excluded_features=tuple(doc["excluded_features"]),
        thresholds=Thresholds(
            low_cd_collapse=(
                parse_rational(raw_thresholds["low_cd_collapse"])
                if raw_thresholds["low_cd_collapse"] is not None
                else None
            ),
            high_cd_collapse=(
                parse_rational(raw_thresholds["high_cd_collapse"])
                if raw_thresholds["high_cd_collapse"] is not None
                else None
            ),
        ),
    )


def analysis_json_bytes(analysis: ProfileAnalysis) -> bytes:
    return (json.dumps(analysis_to_doc(analysis), indent=2, ensure_ascii=False) + "\n").encode(
        "utf-8"
    )


# ---------------------------------------------------------------------------
# CSV


def _fmt6(x: float) -> str:
    return f"{x:.6g}"


def analysis_csv_text(analysis: ProfileAnalysis) -> str:
    """One row per (nonempty bucket, reported feature)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["profile_id", "cd", "k", "count_all", "count_profile", "feature_id", "feature_name", "V"]
    )
    names = dict(analysis.feature_names)
    counts = analysis.buckets
    v_by_feature = {
        curve.feature_id: {cd: v for cd, v in curve.points} for curve in analysis.curves
    }
    for k in counts.nonempty_buckets():
        cd = Fraction(k, counts.k_max)
        for curve in analysis.curves:
            writer.writerow(
                [
                    analysis.profile_id,
                    _fmt6(float(cd)),
                    k,
                    counts.count_all[k],
                    counts.count_profile[k],
                    curve.feature_id,
                    names[curve.feature_id],
                    _fmt6(v_by_feature[curve.feature_id][cd]),
                ]
            )
    return buf.getvalue()


# ---------------------------------------------------------------------------
# SVG (self-contained, no external fonts or scripts)

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
)

_ALL_COLOR = "#0000FF"
_PROFILE_COLOR = "#FE0000"


def analysis_svg_text(analysis: ProfileAnalysis) -> str:
    """Two panels: count distribution (log y) and variance multi-line."""
    width, height = 980, 460
    panel_w, panel_h = 420, 300
    left_x, left_y = 60, 90
    right_x, right_y = 560, 90

    counts = analysis.buckets
    k_max = counts.k_max
    shown = [
        k
        for k in range(k_max + 1)
        if counts.count_all[k] > 0 or counts.count_profile[k] > 0
    ]
    max_count = max(
        [counts.count_all[k] for k in shown] + [counts.count_profile[k] for k in shown] + [1]
    )
    log_top = max(math.ceil(math.log10(max_count)), 1)

    def bar_height(count: int) -> float:
        if count <= 0:
            return 0.0
        return panel_h * (math.log10(count) / log_top) if count > 1 else panel_h * 0.01

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    parts.append('<rect width="100%" height="100%" fill="white"/>')
    title = (
        f"{analysis.profile_id}: {analysis.total_profile} / {analysis.total_all} "
        f"({analysis.percentage:.1f}%)"
    )
    parts.append(
        f'<text x="{width / 2:.6g}" y="30" text-anchor="middle" font-family="sans-serif" '
        f'font-size="18">{_esc(title)}</text>'
    )

    # legend (series colors follow the count panel)
    parts.append(
        f'<rect x="{left_x}" y="46" width="14" height="14" fill="{_ALL_COLOR}"/>'
        f'<text x="{left_x + 20}" y="58" font-family="sans-serif" font-size="12">All scenarios</text>'
        f'<rect x="{left_x + 130}" y="46" width="14" height="14" fill="{_PROFILE_COLOR}"/>'
        f'<text x="{left_x + 150}" y="58" font-family="sans-serif" font-size="12">'
        f"Profile specific scenarios</text>"
    )

    # left panel: grouped bars on a log scale, zero counts omitted
    slot = panel_w / max(len(shown), 1)
    bar_w = slot * 0.38
    for ordinal, k in enumerate(shown):
        x0 = left_x + ordinal * slot
        for series_offset, (count, color) in enumerate(
            ((counts.count_all[k], _ALL_COLOR), (counts.count_profile[k], _PROFILE_COLOR))
        ):
            if count <= 0:
                continue
            h = bar_height(count)
            x = x0 + slot * 0.08 + series_offset * bar_w
            y = left_y + panel_h - h
            parts.append(
                f'<rect x="{x:.6g}" y="{y:.6g}" width="{bar_w:.6g}" height="{h:.6g}" '
                f'fill="{color}"><title>k={k} count={count}</title></rect>'
            )
        cd_label = _fmt6(k / k_max)
        parts.append(
            f'<text x="{x0 + slot / 2:.6g}" y="{left_y + panel_h + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{cd_label}</text>'
        )
    for power in range(log_top + 1):
        y = left_y + panel_h - panel_h * (power / log_top)
        parts.append(
            f'<line x1="{left_x - 4}" y1="{y:.6g}" x2="{left_x + panel_w}" y2="{y:.6g}" '
            f'stroke="#dddddd" stroke-width="1"/>'
            f'<text x="{left_x - 8}" y="{y + 4:.6g}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">1e{power}</text>'
        )
    parts.append(
        f'<text x="{left_x + panel_w / 2:.6g}" y="{left_y + panel_h + 34}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">consistent difficulty</text>'
    )

    # right panel: variance curves, axes fixed to [0, 1]
    parts.append(
        f'<rect x="{right_x}" y="{right_y}" width="{panel_w}" height="{panel_h}" '
        f'fill="none" stroke="#999999"/>'
    )
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        y = right_y + panel_h * (1 - tick)
        parts.append(
            f'<line x1="{right_x - 4}" y1="{y:.6g}" x2="{right_x}" y2="{y:.6g}" stroke="#999999"/>'
            f'<text x="{right_x - 8}" y="{y + 4:.6g}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{_fmt6(tick)}</text>'
        )
    names = dict(analysis.feature_names)
    for i, curve in enumerate(analysis.curves):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(
            f"{right_x + panel_w * float(cd):.6g},{right_y + panel_h * (1 - v):.6g}"
            for cd, v in curve.points
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5">'
            f"<title>{_esc(names[curve.feature_id])}</title></polyline>"
        )
        legend_y = right_y + 14 * i
        parts.append(
            f'<rect x="{right_x + panel_w + 10}" y="{legend_y:.6g}" width="10" height="10" '
            f'fill="{color}"/>'
            f'<text x="{right_x + panel_w + 24}" y="{legend_y + 9:.6g}" '
            f'font-family="sans-serif" font-size="9">{_esc(names[curve.feature_id])}</text>'
        )
    parts.append(
        f'<text x="{right_x + panel_w / 2:.6g}" y="{right_y + panel_h + 34}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">feature variance V</text>'
    )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


# ---------------------------------------------------------------------------
# Export entry point


def export(analysis: ProfileAnalysis, format: str, destination: Union[str, "object"]) -> str:
    """Write one artifact; returns the path written.

    ``format`` is one of csv, json, svg. ``destination`` is a file
    path; parent directories must exist.
    """
    if format == "json":
        payload = analysis_json_bytes(analysis)
    elif format == "csv":
        payload = analysis_csv_text(analysis).encode("utf-8")
    elif format == "svg":
        payload = analysis_svg_text(analysis).encode("utf-8")
    else:
        raise ValueError(f"unknown export format {format!r} (expected csv, json or svg)")
    path = str(destination)
    with open(path, "wb") as fh:
        fh.write(payload)
    return path
