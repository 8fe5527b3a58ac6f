"""Feature-row schema: bucket schemes, column order, tags, and the schema hash.

The schema is pure data. Both the main summarization path and the independent
brute-force oracle consume it, so nothing in here computes features.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path

from .errors import SchemaError

SCHEMA_VERSION = 1
STATS = ("mean", "var", "std", "min", "max")
DEFAULT_CUTOFF = date(2015, 7, 1)
DEFAULT_YEAR_RANGE = (2006, 2026)

#: SliceFeatureVector sentiment classes as schema feature names.
SENTIMENT_FIELDS = (
    "sent_very_negative",
    "sent_negative",
    "sent_neutral",
    "sent_positive",
    "sent_very_positive",
)

TEMPORAL_FIELDS = (
    "hashtag_use",
    "url_use",
    "mention_use",
    "media_use",
    "tpu",
    "retweet_count",
    "retweet_pct",
    "original_retweeted_pct",
    "retweeting_users_count",
    "retweeting_users_pct",
    "unretweeted_pct",
    "unretweeted_users_pct",
    "unretweeted_count",
    "unretweeted_users_count",
    "unretweeted_tweet_user_ratio",
    "mention_ratio",
    "mention_rt_ratio",
    "mention_nonrt_ratio",
) + SENTIMENT_FIELDS

#: user feature field -> (scheme key, tags); order fixes the column order.
USER_FEATURES: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("tweet_count", "counter", ()),
    ("favorite_count", "counter", ()),
    ("avg_tweets_per_day", "ratio", ()),
    ("follower_degree", "degree", ()),
    ("hashtag_use", "ratio", ()),
    ("url_use", "ratio", ()),
    ("mention_use", "ratio", ()),
    ("media_use", "ratio", ()),
    ("traced_hashtag_use", "count", ("traced",)),
    ("daily_traced_avg", "ratio", ("traced",)),
    ("daily_comparison", "ratio", ("traced",)),
)


@dataclass(frozen=True)
class Bucket:
    """Half-open or closed interval [lo, hi] with per-end inclusivity; points have lo == hi."""

    label: str
    lo: float
    hi: float
    lo_incl: bool
    hi_incl: bool

    def contains(self, value: float) -> bool:
        above = value >= self.lo if self.lo_incl else value > self.lo
        below = value <= self.hi if self.hi_incl else value < self.hi
        return above and below

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "lo": "inf" if math.isinf(self.lo) else self.lo,
            "hi": "inf" if math.isinf(self.hi) else self.hi,
            "lo_incl": self.lo_incl,
            "hi_incl": self.hi_incl,
        }

    @staticmethod
    def from_dict(d: dict) -> "Bucket":
        lo = math.inf if d["lo"] == "inf" else float(d["lo"])
        hi = math.inf if d["hi"] == "inf" else float(d["hi"])
        return Bucket(str(d["label"]), lo, hi, bool(d["lo_incl"]), bool(d["hi_incl"]))


@dataclass(frozen=True)
class BucketScheme:
    """Ordered buckets that are mutually exclusive and exhaustive over the feature's domain."""

    name: str
    buckets: tuple[Bucket, ...]

    def __post_init__(self) -> None:
        if not self.buckets:
            raise SchemaError(f"scheme {self.name}: no buckets")
        prev = self.buckets[0]
        if prev.lo != 0.0 or not prev.lo_incl:
            raise SchemaError(f"scheme {self.name}: coverage must start closed at 0")
        for nxt in self.buckets[1:]:
            if nxt.lo != prev.hi or nxt.lo_incl == prev.hi_incl:
                raise SchemaError(
                    f"scheme {self.name}: gap or overlap between {prev.label} and {nxt.label}"
                )
            prev = nxt

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(b.label for b in self.buckets)

    def bucket_index(self, value: float) -> int:
        for i, b in enumerate(self.buckets):
            if b.contains(value):
                return i
        raise SchemaError(f"scheme {self.name}: value {value!r} outside bucket coverage")


def _intervals(name: str, spec: list[tuple[str, float, float, bool, bool]]) -> BucketScheme:
    return BucketScheme(name, tuple(Bucket(*s) for s in spec))


def ratio_scheme() -> BucketScheme:
    """Buckets for per-tweet averages and other small non-negative rates."""
    spec = [
        ("eq0", 0.0, 0.0, True, True),
        ("0to0.5", 0.0, 0.5, False, True),
        ("0.5to0.9", 0.5, 0.9, False, True),
        ("0.9to1", 0.9, 1.0, False, False),
        ("eq1", 1.0, 1.0, True, True),
    ]
    spec += [(f"{k}to{k + 1}", float(k), float(k + 1), False, True) for k in range(1, 10)]
    spec.append(("gt10", 10.0, math.inf, False, False))
    return _intervals("ratio", spec)


def counter_scheme() -> BucketScheme:
    """Buckets for large account-level counters (status and favorite counts)."""
    edges = [(0, 100), (100, 1_000), (1_000, 10_000), (10_000, 20_000), (20_000, 50_000)]
    spec = [("eq0", 0.0, 0.0, True, True)]
    spec += [(f"{lo + 1}to{hi}", float(lo), float(hi), False, True) for lo, hi in edges]
    spec.append(("gt50000", 50_000.0, math.inf, False, False))
    return _intervals("counter", spec)


def count_scheme() -> BucketScheme:
    """Buckets for small integer counts such as traced-hashtag use."""
    spec = [(f"eq{k}", float(k), float(k + 1), True, False) for k in range(0, 11)]
    spec += [
        ("11to20", 11.0, 21.0, True, False),
        ("21to50", 21.0, 51.0, True, False),
        ("51to100", 51.0, 101.0, True, False),
        ("gt100", 101.0, math.inf, True, False),
    ]
    return _intervals("count", spec)


def degree_scheme() -> BucketScheme:
    """Buckets over [0, 1] with the endpoints isolated, for follower degree."""
    spec = [
        ("eq0", 0.0, 0.0, True, True),
        ("0to0.25", 0.0, 0.25, False, True),
        ("0.25to0.5", 0.25, 0.5, False, True),
        ("0.5to0.75", 0.5, 0.75, False, True),
        ("0.75to1", 0.75, 1.0, False, False),
        ("eq1", 1.0, 1.0, True, True),
    ]
    return _intervals("degree", spec)


def year_scheme(year_min: int, year_max: int) -> BucketScheme:
    """Calendar-year buckets with open-ended first and last years."""
    if year_max <= year_min:
        raise SchemaError("year_max must exceed year_min")
    spec = [(f"le{year_min}", 0.0, float(year_min + 1), True, False)]
    spec += [(str(y), float(y), float(y + 1), True, False) for y in range(year_min + 1, year_max)]
    spec.append((f"ge{year_max}", float(year_max), math.inf, True, False))
    return _intervals("year", spec)


@dataclass(frozen=True)
class ColumnSpec:
    name: str
    group: str  # user_bucket | user_stat | temporal_stat | registration | diagnostic
    feature: str
    detail: str
    tags: tuple[str, ...] = ()


@dataclass(frozen=True)
class FeatureSchema:
    """Versioned, hashable description of every feature-row column."""

    version: int
    cutoff_date: date
    year_range: tuple[int, int]
    schemes: dict[str, BucketScheme]
    user_features: tuple[tuple[str, str, tuple[str, ...]], ...]
    temporal_features: tuple[str, ...]
    stats: tuple[str, ...]
    columns: tuple[ColumnSpec, ...] = ()  # derived in __post_init__ unless loaded from JSON

    def __post_init__(self) -> None:
        if not self.columns:
            object.__setattr__(self, "columns", tuple(self._build_columns()))

    def _build_columns(self) -> list[ColumnSpec]:
        cols: list[ColumnSpec] = []
        for feat, scheme_key, tags in self.user_features:
            scheme = self.schemes[scheme_key]
            for b in scheme.buckets:
                cols.append(ColumnSpec(f"u.{feat}.{b.label}", "user_bucket", feat, b.label, tags))
            for s in self.stats:
                cols.append(ColumnSpec(f"u.{feat}.{s}", "user_stat", feat, s, tags))
        for feat in self.temporal_features:
            for s in self.stats:
                cols.append(ColumnSpec(f"t.{feat}.{s}", "temporal_stat", feat, s))
        for b in self.schemes["year"].buckets:
            cols.append(ColumnSpec(f"reg.{b.label}", "registration", "registration_year", b.label))
        cols.append(ColumnSpec("reg.after_cutoff_pct", "registration", "after_cutoff", "pct"))
        cols.append(ColumnSpec("diag.incomplete_user_pct", "diagnostic", "incomplete_user", "pct"))
        return cols

    def column_names(self) -> list[str]:
        return [c.name for c in self.columns]

    def traced_columns(self) -> list[str]:
        return [c.name for c in self.columns if "traced" in c.tags]

    def scheme_for(self, user_feature: str) -> BucketScheme:
        for feat, scheme_key, _ in self.user_features:
            if feat == user_feature:
                return self.schemes[scheme_key]
        raise SchemaError(f"unknown user feature: {user_feature}")

    def _doc_without_hash(self) -> dict:
        return {
            "version": self.version,
            "cutoff_date": self.cutoff_date.isoformat(),
            "registration_year_range": list(self.year_range),
            "stats": list(self.stats),
            "schemes": {
                key: [b.to_dict() for b in scheme.buckets] for key, scheme in sorted(self.schemes.items())
            },
            "user_features": [
                {"field": f, "scheme": s, "tags": list(t)} for f, s, t in self.user_features
            ],
            "temporal_features": list(self.temporal_features),
            "columns": [
                {"name": c.name, "group": c.group, "feature": c.feature, "detail": c.detail, "tags": list(c.tags)}
                for c in self.columns
            ],
        }

    @property
    def hash(self) -> str:
        canonical = json.dumps(self._doc_without_hash(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def to_json(self, path: str | Path) -> None:
        doc = self._doc_without_hash()
        doc["hash"] = self.hash
        Path(path).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n", encoding="utf-8")

    @staticmethod
    def from_json(path: str | Path) -> "FeatureSchema":
        try:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise SchemaError(f"cannot read schema {path}: {exc}") from exc
        try:
            schemes = {
                key: BucketScheme(key, tuple(Bucket.from_dict(b) for b in buckets))
                for key, buckets in doc["schemes"].items()
            }
            schema = FeatureSchema(
                version=int(doc["version"]),
                cutoff_date=date.fromisoformat(doc["cutoff_date"]),
                year_range=tuple(doc["registration_year_range"]),
                schemes=schemes,
                user_features=tuple(
                    (uf["field"], uf["scheme"], tuple(uf["tags"])) for uf in doc["user_features"]
                ),
                temporal_features=tuple(doc["temporal_features"]),
                stats=tuple(doc["stats"]),
                columns=tuple(
                    ColumnSpec(c["name"], c["group"], c["feature"], c["detail"], tuple(c["tags"]))
                    for c in doc["columns"]
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"malformed schema file {path}: {exc}") from exc
        declared = doc.get("hash")
        if declared is not None and declared != schema.hash:
            raise SchemaError(f"schema file {path} hash mismatch (edited without rehashing?)")
        return schema


def default_schema(
    cutoff_date: date = DEFAULT_CUTOFF,
    year_range: tuple[int, int] = DEFAULT_YEAR_RANGE,
) -> FeatureSchema:
    """The stock schema: bucket percentages plus distribution stats per user
    feature, stats only per temporal feature, registration histogram, and the
    incomplete-profile diagnostic."""
    schemes = {
        "ratio": ratio_scheme(),
        "counter": counter_scheme(),
        "count": count_scheme(),
        "degree": degree_scheme(),
        "year": year_scheme(*year_range),
    }
    return FeatureSchema(
        version=SCHEMA_VERSION,
        cutoff_date=cutoff_date,
        year_range=year_range,
        schemes=schemes,
        user_features=USER_FEATURES,
        temporal_features=TEMPORAL_FIELDS,
        stats=STATS,
    )
