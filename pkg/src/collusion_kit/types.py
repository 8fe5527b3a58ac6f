"""Domain records: tweets, profiles, collections, slices, and feature vectors."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta


class Organization(enum.Enum):
    ORGANIZED = "organized"
    ORGANIC = "organic"


class Politicality(enum.Enum):
    POLITICAL = "political"
    NON_POLITICAL = "non_political"


class Camp(enum.Enum):
    PRO_TRUMP = "pro_trump"
    PRO_HILLARY = "pro_hillary"
    NONE = "none"


@dataclass(frozen=True)
class LabelTriple:
    """The three independent labels a collection may carry; any may be unknown."""

    organization: Organization | None = None
    politicality: Politicality | None = None
    camp: Camp | None = None

    def as_strings(self) -> tuple[str, str, str]:
        return (
            self.organization.value if self.organization else "",
            self.politicality.value if self.politicality else "",
            self.camp.value if self.camp else "",
        )

    @staticmethod
    def from_strings(organization: str, politicality: str, camp: str) -> "LabelTriple":
        return LabelTriple(
            Organization(organization) if organization else None,
            Politicality(politicality) if politicality else None,
            Camp(camp) if camp else None,
        )


@dataclass(frozen=True)
class Tweet:
    """One post. Hashtags are lowercase without '#' and keep per-tweet multiplicity."""

    id: str
    author_id: str
    created_at: datetime
    text: str
    hashtags: tuple[str, ...]
    mentions: tuple[str, ...]
    url_count: int
    media_count: int
    retweeted_status_id: str | None = None
    replied_user_id: str | None = None

    def __post_init__(self) -> None:
        if self.created_at.tzinfo is None:
            raise ValueError(f"tweet {self.id}: created_at must be timezone-aware UTC")
        if self.url_count < 0 or self.media_count < 0:
            raise ValueError(f"tweet {self.id}: entity counts must be non-negative")

    @property
    def is_retweet(self) -> bool:
        return self.retweeted_status_id is not None

    @property
    def is_reply(self) -> bool:
        return self.replied_user_id is not None

    @property
    def hashtag_count(self) -> int:
        return len(self.hashtags)

    @property
    def mention_count(self) -> int:
        return len(self.mentions)

    def has_hashtag(self, hashtag: str) -> bool:
        return hashtag in self.hashtags


@dataclass(frozen=True)
class UserProfile:
    """Account-level counters plus the registration date."""

    id: str
    registered_at: date
    follower_count: int
    following_count: int
    status_count: int
    favorite_count: int

    def __post_init__(self) -> None:
        for name in ("follower_count", "following_count", "status_count", "favorite_count"):
            if getattr(self, name) < 0:
                raise ValueError(f"profile {self.id}: {name} must be non-negative")


@dataclass
class Collection:
    """A traced hashtag's seed tweets, its window-expanded tweet set, and the seed authors.

    ``users`` maps every seed author to its profile, or to None when the
    corpus carries no profile for that author.
    """

    traced_hashtag: str
    seed_tweets: list[Tweet]
    expanded_tweets: list[Tweet]
    users: dict[str, UserProfile | None]
    expansion_window_days: int = 7
    label: LabelTriple | None = None
    collection_id: str = ""

    def traced_tweets(self) -> list[Tweet]:
        """Expanded-set tweets that contain the traced hashtag."""
        return [t for t in self.expanded_tweets if t.has_hashtag(self.traced_hashtag)]


@dataclass(frozen=True)
class TemporalSlice:
    """Traced-hashtag tweets inside one aligned interval; empty slices are never built."""

    interval_start: datetime
    interval_length: timedelta
    tweets: tuple[Tweet, ...]


@dataclass(frozen=True)
class InspectionStats:
    """Headline description of a tweet set used during manual triage."""

    tweet_count: int
    distinct_word_pct: float
    tweets_per_user_mean: float
    retweet_pct: float
    hashtags_per_tweet_var: float
    hashtags_per_tweet_std: float

    def as_dict(self) -> dict[str, float]:
        return {
            "tweet_count": self.tweet_count,
            "distinct_word_pct": self.distinct_word_pct,
            "tweets_per_user_mean": self.tweets_per_user_mean,
            "retweet_pct": self.retweet_pct,
            "hashtags_per_tweet_var": self.hashtags_per_tweet_var,
            "hashtags_per_tweet_std": self.hashtags_per_tweet_std,
        }


@dataclass(frozen=True)
class OverlapReport:
    """Shared-user report between two collections, seen from collection ``a``."""

    count: int
    pct_of_a: float
    registration_years: dict[int, int]


@dataclass(frozen=True)
class UserFeatureVector:
    """Per-user features over a collection; ``complete`` is False when the profile is missing."""

    user_id: str
    tweet_count: int
    favorite_count: int
    avg_tweets_per_day: float
    follower_degree: float
    hashtag_use: float
    url_use: float
    mention_use: float
    media_use: float
    traced_hashtag_use: int
    daily_traced_avg: float
    daily_comparison: float
    registered_at: date | None
    registered_after_cutoff: bool
    complete: bool = True


#: Sentiment class names in fixed negative-to-positive order.
SENTIMENT_CLASSES = ("very_negative", "negative", "neutral", "positive", "very_positive")


@dataclass(frozen=True)
class SliceFeatureVector:
    """Per-interval features; ratios with an empty denominator are 0 and flagged."""

    slice_start: datetime
    hashtag_use: float
    url_use: float
    mention_use: float
    media_use: float
    tpu: float
    retweet_count: int
    retweet_pct: float
    original_retweeted_pct: float
    retweeting_users_count: int
    retweeting_users_pct: float
    unretweeted_pct: float
    unretweeted_users_pct: float
    unretweeted_count: int
    unretweeted_users_count: int
    unretweeted_tweet_user_ratio: float
    mention_ratio: float
    mention_rt_ratio: float
    mention_nonrt_ratio: float
    sentiment_pct: dict[str, float]
    zero_denominator_flags: frozenset[str] = frozenset()


@dataclass
class FeatureRow:
    """One collection summarized as a fixed-order named numeric vector."""

    collection_id: str
    labels: LabelTriple | None
    columns: dict[str, float]
    schema_hash: str
    metadata: dict = field(default_factory=dict)
