"""Offline corpus ingestion and collection construction.

A corpus is one JSONL file or a directory of JSONL files. Tweet objects and
user-profile objects may be mixed or kept in sibling files; each line is
classified by its keys. Malformed lines are counted and skipped, never fatal.
"""

from __future__ import annotations

import bisect
import json
import logging
import math
import unicodedata
from collections import Counter, defaultdict
from datetime import date, datetime, timedelta, timezone
from pathlib import Path

from .errors import CorpusError, EmptyCollectionError
from .types import (
    Collection,
    InspectionStats,
    LabelTriple,
    OverlapReport,
    TemporalSlice,
    Tweet,
    UserProfile,
)

log = logging.getLogger(__name__)

_TWEET_KEYS = ("id", "author_id", "created_at", "text")
_PROFILE_KEYS = ("id", "registered_at", "follower_count")


def _parse_timestamp(raw: str) -> datetime:
    dt = datetime.fromisoformat(str(raw).replace("Z", "+00:00"))
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def _parse_tweet(obj: dict) -> Tweet:
    hashtags = tuple(str(h).lstrip("#").lower() for h in obj.get("hashtags", []))
    mentions = tuple(str(m) for m in obj.get("mentions", []))
    return Tweet(
        id=str(obj["id"]),
        author_id=str(obj["author_id"]),
        created_at=_parse_timestamp(obj["created_at"]),
        text=str(obj["text"]),
        hashtags=hashtags,
        mentions=mentions,
        url_count=int(obj.get("url_count", 0)),
        media_count=int(obj.get("media_count", 0)),
        retweeted_status_id=(
            str(obj["retweeted_status_id"]) if obj.get("retweeted_status_id") is not None else None
        ),
        replied_user_id=(
            str(obj["replied_user_id"]) if obj.get("replied_user_id") is not None else None
        ),
    )


def _parse_date(raw: str) -> date:
    raw = str(raw)
    if "T" in raw:
        return _parse_timestamp(raw).date()
    return date.fromisoformat(raw)


def _parse_profile(obj: dict) -> UserProfile:
    return UserProfile(
        id=str(obj["id"]),
        registered_at=_parse_date(obj["registered_at"]),
        follower_count=int(obj["follower_count"]),
        following_count=int(obj["following_count"]),
        status_count=int(obj["status_count"]),
        favorite_count=int(obj["favorite_count"]),
    )


class TweetStore:
    """Immutable-after-load tweet corpus with hashtag, author, and time-range indexes."""

    def __init__(self) -> None:
        self.tweets: list[Tweet] = []
        self.profiles: dict[str, UserProfile] = {}
        self.skipped = 0
        self.duplicate_ids = 0
        self._by_hashtag: dict[str, list[Tweet]] = {}
        self._by_author: dict[str, list[Tweet]] = {}
        self._author_times: dict[str, list[datetime]] = {}

    def __len__(self) -> int:
        return len(self.tweets)

    def _index(self) -> None:
        self.tweets.sort(key=lambda t: (t.created_at, t.id))
        by_hashtag: dict[str, list[Tweet]] = defaultdict(list)
        by_author: dict[str, list[Tweet]] = defaultdict(list)
        for t in self.tweets:
            for h in set(t.hashtags):
                by_hashtag[h].append(t)
            by_author[t.author_id].append(t)
        self._by_hashtag = dict(by_hashtag)
        self._by_author = dict(by_author)
        self._author_times = {a: [t.created_at for t in ts] for a, ts in by_author.items()}

    def tweets_with_hashtag(self, hashtag: str) -> list[Tweet]:
        return list(self._by_hashtag.get(hashtag, []))

    def tweets_by_author(self, author_id: str) -> list[Tweet]:
        return list(self._by_author.get(author_id, []))

    def author_tweets_between(self, author_id: str, start: datetime, end: datetime) -> list[Tweet]:
        """Tweets by ``author_id`` with start <= created_at <= end."""
        times = self._author_times.get(author_id)
        if not times:
            return []
        lo = bisect.bisect_left(times, start)
        hi = bisect.bisect_right(times, end)
        return self._by_author[author_id][lo:hi]

    def profile(self, user_id: str) -> UserProfile | None:
        return self.profiles.get(user_id)

    def hashtags(self) -> list[str]:
        return sorted(self._by_hashtag)

    @property
    def max_created_at(self) -> datetime:
        return self.tweets[-1].created_at

    @property
    def min_created_at(self) -> datetime:
        return self.tweets[0].created_at


def load_corpus(path: str | Path) -> TweetStore:
    """Load a JSONL file or a directory of JSONL files into an indexed store.

    Lines that fail to parse are counted in ``store.skipped``; duplicate tweet
    ids keep the first occurrence and are counted in ``store.duplicate_ids``.
    Raises CorpusError for an unreadable path or a corpus with no valid tweet.
    """
    root = Path(path)
    if not root.exists():
        raise CorpusError(f"corpus path does not exist: {root}")
    if root.is_dir():
        files = sorted(root.glob("*.jsonl"))
        if not files:
            raise CorpusError(f"no .jsonl files under {root}")
    else:
        files = [root]

    store = TweetStore()
    seen_ids: set[str] = set()
    for file in files:
        try:
            text = file.read_text(encoding="utf-8")
        except OSError as exc:
            raise CorpusError(f"cannot read {file}: {exc}") from exc
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                if not isinstance(obj, dict):
                    raise ValueError("line is not a JSON object")
                if all(k in obj for k in _TWEET_KEYS):
                    tweet = _parse_tweet(obj)
                    if tweet.id in seen_ids:
                        store.duplicate_ids += 1
                        continue
                    seen_ids.add(tweet.id)
                    store.tweets.append(tweet)
                elif all(k in obj for k in _PROFILE_KEYS):
                    profile = _parse_profile(obj)
                    store.profiles[profile.id] = profile
                else:
                    raise ValueError("object is neither a tweet nor a profile")
            except (ValueError, KeyError, TypeError) as exc:
                store.skipped += 1
                log.debug("skipping %s:%d: %s", file, lineno, exc)

    if not store.tweets:
        raise CorpusError(f"no valid tweet records under {root} (skipped {store.skipped} lines)")
    if store.skipped:
        log.warning("corpus %s: skipped %d malformed lines", root, store.skipped)
    store._index()
    return store


def build_collection(
    store: TweetStore,
    traced_hashtag: str,
    window_days: int = 7,
    label: LabelTriple | None = None,
    collection_id: str | None = None,
) -> Collection:
    """Build the seed set for ``traced_hashtag`` and expand it around each seed post.

    The seed set is every store tweet containing the hashtag. Expansion adds,
    for each seed author, the author's tweets within +/- ``window_days`` of any
    of that author's seed tweets (inclusive bounds). Duplicate ids collapse.
    """
    if not traced_hashtag or traced_hashtag != traced_hashtag.lower():
        raise ValueError("traced_hashtag must be a non-empty lowercase string")
    if window_days <= 0:
        raise ValueError("window_days must be positive")

    seeds = store.tweets_with_hashtag(traced_hashtag)
    if not seeds:
        raise EmptyCollectionError(f"hashtag #{traced_hashtag} matches zero tweets")

    window = timedelta(days=window_days)
    by_id: dict[str, Tweet] = {t.id: t for t in seeds}
    seeds_by_author: dict[str, list[Tweet]] = defaultdict(list)
    for t in seeds:
        seeds_by_author[t.author_id].append(t)
    for author, author_seeds in seeds_by_author.items():
        for seed in author_seeds:
            for t in store.author_tweets_between(author, seed.created_at - window, seed.created_at + window):
                by_id[t.id] = t

    expanded = sorted(by_id.values(), key=lambda t: (t.created_at, t.id))
    users = {a: store.profile(a) for a in seeds_by_author}
    return Collection(
        traced_hashtag=traced_hashtag,
        seed_tweets=seeds,
        expanded_tweets=expanded,
        users=users,
        expansion_window_days=window_days,
        label=label,
        collection_id=collection_id if collection_id is not None else traced_hashtag,
    )


def _floor_to_hour(dt: datetime) -> datetime:
    return dt.replace(minute=0, second=0, microsecond=0)


def partition_intervals(c: Collection, interval: timedelta = timedelta(hours=1)) -> list[TemporalSlice]:
    """Split the collection's traced-hashtag tweets into aligned, non-empty slices.

    The grid is anchored at the earliest seed tweet's timestamp truncated to
    the hour, so slicing is reproducible regardless of interval length.
    """
    if interval <= timedelta(0):
        raise ValueError("interval must be positive")
    traced = c.traced_tweets()
    if not traced:
        return []
    anchor_source = c.seed_tweets if c.seed_tweets else traced
    anchor = _floor_to_hour(min(t.created_at for t in anchor_source))
    groups: dict[int, list[Tweet]] = defaultdict(list)
    for t in traced:
        groups[(t.created_at - anchor) // interval].append(t)
    slices = []
    for idx in sorted(groups):
        tweets = tuple(sorted(groups[idx], key=lambda t: (t.created_at, t.id)))
        slices.append(TemporalSlice(anchor + idx * interval, interval, tweets))
    return slices


def _strip_punct(token: str) -> str:
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P"):
        end -= 1
    return token[start:end]


def tokenize(text: str) -> list[str]:
    """Whitespace tokens, lowercased, with leading/trailing punctuation removed."""
    out = []
    for raw in text.split():
        tok = _strip_punct(raw).lower()
        if tok:
            out.append(tok)
    return out


def inspection_stats(tweets: list[Tweet]) -> InspectionStats:
    """Distinct-word, tweets-per-user, retweet, and hashtag-spread statistics.

    Variance is the population variance over per-tweet hashtag counts.
    """
    if not tweets:
        raise ValueError("inspection_stats requires a non-empty tweet list")
    total_tokens = 0
    distinct: set[str] = set()
    for t in tweets:
        toks = tokenize(t.text)
        total_tokens += len(toks)
        distinct.update(toks)
    dw_pct = 100.0 * len(distinct) / total_tokens if total_tokens else 0.0

    n = len(tweets)
    authors = {t.author_id for t in tweets}
    tpu = n / len(authors)
    rt_pct = 100.0 * sum(1 for t in tweets if t.is_retweet) / n

    counts = [t.hashtag_count for t in tweets]
    mean = math.fsum(counts) / n
    var = math.fsum((x - mean) ** 2 for x in counts) / n
    return InspectionStats(
        tweet_count=n,
        distinct_word_pct=dw_pct,
        tweets_per_user_mean=tpu,
        retweet_pct=rt_pct,
        hashtags_per_tweet_var=var,
        hashtags_per_tweet_std=math.sqrt(var),
    )


def user_overlap(a: Collection, b: Collection) -> OverlapReport:
    """Users shared by two collections, as a count, a percentage of ``a``, and
    a registration-year histogram of the shared users (profiles permitting)."""
    shared = set(a.users) & set(b.users)
    pct = 100.0 * len(shared) / len(a.users) if a.users else 0.0
    years: Counter[int] = Counter()
    for uid in shared:
        profile = a.users.get(uid) or b.users.get(uid)
        if profile is not None:
            years[profile.registered_at.year] += 1
    return OverlapReport(count=len(shared), pct_of_a=pct, registration_years=dict(sorted(years.items())))
