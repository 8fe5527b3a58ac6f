"""Per-user features over a collection's expanded tweet set."""

from __future__ import annotations

import logging
from datetime import date

from .types import Collection, Tweet, UserFeatureVector, UserProfile

log = logging.getLogger(__name__)

DEFAULT_REGISTRATION_CUTOFF = date(2015, 7, 1)


def avg_tweets_per_day(u: UserProfile, today: date) -> float:
    """Account-lifetime posting rate; the day count is clamped to 1 for same-day registrations."""
    if u.registered_at > today:
        raise ValueError(f"profile {u.id} registered after the reference date")
    days = max(1, (today - u.registered_at).days)
    return u.status_count / days


def follower_degree(u: UserProfile) -> float:
    """followers / (followers + following); 0 when the account follows and is followed by nobody."""
    total = u.follower_count + u.following_count
    if total == 0:
        return 0.0
    return u.follower_count / total


def _entity_use(tweets: list[Tweet]) -> dict[str, float]:
    n = len(tweets)
    if n == 0:
        return {"hashtag_use": 0.0, "url_use": 0.0, "mention_use": 0.0, "media_use": 0.0}
    return {
        "hashtag_use": sum(t.hashtag_count for t in tweets) / n,
        "url_use": sum(t.url_count for t in tweets) / n,
        "mention_use": sum(t.mention_count for t in tweets) / n,
        "media_use": sum(t.media_count for t in tweets) / n,
    }


def _user_tweets(u: str, c: Collection) -> list[Tweet]:
    return [t for t in c.expanded_tweets if t.author_id == u]


def entity_use_user(u: str, c: Collection) -> dict[str, float]:
    """Per-tweet averages of hashtag, URL, mention, and media counts for one user."""
    return _entity_use(_user_tweets(u, c))


def traced_hashtag_use(u: str, c: Collection) -> int:
    """How many of the user's expanded-set tweets contain the traced hashtag."""
    return sum(1 for t in _user_tweets(u, c) if t.has_hashtag(c.traced_hashtag))


def hashtag_days(c: Collection) -> set[date]:
    """UTC calendar days on which the traced hashtag occurs anywhere in the expanded set."""
    return {t.created_at.date() for t in c.expanded_tweets if t.has_hashtag(c.traced_hashtag)}


def daily_traced_avg(u: str, c: Collection) -> float:
    """The user's traced-hashtag tweets averaged over the days the hashtag was active."""
    days = hashtag_days(c)
    if not days:
        raise ValueError("collection has no tweets with the traced hashtag")
    return traced_hashtag_use(u, c) / len(days)


def daily_comparison(u: str, c: Collection, today: date) -> float:
    """Traced-hashtag daily rate relative to the account's lifetime daily rate; 0 for dormant accounts."""
    profile = c.users.get(u)
    if profile is None:
        raise ValueError(f"no profile for user {u}")
    rate = avg_tweets_per_day(profile, today)
    if rate == 0.0:
        return 0.0
    return daily_traced_avg(u, c) / rate


def extract_user_features(
    c: Collection,
    today: date,
    cutoff: date = DEFAULT_REGISTRATION_CUTOFF,
) -> list[UserFeatureVector]:
    """One feature vector per collection user, sorted by user id.

    Users without a profile yield vectors with ``complete=False``: the
    expanded-set features are still filled in, profile-derived ones are zeroed.
    Downstream summarization drops incomplete vectors from buckets and stats.
    """
    tweets_by_author: dict[str, list[Tweet]] = {uid: [] for uid in c.users}
    for t in c.expanded_tweets:
        if t.author_id in tweets_by_author:
            tweets_by_author[t.author_id].append(t)
    active_days = hashtag_days(c)

    vectors: list[UserFeatureVector] = []
    missing = 0
    for uid in sorted(c.users):
        mine = tweets_by_author[uid]
        entity = _entity_use(mine)
        traced_count = sum(1 for t in mine if t.has_hashtag(c.traced_hashtag))
        traced_daily = traced_count / len(active_days) if active_days else 0.0
        profile = c.users[uid]
        if profile is None:
            missing += 1
            vectors.append(
                UserFeatureVector(
                    user_id=uid,
                    tweet_count=0,
                    favorite_count=0,
                    avg_tweets_per_day=0.0,
                    follower_degree=0.0,
                    traced_hashtag_use=traced_count,
                    daily_traced_avg=traced_daily,
                    daily_comparison=0.0,
                    registered_at=None,
                    registered_after_cutoff=False,
                    complete=False,
                    **entity,
                )
            )
            continue
        rate = avg_tweets_per_day(profile, today)
        vectors.append(
            UserFeatureVector(
                user_id=uid,
                tweet_count=profile.status_count,
                favorite_count=profile.favorite_count,
                avg_tweets_per_day=rate,
                follower_degree=follower_degree(profile),
                traced_hashtag_use=traced_count,
                daily_traced_avg=traced_daily,
                daily_comparison=traced_daily / rate if rate > 0 else 0.0,
                registered_at=profile.registered_at,
                registered_after_cutoff=profile.registered_at > cutoff,
                complete=True,
                **entity,
            )
        )
    if missing:
        log.warning(
            "collection %s: %d of %d users lack profiles; their vectors are flagged incomplete",
            c.collection_id, missing, len(c.users),
        )
    return vectors
