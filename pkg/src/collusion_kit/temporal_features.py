"""Per-interval features over temporal slices of a collection's traced tweets.

Every ratio with an empty denominator is defined as 0.0; the composing
``slice_features`` records which ratios were defaulted that way so the
summary row can expose the fact instead of hiding it.
"""

from __future__ import annotations

from .sentiment import SentimentScorer
from .types import SENTIMENT_CLASSES, SliceFeatureVector, TemporalSlice, Tweet


def _require_tweets(t: TemporalSlice) -> tuple[Tweet, ...]:
    if not t.tweets:
        raise ValueError("temporal slice is empty; empty slices are dropped upstream")
    return t.tweets


def entity_use_temporal(t: TemporalSlice) -> dict[str, float]:
    """Per-tweet averages of the four entity counts within the slice."""
    tweets = _require_tweets(t)
    n = len(tweets)
    return {
        "hashtag_use": sum(x.hashtag_count for x in tweets) / n,
        "url_use": sum(x.url_count for x in tweets) / n,
        "mention_use": sum(x.mention_count for x in tweets) / n,
        "media_use": sum(x.media_count for x in tweets) / n,
    }


def tweets_per_user(t: TemporalSlice) -> float:
    tweets = _require_tweets(t)
    return len(tweets) / len({x.author_id for x in tweets})


def retweet_metrics(t: TemporalSlice) -> dict[str, float]:
    """Retweet volume, distinct-original share, and the share of users who retweeted.

    A user counts as retweeting if any of their slice tweets is a retweet;
    distinct originals are keyed by the retweeted status id.
    """
    tweets = _require_tweets(t)
    n = len(tweets)
    users = {x.author_id for x in tweets}
    retweets = [x for x in tweets if x.is_retweet]
    retweeting_users = {x.author_id for x in retweets}
    originals = {x.retweeted_status_id for x in retweets}
    return {
        "retweet_count": len(retweets),
        "retweet_pct": len(retweets) / n,
        "original_retweeted_pct": len(originals) / len(retweets) if retweets else 0.0,
        "retweeting_users_count": len(retweeting_users),
        "retweeting_users_pct": len(retweeting_users) / len(users),
    }


def unretweeted_metrics(t: TemporalSlice) -> dict[str, float]:
    """Complements of the retweet metrics plus the unretweeted tweet/user ratio."""
    tweets = _require_tweets(t)
    rt = retweet_metrics(t)
    n = len(tweets)
    users = {x.author_id for x in tweets}
    unretweeted_count = n - rt["retweet_count"]
    unretweeted_users_count = len(users) - rt["retweeting_users_count"]
    return {
        "unretweeted_pct": 1.0 - rt["retweet_pct"],
        "unretweeted_users_pct": 1.0 - rt["retweeting_users_pct"],
        "unretweeted_count": unretweeted_count,
        "unretweeted_users_count": unretweeted_users_count,
        "unretweeted_tweet_user_ratio": (
            unretweeted_count / unretweeted_users_count if unretweeted_users_count else 0.0
        ),
    }


def mention_metrics(t: TemporalSlice) -> dict[str, float]:
    """Distinct-to-total mention ratios overall, within retweets, and within non-retweets."""
    tweets = _require_tweets(t)
    total = sum(x.mention_count for x in tweets)
    rt_total = sum(x.mention_count for x in tweets if x.is_retweet)
    nonrt_total = total - rt_total
    distinct_all = {m for x in tweets for m in x.mentions}
    distinct_rt = {m for x in tweets if x.is_retweet for m in x.mentions}
    distinct_nonrt = {m for x in tweets if not x.is_retweet for m in x.mentions}
    return {
        "mention_ratio": len(distinct_all) / total if total else 0.0,
        "mention_rt_ratio": len(distinct_rt) / rt_total if rt_total else 0.0,
        "mention_nonrt_ratio": len(distinct_nonrt) / nonrt_total if nonrt_total else 0.0,
    }


def sentiment_metrics(t: TemporalSlice, scorer: SentimentScorer) -> dict[str, float]:
    """Share of slice tweets that are replies of each sentiment class.

    The denominator is the slice size, so the five values need not sum to 1.
    """
    tweets = _require_tweets(t)
    n = len(tweets)
    counts = dict.fromkeys(SENTIMENT_CLASSES, 0)
    for x in tweets:
        if x.is_reply:
            counts[scorer.score(x.text)] += 1
    return {s: counts[s] / n for s in SENTIMENT_CLASSES}


def slice_features(t: TemporalSlice, scorer: SentimentScorer) -> SliceFeatureVector:
    """All per-slice metrics as one vector, with zero-denominator ratios flagged."""
    tweets = _require_tweets(t)
    entity = entity_use_temporal(t)
    rt = retweet_metrics(t)
    unrt = unretweeted_metrics(t)
    mention = mention_metrics(t)
    total_mentions = sum(x.mention_count for x in tweets)
    rt_mentions = sum(x.mention_count for x in tweets if x.is_retweet)

    flags = set()
    if rt["retweet_count"] == 0:
        flags.add("original_retweeted_pct")
    if unrt["unretweeted_users_count"] == 0:
        flags.add("unretweeted_tweet_user_ratio")
    if total_mentions == 0:
        flags.add("mention_ratio")
    if rt_mentions == 0:
        flags.add("mention_rt_ratio")
    if total_mentions - rt_mentions == 0:
        flags.add("mention_nonrt_ratio")

    return SliceFeatureVector(
        slice_start=t.interval_start,
        tpu=tweets_per_user(t),
        sentiment_pct=sentiment_metrics(t, scorer),
        zero_denominator_flags=frozenset(flags),
        **entity,
        **rt,
        **unrt,
        **mention,
    )
