"""Pluggable sentiment scoring with a deterministic word-lexicon default.

The pipeline only needs a deterministic mapping from text to one of five
classes; anything implementing ``SentimentScorer`` can be swapped in.
"""

from __future__ import annotations

import re
from typing import Protocol

from .types import SENTIMENT_CLASSES

_WORD_RE = re.compile(r"[a-z']+")

# Signed weights; the summed score maps to classes via fixed thresholds.
DEFAULT_LEXICON: dict[str, int] = {
    "love": 2, "wonderful": 2, "amazing": 2, "fantastic": 2, "brilliant": 2,
    "perfect": 2, "best": 2, "excellent": 2,
    "good": 1, "great": 1, "nice": 1, "happy": 1, "win": 1, "winning": 1,
    "right": 1, "true": 1, "strong": 1, "proud": 1, "hope": 1, "support": 1,
    "hate": -2, "disgusting": -2, "horrible": -2, "terrible": -2, "awful": -2,
    "worst": -2, "evil": -2, "disgrace": -2,
    "bad": -1, "sad": -1, "wrong": -1, "fake": -1, "lie": -1, "liar": -1,
    "lose": -1, "losing": -1, "corrupt": -1, "crooked": -1, "shame": -1,
    "weak": -1, "fail": -1,
}


class SentimentScorer(Protocol):
    def score(self, text: str) -> str:
        """Return one of the five class names in SENTIMENT_CLASSES."""
        ...


class LexiconSentimentScorer:
    """Sum signed word weights; thresholds <=-2, -1, 0, +1, >=+2 pick the class."""

    def __init__(self, lexicon: dict[str, int] | None = None) -> None:
        self.lexicon = dict(DEFAULT_LEXICON if lexicon is None else lexicon)

    def score(self, text: str) -> str:
        total = sum(self.lexicon.get(w, 0) for w in _WORD_RE.findall(text.lower()))
        clamped = max(-2, min(2, total))
        return SENTIMENT_CLASSES[clamped + 2]
