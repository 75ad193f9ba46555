"""Unit-cost edit distance, similarity ratio and thresholded matching.

``levenshtein_distance`` uses the bit-parallel algorithm of Myers (in
Hyyrö's formulation) on Python integers, so it runs in O(len(text)) big-int
steps regardless of pattern length. ``bounded_distance`` is an Ukkonen-style
banded DP that abandons work as soon as a whole row exceeds the bound; it is
what the thresholded matcher uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Optional


def levenshtein_distance(a: str, b: str) -> int:
    if a == b:
        return 0
    # pattern (bit vector) is the shorter string
    if len(a) < len(b):
        a, b = b, a
    m = len(b)
    if m == 0:
        return len(a)
    peq = {}
    bit = 1
    for ch in b:
        peq[ch] = peq.get(ch, 0) | bit
        bit <<= 1
    mask = (1 << m) - 1
    high = 1 << (m - 1)
    pv, mv, score = mask, 0, m
    for ch in a:
        eq = peq.get(ch, 0)
        xv = eq | mv
        xh = ((((eq & pv) + pv) & mask) ^ pv) | eq
        ph = mv | (~(xh | pv) & mask)
        mh = pv & xh
        if ph & high:
            score += 1
        elif mh & high:
            score -= 1
        ph = ((ph << 1) | 1) & mask
        mh = (mh << 1) & mask
        pv = mh | (~(xv | ph) & mask)
        mv = ph & xv
    return score


def bounded_distance(a: str, b: str, k: int) -> Optional[int]:
    """Edit distance if it is at most ``k``, else None.

    Only cells within ``k`` of the main diagonal are evaluated and the scan
    stops at the first row whose minimum already exceeds ``k``.
    """
    if k < 0:
        return None
    la, lb = len(a), len(b)
    if abs(la - lb) > k:
        return None
    if a == b:
        return 0
    # a shared prefix or suffix never changes the distance
    start = 0
    stop = min(la, lb)
    while start < stop and a[start] == b[start]:
        start += 1
    end = 0
    while end < stop - start and a[la - 1 - end] == b[lb - 1 - end]:
        end += 1
    if start or end:
        a, b = a[start:la - end], b[start:lb - end]
        la, lb = len(a), len(b)
    if la > lb:
        a, b, la, lb = b, a, lb, la
    if la == 0:
        return lb
    width = 2 * k + 1
    cap = k + 1
    # band offset o in row i covers column j = i - k + o
    prev = [o - k if 0 <= o - k <= lb else cap for o in range(width)]
    for i in range(1, la + 1):
        ai = a[i - 1]
        cur = [cap] * width
        base = i - k
        lo = max(0, -base)
        hi = min(width - 1, lb - base)
        row_min = cap
        for o in range(lo, hi + 1):
            j = base + o
            if j == 0:
                v = i if i < cap else cap
            else:
                v = prev[o] if ai == b[j - 1] else prev[o] + 1
                if o + 1 < width:
                    up = prev[o + 1] + 1
                    if up < v:
                        v = up
                if o > 0:
                    left = cur[o - 1] + 1
                    if left < v:
                        v = left
                if v > cap:
                    v = cap
            cur[o] = v
            if v < row_min:
                row_min = v
        if row_min > k:
            return None
        prev = cur
    d = prev[lb - la + k]
    return d if d <= k else None


def levenshtein_similarity(a: str, b: str) -> float:
    """``1 - d(a, b) / max(len(a), len(b))``; 1.0 for two empty strings."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein_distance(a, b) / longest


@dataclass(frozen=True)
class SimilarityConfig:
    """Match rule: similarity strictly above ``threshold``."""

    threshold: float = 0.98
    enable_length_prune: bool = True

    def __post_init__(self):
        if not 0.5 < self.threshold <= 1:
            raise ValueError("threshold must lie in (0.5, 1]")

    @cached_property
    def threshold_fraction(self) -> Fraction:
        return Fraction(repr(float(self.threshold)))

    def max_distance(self, longest: int) -> int:
        """Largest edit distance still counted as a match for strings whose longer side is ``longest``.

        -1 when no distance qualifies. Computed exactly: d qualifies iff
        d < (1 - threshold) * longest.
        """
        if longest == 0:
            return 0 if self.threshold < 1 else -1
        t = self.threshold_fraction
        slack = (t.denominator - t.numerator) * longest
        return (slack - 1) // t.denominator


def similar(a: str, b: str, config: SimilarityConfig = SimilarityConfig()) -> bool:
    """True iff the similarity ratio of ``a`` and ``b`` exceeds ``config.threshold``.

    With length pruning on, pairs whose length gap alone rules out a match
    are rejected without any DP, and the DP itself is banded and stops early.
    Both paths apply the same exact rational criterion.
    """
    longest = max(len(a), len(b))
    k = config.max_distance(longest)
    if config.enable_length_prune:
        if abs(len(a) - len(b)) > k:
            return False
        return bounded_distance(a, b, k) is not None
    return levenshtein_distance(a, b) <= k
