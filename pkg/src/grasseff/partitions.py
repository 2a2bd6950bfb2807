"""Partitions confined to a k x w box.

These index the Schubert classes sigma_lambda on G(k, n) with w = n - k.
Parts are stored with explicit trailing zeros (fixed length k); rendering
trims them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class BoxedPartition:
    """A weakly decreasing tuple of box_k nonnegative parts, each <= box_w."""

    parts: tuple[int, ...]
    box_k: int
    box_w: int

    def __post_init__(self):
        if self.box_k < 1 or self.box_w < 1:
            raise ValueError("box dimensions must be positive")
        if len(self.parts) != self.box_k:
            raise ValueError("expected exactly %d parts, got %r" % (self.box_k, self.parts))
        if any(p < 0 for p in self.parts):
            raise ValueError("parts must be nonnegative: %r" % (self.parts,))
        if any(self.parts[i] < self.parts[i + 1] for i in range(self.box_k - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (self.parts,))
        if self.parts[0] > self.box_w:
            raise ValueError("first part %d exceeds box width %d" % (self.parts[0], self.box_w))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def trimmed(self) -> tuple[int, ...]:
        """Parts without trailing zeros (the usual display convention)."""
        return tuple(p for p in self.parts if p != 0)

    def contains(self, other: "BoxedPartition") -> bool:
        """Componentwise >= against another partition in the same box."""
        return self.parts >= tuple() and all(a >= b for a, b in zip(self.parts, other.parts))

    def to_json(self) -> list[int]:
        return list(self.trimmed())

    def __str__(self):
        t = self.trimmed()
        return "(" + ",".join(str(p) for p in t) + ")" if t else "()"


def make_partition(parts, k: int, w: int) -> BoxedPartition:
    """Build a BoxedPartition from parts given with or without trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if len(parts) > k:
        if any(p != 0 for p in parts[k:]):
            raise ValueError("partition %r has more than %d nonzero parts" % (parts, k))
        parts = parts[:k]
    parts = parts + (0,) * (k - len(parts))
    return BoxedPartition(parts, k, w)


def dual(lam: BoxedPartition) -> BoxedPartition:
    """The complementary partition (w - lam_k, ..., w - lam_1).

    An involution; |lam| + |dual(lam)| = k * w.
    """
    w = lam.box_w
    return BoxedPartition(tuple(w - p for p in reversed(lam.parts)), lam.box_k, w)


@lru_cache(maxsize=None)
def _enumerate(k: int, w: int, m: int, cap: int) -> tuple[tuple[int, ...], ...]:
    # All weakly decreasing k-tuples with entries <= cap summing to m,
    # first part descending (reverse-lexicographic order).
    if m < 0 or m > k * cap:
        return ()
    if k == 0:
        return ((),) if m == 0 else ()
    out = []
    lo = -(-m // k)  # ceil(m/k): smallest feasible first part
    for first in range(min(cap, m), lo - 1, -1):
        for rest in _enumerate(k - 1, w, m - first, min(cap, first)):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_box(k: int, w: int, m: int) -> list[BoxedPartition]:
    """All partitions of m inside the k x w box, in reverse-lexicographic order.

    Out-of-range m yields an empty list. The count over all m telescopes to
    binomial(k + w, k).
    """
    if k < 1 or w < 1:
        raise ValueError("box dimensions must be positive")
    return [BoxedPartition(p, k, w) for p in _enumerate(k, w, m, w)]


def box_basis_size(k: int, w: int) -> int:
    """Number of partitions in the k x w box."""
    return math.comb(k + w, k)
