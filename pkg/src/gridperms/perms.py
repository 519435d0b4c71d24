"""Permutations in one-line notation: patterns, containment, windows.

A permutation of length n is written as the sequence of its values
pi(1), ..., pi(n), each of 1..n appearing exactly once.  All values are
immutable and all functions are pure, so everything here is safe to share
between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    ``entries`` holds the values pi(1), ..., pi(n).  The empty permutation
    (n = 0) is allowed.

    >>> Permutation((2, 1, 3))
    Permutation(entries=(2, 1, 3))
    >>> len(Permutation(()))
    0
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        n = len(self.entries)
        if sorted(self.entries) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "empty"
        if len(self.entries) <= 9:
            return "".join(str(v) for v in self.entries)
        return " ".join(str(v) for v in self.entries)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation.

        Accepts whitespace- or comma-separated positive integers
        (``"1 3 6 8 5 4 7 9 2"``), the compact digit form (``"136854792"``,
        only for length <= 9), and ``"empty"`` for the empty permutation.
        """
        text = text.strip()
        if text in ("", "empty"):
            return cls(())
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            token = tokens[0]
            if not token.isdigit():
                raise ValueError(f"cannot parse permutation from {text!r}")
            if len(token) > 9:
                raise ValueError(
                    f"digit form only allowed for length <= 9, got {len(token)} digits; "
                    "use separated values"
                )
            return cls(tuple(int(ch) for ch in token))
        try:
            values = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
        return cls(values)


def pattern_of(values: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct integers.

    Each value is replaced by its rank within the sequence (smallest -> 1).

    >>> pattern_of((9, 1, 6, 7, 2)).entries
    (5, 1, 3, 4, 2)
    >>> pattern_of((5, 4, 2)).entries
    (3, 2, 1)
    """
    values = tuple(values)
    if len(set(values)) != len(values):
        raise ValueError(f"values are not distinct: {values}")
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[v] for v in values))


def containment_witness(
    pi: Permutation, sigma: Permutation
) -> tuple[int, ...] | None:
    """Lexicographically least index set witnessing sigma inside pi, or None.

    The returned 1-based indices I satisfy
    ``pattern_of([pi(i) for i in I]) == sigma``.  The search backtracks over
    candidate indices in ascending order, pruning any candidate whose value
    breaks an order relation with an already-chosen entry, so the first
    complete assignment found is the lexicographically least witness.
    """
    n, k = len(pi), len(sigma)
    if k == 0:
        return ()
    if k > n:
        return None
    p = pi.entries
    s = sigma.entries
    chosen: list[int] = []

    def extend(start: int) -> bool:
        m = len(chosen)
        if m == k:
            return True
        # leave room for the k - m - 1 indices still to come
        for i in range(start, n - (k - m) + 2):
            v = p[i - 1]
            if all((v > p[j - 1]) == (s[m] > s[q]) for q, j in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(1) else None


def contains(pi: Permutation, sigma: Permutation) -> bool:
    """Whether pi has a subsequence order-isomorphic to sigma.

    >>> contains(Permutation((3, 9, 1, 8, 6, 7, 4, 5, 2)),
    ...          Permutation((5, 1, 3, 4, 2)))
    True
    >>> contains(Permutation((1, 2, 3)), Permutation((3, 2, 1)))
    False
    """
    return containment_witness(pi, sigma) is not None


def window(
    pi: Permutation,
    x_interval: tuple[int, int],
    y_interval: tuple[int, int],
) -> Permutation:
    """The pattern of pi's entries with index in ``x_interval`` and value in
    ``y_interval``.

    Both intervals are inclusive pairs (lo, hi) of positions/values in 1..n.
    An interval with lo > hi selects nothing.

    >>> window(Permutation((1, 3, 6, 8, 5, 4, 7, 9, 2)), (5, 9), (1, 5)).entries
    (3, 2, 1)
    """
    n = len(pi)
    for lo, hi in (x_interval, y_interval):
        if not (1 <= lo <= n and 1 <= hi <= n):
            raise ValueError(
                f"interval bounds ({lo}, {hi}) outside 1..{n} for a length-{n} permutation"
            )
    x_lo, x_hi = x_interval
    y_lo, y_hi = y_interval
    selected = [
        v
        for i, v in enumerate(pi.entries, start=1)
        if x_lo <= i <= x_hi and y_lo <= v <= y_hi
    ]
    return pattern_of(selected)
