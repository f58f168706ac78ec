"""Permutations of {1..n} in one-line notation, rank matrices and Bruhat order.

Conventions follow the flag-variety indexing used throughout the package:
``w`` is stored by its one-line word ``w(1) w(2) ... w(n)`` and the rank
matrix is

    r[i][j] = #{k <= j : w^{-1}(k) <= i}

so that the Schubert variety ``Y_w`` is cut out by ``rank(M_ij) <= r[i][j]``.
With this convention ``v >= w`` in Bruhat order iff ``r(v) <= r(w)``
entrywise, the identity is the minimum and ``w0 = n...21`` the maximum.
Note this is opposite to another common convention in the literature; users
comparing against it must invert.

>>> w = Permutation.from_word("2143")
>>> length(w), rank_matrix(w).r[2]
(2, (1, 2, 2, 3))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "RankMatrix", "make_permutation", "identity", "longest",
    "length", "inverse", "compose", "rank_matrix", "bruhat_geq",
    "contains_pattern", "is_pattern_smooth", "enumerate_perms",
    "SINGULAR_PATTERNS",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n}; ``image[i-1] == w(i)``."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if n < 1:
            raise ValueError("a permutation needs at least one element")
        seen = set()
        for v in self.image:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"permutation entries must be integers, got {v!r}")
            if not 1 <= v <= n:
                raise ValueError(f"value {v} out of range 1..{n}")
            if v in seen:
                raise ValueError(f"duplicate value {v}")
            seen.add(v)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __len__(self) -> int:
        return len(self.image)

    def __iter__(self) -> Iterator[int]:
        return iter(self.image)

    @classmethod
    def from_word(cls, word: str) -> "Permutation":
        """Parse ``"2143"`` (digits, n <= 9) or ``"2,1,4,3"``."""
        text = word.strip()
        if not text:
            raise ValueError("empty permutation word")
        try:
            if "," in text:
                values = [int(part) for part in text.split(",")]
            else:
                values = [int(ch) for ch in text]
        except ValueError:
            raise ValueError(f"malformed permutation word {word!r}") from None
        return cls(tuple(values))

    @property
    def word(self) -> str:
        """Digit string for n <= 9, comma-separated integers otherwise."""
        if self.n <= 9:
            return "".join(map(str, self.image))
        return ",".join(map(str, self.image))

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"Permutation({self.word!r})"


def make_permutation(values: Iterable[int]) -> Permutation:
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The Bruhat-maximal element ``w0 = n...21``."""
    return Permutation(tuple(range(n, 0, -1)))


def length(w: Permutation) -> int:
    """Number of inversions."""
    a = w.image
    return sum(1 for i, j in itertools.combinations(range(len(a)), 2) if a[i] > a[j])


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, v in enumerate(w.image, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u v)(i) = u(v(i))``."""
    if u.n != v.n:
        raise ValueError("cannot compose permutations of different sizes")
    return Permutation(tuple(u.image[x - 1] for x in v.image))


@dataclass(frozen=True)
class RankMatrix:
    """``r[i-1][j-1] = r_ij(w)``; stored 0-indexed, documented 1-indexed."""

    n: int
    r: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """1-indexed access; indices of 0 read as 0."""
        i, j = ij
        if i == 0 or j == 0:
            return 0
        return self.r[i - 1][j - 1]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.r]

    def permutation(self) -> Permutation:
        """Recover ``w`` from the positions of unit increments."""
        image = [0] * self.n
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                step = self[i, j] - self[i - 1, j] - self[i, j - 1] + self[i - 1, j - 1]
                if step == 1:
                    image[i - 1] = j
        return Permutation(tuple(image))


def rank_matrix(w: Permutation) -> RankMatrix:
    n = w.n
    rows = []
    # cumulative counts of the permutation matrix with 1 at (i, w(i))
    for i in range(1, n + 1):
        rows.append(tuple(
            sum(1 for a in range(1, i + 1) if w(a) <= j) for j in range(1, n + 1)
        ))
    return RankMatrix(n, tuple(rows))


def bruhat_geq(v: Permutation, w: Permutation) -> bool:
    """True iff ``v >= w`` in Bruhat order (``r(v) <= r(w)`` entrywise)."""
    if v.n != w.n:
        raise ValueError(f"permutations of different sizes: {v.n} and {w.n}")
    rv, rw = rank_matrix(v).r, rank_matrix(w).r
    return all(a <= b for row_v, row_w in zip(rv, rw) for a, b in zip(row_v, row_w))


def _as_perm(p) -> Permutation:
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return Permutation.from_word(p)
    return make_permutation(p)


def contains_pattern(w: Permutation, p: Permutation | str | Sequence[int]) -> bool:
    """True iff some subsequence of ``w`` is order-isomorphic to ``p``."""
    p = _as_perm(p)
    if p.n > w.n:
        return False
    word, pat = w.image, p.image

    def extend(start: int, chosen: list[int]) -> bool:
        m = len(chosen)
        if m == len(pat):
            return True
        # leave room for the rest of the pattern
        for pos in range(start, len(word) - (len(pat) - m) + 1):
            v = word[pos]
            if all((v > c) == (pat[m] > pat[l]) for l, c in enumerate(chosen)):
                chosen.append(v)
                if extend(pos + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


SINGULAR_PATTERNS = (Permutation((1, 3, 2, 4)), Permutation((2, 1, 4, 3)))


def is_pattern_smooth(w: Permutation) -> bool:
    """Smoothness via pattern avoidance of 1324 and 2143."""
    return not any(contains_pattern(w, p) for p in SINGULAR_PATTERNS)


def enumerate_perms(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line words."""
    if n < 1:
        raise ValueError("n must be positive")
    for image in itertools.permutations(range(1, n + 1)):
        yield Permutation(image)
