"""Homogenized determinantal equations of a Schubert variety near ``X_{w0}``.

The chart around the most singular point is the generic matrix with ``t`` on
the antidiagonal and zeros below it::

    z11 z12 z13 t
    z21 z22 t   0
    z31 t   0   0
    t   0   0   0

For every cell (i, j) the top-left i x j block must have rank at most
``r_ij(w)``, which is imposed by all of its minors of size ``r_ij(w) + 1``.
Setting ``t = 1`` recovers the affine equations; keeping ``t`` makes every
minor homogeneous.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinatorics import Permutation, rank_matrix
from .groebner import minimal_generator_indices
from .polyring import GREVLEX, PolyMatrix, PolyRing, Polynomial, TermOrder, minor

__all__ = ["GeneratorSet", "generic_matrix", "generate", "minimize_generators", "chart_ring"]


@lru_cache(maxsize=None)
def chart_ring(n: int) -> PolyRing:
    return PolyRing(n)


def generic_matrix(n: int) -> PolyMatrix:
    """``z_ij`` above the antidiagonal, ``t`` on it, ``0`` below."""
    ring = chart_ring(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i + j <= n:
                row.append(ring.z(i, j))
            elif i + j == n + 1:
                row.append(ring.t)
            else:
                row.append(ring.zero)
        rows.append(row)
    return PolyMatrix(ring, rows)


@lru_cache(maxsize=None)
def _matrix_and_cache(n: int) -> tuple[PolyMatrix, dict]:
    # every minor of the n x n chart matrix is memoized here (924 of them for n=6)
    return generic_matrix(n), {}


@dataclass(frozen=True)
class GeneratorSet:
    """Nonzero, sign-normalized, deduplicated minors for ``w``."""

    w: Permutation
    gens: tuple[Polynomial, ...]

    @property
    def n(self) -> int:
        return self.w.n

    @property
    def ring(self) -> PolyRing:
        return chart_ring(self.w.n)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def lines(self, order: TermOrder = GREVLEX) -> list[str]:
        return [f"# w={self.w.word} generators={len(self.gens)}"] + [
            g.format(order) for g in self.gens
        ]


def generate(w: Permutation, order: TermOrder = GREVLEX) -> GeneratorSet:
    """All (r_ij + 1)-minors of the top-left i x j blocks, for every cell.

    Cells are visited row-major; within a cell row subsets vary slowest and
    column subsets fastest, both lexicographically. Zero minors are dropped,
    each minor is scaled to leading coefficient +1 under ``order``, and
    repeats are kept once.
    """
    n = w.n
    M, cache = _matrix_and_cache(n)
    r = rank_matrix(w)
    seen: set[Polynomial] = set()
    gens: list[Polynomial] = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = r[i, j] + 1
            if k > min(i, j):
                continue
            for rows in combinations(range(i), k):
                for cols in combinations(range(j), k):
                    d = minor(M, rows, cols, cache)
                    if not d:
                        continue
                    d = d.monic(order)
                    if d not in seen:
                        seen.add(d)
                        gens.append(d)
    return GeneratorSet(w, tuple(gens))


def minimize_generators(g: GeneratorSet, order: TermOrder = GREVLEX) -> GeneratorSet:
    """Keep a minimal generating subset (inputs are homogeneous).

    Generators are fed to Buchberger by degree; one that reduces to zero
    modulo everything of lower or equal degree already processed is dropped.
    """
    keep = minimal_generator_indices(list(g.gens), order, ring=g.ring)
    return GeneratorSet(g.w, tuple(g.gens[k] for k in keep))
