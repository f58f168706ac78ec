"""Hilbert series numerator, dimension and degree of S/I for a monomial ideal I.

``HS(S/I) = N(q) / (1 - q)^nvars``. Writing ``N(q) = (1 - q)^c Q(q)`` with
``Q(1) != 0`` gives ``dim S/I = nvars - c`` and ``deg S/I = Q(1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .groebner import MonomialIdeal, minimalize_monomials
from .polyring import Monomial

__all__ = [
    "HilbertNumerator", "DimDegree", "numerator", "dim_degree",
    "standard_monomial_count", "hilbert_function_oracle",
]

# ideals with at most this many generators use the one-generator recursion
NAIVE_BUDGET = 6


@dataclass(frozen=True)
class HilbertNumerator:
    """Integer coefficients of N(q), lowest degree first."""

    coeffs: tuple[int, ...]

    def __call__(self, q: int) -> int:
        return sum(c * q ** k for k, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.coeffs)) + "]"


@dataclass(frozen=True)
class DimDegree:
    dimension: int
    degree: int


# integer polynomial helpers (lists, lowest degree first)

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] += c
    return _trim(out)


def _shift(p: list[int], d: int, sign: int = 1) -> list[int]:
    return [0] * d + [sign * c for c in p]


def _mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _colon(gens: Sequence[Monomial], m: Monomial) -> tuple[Monomial, ...]:
    return minimalize_monomials(
        tuple(a - b if a > b else 0 for a, b in zip(g, m)) for g in gens
    )


def _disjoint_supports(gens: Sequence[Monomial]) -> bool:
    used: set[int] = set()
    for g in gens:
        supp = {k for k, e in enumerate(g) if e}
        if supp & used:
            return False
        used |= supp
    return True


def _numerator(gens: tuple[Monomial, ...]) -> list[int]:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    if _disjoint_supports(gens):
        out = [1]
        for g in gens:
            out = _mul(out, _add([1], _shift([1], sum(g), -1)))
        return out
    if len(gens) <= NAIVE_BUDGET:
        # N(J + m) = N(J) - q^deg(m) N(J : m)
        *rest, m = gens
        rest = tuple(rest)
        return _add(_numerator(rest), _shift(_numerator(_colon(rest, m)), sum(m), -1))
    # pivot on the variable occurring in the most generators:
    # N(I) = N(I + x^e) + q^e N(I : x^e)
    counts = Counter(k for g in gens for k, e in enumerate(g) if e)
    var = max(counts, key=lambda k: (counts[k], -k))
    exps = sorted(g[var] for g in gens if g[var])
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if k == var else 0 for k in range(len(gens[0])))
    left = minimalize_monomials(gens + (pivot,))
    right = _colon(gens, pivot)
    return _add(_numerator(left), _shift(_numerator(right), e))


def numerator(I: MonomialIdeal, nvars: int | None = None) -> HilbertNumerator:
    """Hilbert series numerator of S/I over ``nvars`` variables.

    The numerator does not depend on ``nvars``; it is accepted for symmetry
    with :func:`dim_degree` and checked against the ideal's ring.
    """
    if nvars is not None and nvars < I.nvars:
        raise ValueError(f"ideal lives in {I.nvars} variables, got nvars={nvars}")
    return HilbertNumerator(tuple(_numerator(tuple(I.gens))))


def dim_degree(I: MonomialIdeal, nvars: int | None = None) -> DimDegree:
    nvars = I.nvars if nvars is None else nvars
    N = list(numerator(I, nvars).coeffs)
    if not N:
        raise ValueError("the unit ideal has no dimension or degree")
    c = 0
    while sum(N) == 0:
        # synthetic division by (1 - q): Q_k = sum_{i <= k} N_i
        quotient, acc = [], 0
        for coeff in N[:-1]:
            acc += coeff
            quotient.append(acc)
        N = _trim(quotient)
        c += 1
    return DimDegree(nvars - c, sum(N))


# --------------------------------------------------------------------------
# brute-force oracle


def standard_monomial_count(I: MonomialIdeal, d: int, nvars: int | None = None) -> int:
    """Number of degree-``d`` monomials divisible by no generator of ``I``.

    Direct count over exponent vectors, one variable at a time, tracking which
    generators could still divide the partial monomial.
    """
    nvars = I.nvars if nvars is None else nvars
    return _count(tuple(I.gens), d, nvars)


def _count(gens: tuple[Monomial, ...], d: int, nvars: int) -> int:
    gens = [tuple(g) + (0,) * (nvars - len(g)) for g in gens]
    full = (1 << len(gens)) - 1

    @lru_cache(maxsize=None)
    def count(k: int, remaining: int, alive: int) -> int:
        if k == nvars - 1:
            # the last exponent is forced
            for b in range(len(gens)):
                if alive >> b & 1 and remaining >= gens[b][k]:
                    return 0
            return 1
        total = 0
        for e in range(remaining + 1):
            still = alive
            for b in range(len(gens)):
                if still >> b & 1 and e < gens[b][k]:
                    still &= ~(1 << b)
            total += count(k + 1, remaining - e, still)
        return total

    if nvars == 0:
        return 1 if d == 0 and not gens else 0
    return count(0, d, full)


def hilbert_function_oracle(I: MonomialIdeal) -> DimDegree:
    """Dimension and degree from Hilbert function values alone.

    Variables absent from every generator are free and only shift the
    dimension. On the rest, the Taylor resolution bounds the numerator
    degree by the degree ``L`` of the lcm of all generators, so the Hilbert
    function is polynomial from ``d0 = L - v + 1`` on (``v`` = variables in
    use). Finite differences over ``v + 1`` values from ``d0`` recover the
    polynomial's degree and leading coefficient.
    """
    if I.is_unit():
        raise ValueError("unit ideal")
    used = [k for k in range(I.nvars) if any(g[k] for g in I.gens)]
    free = I.nvars - len(used)
    if not used:
        return DimDegree(I.nvars, 1)
    sub = tuple(tuple(g[k] for k in used) for g in I.gens)
    v = len(used)
    L = sum(max(g[k] for g in sub) for k in range(v))
    d0 = max(0, L - v + 1)
    values = [_count(sub, d, v) for d in range(d0, d0 + v + 1)]
    diffs = values
    order = 0
    last_nonzero = None
    while diffs:
        if any(diffs):
            last_nonzero = (order, diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        order += 1
    if last_nonzero is None:
        # Artinian: the degree is the number of standard monomials
        total = sum(_count(sub, d, v) for d in range(d0 + 1))
        return DimDegree(free, total)
    k, leading = last_nonzero
    # HP(d) = degree * d^k / k! + ...; its k-th difference is the degree
    return DimDegree(k + 1 + free, leading)
