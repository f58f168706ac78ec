"""Exact polynomials over Q in the chart variables ``t`` and ``z_ij`` (i + j <= n).

A :class:`PolyRing` fixes the variable list: ``t`` first (when present),
then the ``z_ij`` antidiagonal by antidiagonal, ``z11, z12, z21, z13, z22,
z31, ...``. Monomials are dense exponent tuples indexed by that list and
polynomials map monomials to :class:`fractions.Fraction` coefficients.

Term orders are never ambient: every operation that needs one takes a
:class:`TermOrder` argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

__all__ = [
    "Variable", "PolyRing", "Monomial", "TermOrder", "GREVLEX", "LEX",
    "Polynomial", "PolyMatrix", "compare", "add", "mul", "homogeneous_part",
    "lowest_form", "determinant", "minor", "substitute_t", "monomial_str",
]

Monomial = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Variable:
    """``t`` (kind ``"t"``) or ``z_ij`` (kind ``"z"``)."""

    kind: str
    i: int = 0
    j: int = 0

    @property
    def name(self) -> str:
        if self.kind == "t":
            return "t"
        if self.i > 9 or self.j > 9:
            return f"z{self.i}_{self.j}"
        return f"z{self.i}{self.j}"

    def __str__(self) -> str:
        return self.name


T = Variable("t")


def chart_variables(n: int) -> list[Variable]:
    """The z-variables above the antidiagonal, in the default reading order."""
    return [Variable("z", i, d - i) for d in range(2, n + 1) for i in range(1, d)]


class PolyRing:
    """Q[t, z_ij : i + j <= n] (or the t-free ring when ``with_t`` is false)."""

    def __init__(self, n: int, with_t: bool = True):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.with_t = with_t
        zs = chart_variables(n)
        self.variables: tuple[Variable, ...] = tuple(([T] if with_t else []) + zs)
        self.z_variables: tuple[Variable, ...] = tuple(zs)
        self._index = {v: k for k, v in enumerate(self.variables)}
        self._by_name = {v.name: v for v in self.variables}

    def __repr__(self) -> str:
        return f"PolyRing(n={self.n}, with_t={self.with_t})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and (self.n, self.with_t) == (other.n, other.with_t)

    def __hash__(self) -> int:
        return hash((self.n, self.with_t))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def t_index(self) -> int | None:
        return 0 if self.with_t else None

    def index(self, var: Variable | str) -> int:
        if isinstance(var, str):
            var = self._by_name[var]
        return self._index[var]

    def variable(self, name: str) -> Variable:
        return self._by_name[name]

    @cached_property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @cached_property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Mapping[Variable | str, int] | Sequence[int], coeff=1) -> "Polynomial":
        if isinstance(exps, Mapping):
            e = [0] * self.nvars
            for var, k in exps.items():
                e[self.index(var)] += k
            exps = e
        c = Fraction(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def var(self, name: str) -> "Polynomial":
        """The polynomial consisting of a single variable, e.g. ``ring.var("z12")``."""
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    @property
    def t(self) -> "Polynomial":
        if not self.with_t:
            raise ValueError("ring has no t variable")
        return self.var("t")

    def z(self, i: int, j: int) -> "Polynomial":
        return self.var(Variable("z", i, j).name)

    def gens(self) -> list["Polynomial"]:
        return [self.var(v.name) for v in self.variables]

    def without_t(self) -> "PolyRing":
        return PolyRing(self.n, with_t=False)


# --------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """t-degree first (more t wins), then grevlex or lex on the z-variables.

    ``z_order`` optionally permutes the z-variables (given as names, largest
    first); by default the ring's reading order ``z11 > z12 > z21 > ...`` is
    used.
    """

    kind: str = "grevlex"
    z_order: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown tie-break {self.kind!r}; use 'grevlex' or 'lex'")

    def _z_positions(self, ring: PolyRing) -> list[int]:
        if self.z_order is None:
            return [ring.index(v) for v in ring.z_variables]
        names = list(self.z_order)
        if sorted(names) != sorted(v.name for v in ring.z_variables):
            raise ValueError("z_order must list every z-variable of the ring exactly once")
        return [ring.index(name) for name in names]

    def weight_rows(self, ring: PolyRing) -> list[tuple[int, ...]]:
        """Nonnegative weight matrix whose lexicographic comparison is this order.

        Grevlex is encoded as lex on (total z-degree, S_{m-1}, ..., S_1) with
        ``S_k`` the k-th prefix sum of z-exponents; given equal degree this is
        lex on ``(-e_m, ..., -e_2)``, i.e. reverse lex.
        """
        nv = ring.nvars
        rows = []
        if ring.with_t:
            rows.append(tuple(1 if k == 0 else 0 for k in range(nv)))
        pos = self._z_positions(ring)
        m = len(pos)
        if self.kind == "lex":
            for p in pos:
                rows.append(tuple(1 if k == p else 0 for k in range(nv)))
        else:
            for top in range(m, 0, -1):
                chosen = set(pos[:top])
                rows.append(tuple(1 if k in chosen else 0 for k in range(nv)))
        return rows

    def key_function(self, ring: PolyRing) -> Callable[[Monomial], tuple[int, ...]]:
        rows = [[k for k, c in enumerate(row) if c] for row in self.weight_rows(ring)]

        def key(exps: Monomial) -> tuple[int, ...]:
            return tuple(sum(exps[k] for k in row) for row in rows)

        return key

    def key(self, ring: PolyRing, exps: Monomial) -> tuple[int, ...]:
        return self.key_function(ring)(exps)


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


def compare(ring: PolyRing, m1: Monomial, m2: Monomial, order: TermOrder = GREVLEX) -> int:
    """-1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    k1, k2 = order.key(ring, m1), order.key(ring, m2)
    return (k1 > k2) - (k1 < k2)


# --------------------------------------------------------------------------
# polynomials


def monomial_str(ring: PolyRing, exps: Monomial) -> str:
    parts = []
    for var, k in zip(ring.variables, exps):
        if k == 1:
            parts.append(var.name)
        elif k:
            parts.append(f"{var.name}^{k}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """An immutable polynomial; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Fraction | int]):
        self.ring = ring
        self._terms = {m: Fraction(c) for m, c in terms.items() if c}

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    def _check(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other) -> "Polynomial":
        other = self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._check(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.ring, {m: c * other for m, c in self._terms.items()})
        other = self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one
        for _ in range(k):
            result = result * self
        return result

    # -- degree structure ---------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.ring, {m: c for m, c in self._terms.items() if sum(m) == d})

    def lowest_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no lowest form")
        return min(sum(m) for m in self._terms)

    def lowest_form(self) -> "Polynomial":
        return self.homogeneous_part(self.lowest_degree())

    # -- order-dependent views ----------------------------------------------

    def sorted_terms(self, order: TermOrder = GREVLEX) -> list[tuple[Fraction, Monomial]]:
        key = order.key_function(self.ring)
        return [(self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)]

    def leading_monomial(self, order: TermOrder = GREVLEX) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key_function(self.ring))

    def leading_coefficient(self, order: TermOrder = GREVLEX) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder = GREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        return Polynomial(self.ring, {m: c / lc for m, c in self._terms.items()})

    def format(self, order: TermOrder = GREVLEX) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (c, m) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = monomial_str(self.ring, m)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r})"

    def substitute_t(self, value=1) -> "Polynomial":
        """Send ``t`` to ``value`` (only 1 is used) and move into the t-free ring."""
        if not self.ring.with_t:
            return self
        target = self.ring.without_t()
        value = Fraction(value)
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            rest = m[1:]
            out[rest] = out.get(rest, 0) + c * value ** m[0]
        return Polynomial(target, out)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def homogeneous_part(f: Polynomial, d: int) -> Polynomial:
    return f.homogeneous_part(d)


def lowest_form(f: Polynomial) -> Polynomial:
    """The nonzero homogeneous component of least degree."""
    return f.lowest_form()


def substitute_t(f: Polynomial, value=1) -> Polynomial:
    return f.substitute_t(value)


# --------------------------------------------------------------------------
# matrices and determinants


class PolyMatrix:
    """A rows x cols grid of polynomials over one ring."""

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence[Polynomial | int]]):
        self.ring = ring
        rows = []
        for row in entries:
            rows.append(tuple(e if isinstance(e, Polynomial) else ring.constant(e) for e in row))
        if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
            raise ValueError("a matrix needs equal-length nonempty rows")
        self.entries: tuple[tuple[Polynomial, ...], ...] = tuple(rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "PolyMatrix":
        cols = list(cols)
        return PolyMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows])

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def minor(M: PolyMatrix, rows: Sequence[int], cols: Sequence[int],
          cache: dict | None = None) -> Polynomial:
    """Determinant of the submatrix on ``rows`` x ``cols`` (0-indexed, sorted).

    Laplace expansion along the last column; ``cache`` memoizes on the
    (rows, cols) pair and may be shared between calls on the same matrix.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("a minor needs as many rows as columns")
    if cache is None:
        cache = {}
    return _minor(M, rows, cols, cache)


def _minor(M: PolyMatrix, rows: tuple[int, ...], cols: tuple[int, ...], cache: dict) -> Polynomial:
    key = (rows, cols)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not rows:
        result = M.ring.one
    elif len(rows) == 1:
        result = M.entries[rows[0]][cols[0]]
    else:
        last = cols[-1]
        rest = cols[:-1]
        k = len(rows)
        result = M.ring.zero
        for pos, r in enumerate(rows):
            entry = M.entries[r][last]
            if not entry:
                continue
            sub = _minor(M, rows[:pos] + rows[pos + 1:], rest, cache)
            if not sub:
                continue
            term = entry * sub
            # sign of (pos, k-1) cofactor
            result = result - term if (pos + k - 1) % 2 else result + term
    cache[key] = result
    return result


def determinant(M: PolyMatrix) -> Polynomial:
    if M.rows != M.cols:
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    return minor(M, range(M.rows), range(M.cols))


def leibniz_determinant(M: PolyMatrix) -> Polynomial:
    """Permutation-sum determinant; slow, used as an independent check."""
    from itertools import permutations

    if M.rows != M.cols:
        raise ValueError("non-square matrix")
    n = M.rows
    total = M.ring.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = M.ring.constant(-1 if inversions % 2 else 1)
        for i in range(n):
            term = term * M.entries[i][perm[i]]
            if not term:
                break
        total = total + term
    return total
