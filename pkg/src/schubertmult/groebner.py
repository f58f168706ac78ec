"""Buchberger's algorithm over Q, lead-term ideals and the ``t -> 1`` map.

The public functions take and return :class:`~schubertmult.polyring.Polynomial`
values. Internally each computation runs in a :class:`_Kernel` that packs a
monomial into one Python integer::

    [ weight fields of the term order | exponent fields with guard bits ]

Because every field is a linear function of the exponent vector, monomial
multiplication is integer addition and the term order is integer comparison.
The guard bit on top of each exponent field turns a divisibility test into
one subtraction and one mask.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import GREVLEX, Monomial, PolyRing, Polynomial, TermOrder, monomial_str

__all__ = [
    "GroebnerBasis", "MonomialIdeal", "UnitIdealError", "normal_form",
    "s_polynomial", "buchberger", "lead_term_ideal", "eliminate_t",
    "is_groebner", "certify", "minimalize_monomials",
]

FIELD_BITS = 12
_EXP_LIMIT = 1 << (FIELD_BITS - 1)


class UnitIdealError(ArithmeticError):
    """A computation that must produce a proper ideal produced the unit ideal."""


class _Kernel:
    """Packed-integer monomial arithmetic for one ring and term order."""

    def __init__(self, ring: PolyRing, order: TermOrder):
        self.ring = ring
        self.order = order
        rows = order.weight_rows(ring)
        nv = ring.nvars
        nr = len(rows)
        B = FIELD_BITS
        self.nv = nv
        self.low_shift = [B * (nv - 1 - k) for k in range(nv)]
        self.units = []
        for k in range(nv):
            u = 1 << self.low_shift[k]
            for r, row in enumerate(rows):
                if row[k]:
                    u += row[k] << (B * (nv + nr - 1 - r))
            self.units.append(u)
        self.low_mask = (1 << (B * nv)) - 1
        self.guard = sum(1 << (B * k + B - 1) for k in range(nv))
        self.field_mask = (1 << B) - 1
        self._ones = sum(1 << (B * k) for k in range(nv))
        self._deg_shift = B * (nv - 1)

    def pack(self, exps: Sequence[int]) -> int:
        if sum(exps) >= _EXP_LIMIT:
            raise OverflowError("monomial degree exceeds the packed field width")
        return sum(e * u for e, u in zip(exps, self.units) if e)

    def unpack(self, m: int) -> Monomial:
        fm = self.field_mask
        return tuple((m >> s) & fm for s in self.low_shift)

    def degree(self, m: int) -> int:
        return (((m & self.low_mask) * self._ones) >> self._deg_shift) & self.field_mask

    def divides(self, a: int, b: int) -> bool:
        low = self.low_mask
        g = self.guard
        return ((b & low | g) - (a & low)) & g == g

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack([x if x > y else y for x, y in zip(ea, eb)])

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.unpack(a), self.unpack(b)
        return not any(x and y for x, y in zip(ea, eb))

    # polynomial conversion: kernel polynomials are dicts {packed: Fraction}

    def to_kernel(self, f: Polynomial) -> dict[int, Fraction]:
        if f.ring != self.ring:
            raise ValueError(f"ring mismatch: {f.ring} vs {self.ring}")
        return {self.pack(m): c for m, c in f.terms.items()}

    def from_kernel(self, f: dict[int, Fraction]) -> Polynomial:
        return Polynomial(self.ring, {self.unpack(m): c for m, c in f.items()})


class _Element:
    """A basis element: monic, terms sorted descending."""

    __slots__ = ("lm", "low", "terms", "sugar")

    def __init__(self, kernel: _Kernel, poly: dict[int, Fraction], sugar: int):
        ms = sorted(poly, reverse=True)
        lc = poly[ms[0]]
        self.lm = ms[0]
        self.low = (ms[0] & kernel.low_mask)
        self.terms = [(m, poly[m] / lc) for m in ms]
        self.sugar = sugar


def _reduce(kernel: _Kernel, f: dict[int, Fraction], basis: Sequence[_Element],
            full: bool = True) -> dict[int, Fraction]:
    """Division algorithm; consumes ``f``. Returns the remainder."""
    low_mask = kernel.low_mask
    guard = kernel.guard
    divisors = [(e.low, e) for e in basis]
    rem: dict[int, Fraction] = {}
    while f:
        m = max(f)
        mg = (m & low_mask) | guard
        for low, g in divisors:
            if (mg - low) & guard == guard:
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = f.pop(m)
            continue
        c = f[m]
        q = m - g.lm
        for gm, gc in g.terms:
            k = gm + q
            v = f.get(k)
            if v is None:
                f[k] = -c * gc
            else:
                v -= c * gc
                if v:
                    f[k] = v
                else:
                    del f[k]
    return rem


def _spoly(kernel: _Kernel, f: _Element, g: _Element, lcm: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    qf = lcm - f.lm
    for m, c in f.terms[1:]:
        out[m + qf] = c
    qg = lcm - g.lm
    for m, c in g.terms[1:]:
        k = m + qg
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


@dataclass
class _Stats:
    pairs: int = 0
    zero_reductions: int = 0
    product_skips: int = 0
    chain_skips: int = 0


def _buchberger(kernel: _Kernel, inputs: list[dict[int, Fraction]], strategy: str = "normal",
                max_steps: int = 10_000_000, seed: int = 0):
    """Gebauer-Moeller Buchberger with inputs fed in by sugar degree.

    Returns ``(elements, accepted, stats)``: the reduced basis elements and
    the indices of inputs that did not reduce to zero when processed (for
    homogeneous input this is a minimal generating subset).
    """
    deg = kernel.degree
    elems: list[_Element] = []   # every element ever added, by index
    current: list[int] = []      # indices in the current basis
    # pending work: heap of (sugar, inputs-after-pairs, lcm, tiebreak, kind, item)
    heap: list = []
    alive: set = set()
    counter = 0
    rng = random.Random(seed)

    def tiebreak():
        nonlocal counter
        counter += 1
        if strategy == "random":
            return rng.random()
        return counter

    for idx, f in enumerate(inputs):
        if not f:
            continue
        s = max(deg(m) for m in f)
        # inputs sort after pairs of the same degree so redundancy is detected
        if strategy == "normal":
            heap.append((s, 1, max(f), tiebreak(), "in", idx))
        else:
            heap.append((0, 0, 0, tiebreak(), "in", idx))
    heapq.heapify(heap)
    accepted: list[int] = []
    stats = _Stats()
    steps = 0

    def lcm_of(i: int, j: int) -> int:
        return kernel.lcm(elems[i].lm, elems[j].lm)

    def add_element(h: dict[int, Fraction], sugar: int):
        nonlocal current
        elem = _Element(kernel, h, sugar)
        hi = len(elems)
        elems.append(elem)
        # Gebauer-Moeller update, new pairs (h, g)
        pending = [(g, lcm_of(hi, g), kernel.coprime(elem.lm, elems[g].lm)) for g in current]
        kept = []
        while pending:
            g1, L1, cop1 = pending.pop(0)
            if cop1 or not any(kernel.divides(L2, L1) for _, L2, _ in pending + kept):
                kept.append((g1, L1, cop1))
            else:
                stats.chain_skips += 1
        for g1, L1, cop1 in kept:
            if cop1:
                stats.product_skips += 1
                continue
            s = max(elem.sugar + deg(L1) - deg(elem.lm),
                    elems[g1].sugar + deg(L1) - deg(elems[g1].lm))
            pair = (g1, hi)
            alive.add(pair)
            if strategy == "normal":
                heapq.heappush(heap, (s, 0, L1, tiebreak(), "pair", pair))
            else:
                heapq.heappush(heap, (0, 0, 0, tiebreak(), "pair", pair))
        # chain criterion on old pairs
        lm_h = elem.lm
        for pair in list(alive):
            i, j = pair
            if j == hi:
                continue
            L = lcm_of(i, j)
            if (kernel.divides(lm_h, L) and lcm_of(i, hi) != L and lcm_of(j, hi) != L):
                alive.discard(pair)
                stats.chain_skips += 1
        current = [g for g in current if not kernel.divides(lm_h, elems[g].lm)] + [hi]

    while heap:
        steps += 1
        if steps > max_steps:
            raise RuntimeError("Buchberger step cap exceeded; this indicates a bug")
        sugar, _, _, _, kind, item = heapq.heappop(heap)
        if kind == "pair":
            if item not in alive:
                continue
            alive.discard(item)
            stats.pairs += 1
            i, j = item
            L = lcm_of(i, j)
            h = _spoly(kernel, elems[i], elems[j], L)
        else:
            h = dict(inputs[item])
        h = _reduce(kernel, h, [elems[g] for g in current])
        if not h:
            if kind == "pair":
                stats.zero_reductions += 1
            continue
        if kind == "in":
            accepted.append(item)
        if max(h) & kernel.low_mask == 0:
            raise UnitIdealError("the ideal contains a nonzero constant")
        add_element(h, sugar)

    # interreduce: the current basis is minimal; reduce tails
    basis = sorted((elems[g] for g in current), key=lambda e: e.lm)
    reduced = []
    for k, e in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        tail = {m: c for m, c in e.terms[1:]}
        tail = _reduce(kernel, tail, others)
        tail[e.lm] = Fraction(1)
        reduced.append(_Element(kernel, tail, e.sugar))
    reduced.sort(key=lambda e: e.lm, reverse=True)
    return reduced, sorted(accepted), stats


# --------------------------------------------------------------------------
# public types


def minimalize_monomials(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop duplicates and monomials divisible by another one; sorted output."""
    uniq = sorted(set(monos), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in uniq:
        if not any(all(a <= b for a, b in zip(g, m)) for g in kept):
            kept.append(m)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators in a fixed ring."""

    ring: PolyRing
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", minimalize_monomials(self.gens))

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(all(a <= b for a, b in zip(g, m)) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def strings(self) -> list[str]:
        return [monomial_str(self.ring, m) for m in self.gens]

    def __str__(self) -> str:
        return "<" + ", ".join(self.strings()) + ">"


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic elements, sorted by leading monomial (descending)."""

    ring: PolyRing
    order: TermOrder
    basis: tuple[Polynomial, ...]
    stats: _Stats = field(default_factory=_Stats, compare=False, repr=False)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.basis]


def _kernel_basis(kernel: _Kernel, G: Sequence[Polynomial]) -> list[_Element]:
    out = []
    for g in G:
        if not g:
            raise ValueError("divisors must be nonzero")
        out.append(_Element(kernel, kernel.to_kernel(g), g.degree()))
    return out


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder = GREVLEX) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``G`` (first divisor wins)."""
    kernel = _Kernel(f.ring, order)
    rem = _reduce(kernel, kernel.to_kernel(f), _kernel_basis(kernel, G))
    return kernel.from_kernel(rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = GREVLEX) -> Polynomial:
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    kernel = _Kernel(f.ring, order)
    ef, eg = _kernel_basis(kernel, [f, g])
    # lcm/LT(f)*f is the monic element shifted by lcm/LM(f)
    sp = _spoly(kernel, ef, eg, kernel.lcm(ef.lm, eg.lm))
    return kernel.from_kernel(sp)


def _as_polys(gens) -> list[Polynomial]:
    return list(getattr(gens, "gens", gens))


def buchberger(gens, order: TermOrder = GREVLEX, strategy: str = "normal",
               ring: PolyRing | None = None, seed: int = 0) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``gens`` is a sequence of polynomials or a :class:`GeneratorSet`.
    ``strategy`` selects S-pairs: ``"normal"`` (least sugar degree, then
    least lcm), ``"fifo"`` or ``"random"``; the reduced basis is the same.
    """
    polys = _as_polys(gens)
    ring = ring or getattr(gens, "ring", None) or (polys[0].ring if polys else None)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator list; pass ring=")
    kernel = _Kernel(ring, order)
    elems, _, stats = _buchberger(kernel, [kernel.to_kernel(p) for p in polys],
                                  strategy=strategy, seed=seed)
    basis = tuple(Polynomial(ring, {kernel.unpack(m): c for m, c in e.terms}) for e in elems)
    return GroebnerBasis(ring, order, basis, stats)


def minimal_generator_indices(gens: Sequence[Polynomial], order: TermOrder = GREVLEX,
                              ring: PolyRing | None = None) -> list[int]:
    """Indices of a minimal generating subset (homogeneous input)."""
    if not gens:
        return []
    ring = ring or gens[0].ring
    kernel = _Kernel(ring, order)
    _, accepted, _ = _buchberger(kernel, [kernel.to_kernel(p) for p in gens])
    return accepted


def lead_term_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.ring, tuple(G.leading_monomials()))


def eliminate_t(I: MonomialIdeal) -> MonomialIdeal:
    """Set ``t = 1`` in every generator and re-minimalize in the t-free ring."""
    if not I.ring.with_t:
        return I
    return MonomialIdeal(I.ring.without_t(), tuple(m[1:] for m in I.gens))


def is_groebner(G: Sequence[Polynomial], order: TermOrder = GREVLEX) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g]
    if not G:
        return True
    kernel = _Kernel(G[0].ring, order)
    elems = _kernel_basis(kernel, G)
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            L = kernel.lcm(elems[a].lm, elems[b].lm)
            if _reduce(kernel, _spoly(kernel, elems[a], elems[b], L), elems):
                return False
    return True


def certify(G: GroebnerBasis, generators: Sequence[Polynomial] = ()) -> bool:
    """S-pair criterion plus membership of every original generator."""
    if not is_groebner(G.basis, G.order):
        return False
    if not G.basis:
        return not any(generators)
    kernel = _Kernel(G.ring, G.order)
    elems = _kernel_basis(kernel, G.basis)
    return all(not _reduce(kernel, kernel.to_kernel(f), elems) for f in _as_polys(generators))
