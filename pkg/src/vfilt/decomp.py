"""Irreducible decomposition and associated primes of monomial ideals.

Throughout, ``Ass(I)`` means the associated primes of ``R/I``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .monomial import (
    Monomial,
    MonomialIdeal,
    RingContext,
    _canonical,
    _minimal_rows,
    intersect_all,
    minimalize,
    product,
    support,
)


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ``(x_i : i in support)``."""

    ctx: RingContext
    support: tuple[int, ...]

    def __post_init__(self):
        s = tuple(sorted(set(self.support)))
        if not s:
            raise ValueError("a monomial prime needs at least one variable")
        if s[-1] >= self.ctx.dim or s[0] < 0:
            raise ValueError(f"support {s} out of range")
        object.__setattr__(self, "support", s)

    @classmethod
    def from_names(cls, ctx: RingContext, names: Iterable[str]) -> MonomialPrime:
        return cls(ctx, tuple(ctx.index(n) for n in names))

    @property
    def height(self) -> int:
        return len(self.support)

    @property
    def names(self) -> list[str]:
        return [self.ctx.variables[i] for i in self.support]

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_variables(self.ctx, self.support)

    def __lt__(self, other: MonomialPrime) -> bool:
        return self.support < other.support

    def is_proper_subset(self, other: MonomialPrime) -> bool:
        return set(self.support) < set(other.support)

    def __str__(self) -> str:
        return "(" + ",".join(self.names) + ")"


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal ``(x_i^{a_i} : a_i > 0)``; a zero entry means the variable is absent."""

    exponents: Monomial

    def __post_init__(self):
        if not any(self.exponents):
            raise ValueError("irreducible component with empty support")

    @property
    def support(self) -> tuple[int, ...]:
        return support(self.exponents)

    def ideal(self, ctx: RingContext) -> MonomialIdeal:
        return minimalize([ctx.var(i, a) for i, a in enumerate(self.exponents) if a], ctx)

    def prime(self, ctx: RingContext) -> MonomialPrime:
        return MonomialPrime(ctx, self.support)

    def contains(self, f: Monomial) -> bool:
        return any(a and b >= a for a, b in zip(self.exponents, f))


def _check_proper(I: MonomialIdeal):
    if I.is_zero:
        raise ValueError("the zero ideal has no irreducible decomposition here")
    if I.is_unit:
        raise ValueError("the unit ideal has no associated primes")


_ABSENT = 2**40


def _irredundant(comps: Iterable[Monomial], dim: int) -> list[Monomial]:
    # D ⊆ C iff enc(C) <= enc(D) with absent variables encoded as +inf, so the
    # irredundant components are the componentwise-maximal encodings
    comps = list(set(comps))
    if len(comps) <= 1:
        return comps
    if max(max(c) for c in comps) >= _ABSENT:
        return _irredundant_python(comps)
    enc = np.asarray(comps, dtype=np.int64).reshape(len(comps), dim)
    enc = np.where(enc == 0, _ABSENT, enc)
    keep = -_minimal_rows(-enc)
    keep = np.where(keep == _ABSENT, 0, keep)
    return [tuple(r) for r in keep.tolist()]


def _irredundant_python(comps: list[Monomial]) -> list[Monomial]:
    inf = float("inf")
    enc = [tuple(a if a else inf for a in c) for c in comps]

    def below(a, b):
        return a != b and all(x <= y for x, y in zip(a, b))

    return [c for c, e in zip(comps, enc) if not any(below(e, f) for f in enc)]


# -- splitting recursion ----------------------------------------------------


def _pivot(gens: tuple[Monomial, ...]) -> tuple[int, Monomial] | None:
    mixed = [g for g in gens if sum(1 for a in g if a) > 1]
    if not mixed:
        return None
    i = min(support(g)[0] for g in mixed)
    for g in mixed:
        if g[i]:
            return i, g
    raise AssertionError("unreachable")


@functools.lru_cache(maxsize=100_000)
def _split(gens: tuple[Monomial, ...], dim: int) -> tuple[Monomial, ...]:
    piv = _pivot(gens)
    if piv is None:
        e = [0] * dim
        for g in gens:
            (i,) = support(g)
            e[i] = g[i]
        return (tuple(e),)
    i, g = piv
    left = [0] * dim
    left[i] = g[i]
    rest = list(g)
    rest[i] = 0
    a = _canonical(gens + (tuple(left),), dim)
    b = _canonical(gens + (tuple(rest),), dim)
    return tuple(sorted(_irredundant(_split(a, dim) + _split(b, dim), dim)))


def _decompose_split(I: MonomialIdeal) -> list[Monomial]:
    return list(_split(I.gens, I.ctx.dim))


# -- incremental (one generator at a time) ---------------------------------


def _decompose_incremental(I: MonomialIdeal) -> list[Monomial]:
    dim = I.ctx.dim
    gens = sorted(I.gens, key=lambda g: (sum(g), g))
    first = gens[0]
    comps = [tuple(a if j == i else 0 for j, a in enumerate(first)) for i in support(first)]
    for g in gens[1:]:
        sg = support(g)
        nxt = []
        for C in comps:
            if any(c and gj >= c for c, gj in zip(C, g)):
                nxt.append(C)
                continue
            # g not in C: every present exponent of C exceeds g there
            for i in sg:
                D = list(C)
                D[i] = g[i]
                nxt.append(tuple(D))
        comps = _irredundant(nxt, dim)
    return comps


def irreducible_decomposition(I: MonomialIdeal, method: str = "incremental") -> list[IrreducibleComponent]:
    """Irredundant irreducible components of a proper nonzero monomial ideal.

    ``method="split"`` runs the splitting recursion
    ``I = (I + x_i^a) ∩ (I + h)`` for a generator ``x_i^a * h`` (memoized);
    ``method="incremental"`` adds generators one at a time, using
    ``C + (g) = ∩_{i in supp g} (C + x_i^{g_i})`` for irreducible ``C``.
    """
    _check_proper(I)
    if method == "split":
        comps = _decompose_split(I)
    elif method == "incremental":
        comps = _decompose_incremental(I)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [IrreducibleComponent(c) for c in sorted(comps)]


def recombine(components: Iterable[IrreducibleComponent], ctx: RingContext) -> MonomialIdeal:
    return intersect_all((C.ideal(ctx) for C in components), ctx)


def associated_primes(I: MonomialIdeal, method: str = "incremental") -> list[MonomialPrime]:
    supports = {C.support for C in irreducible_decomposition(I, method)}
    return sorted(MonomialPrime(I.ctx, s) for s in supports)


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    ass = associated_primes(I)
    return [p for p in ass if not any(q.is_proper_subset(p) for q in ass)]


def height(p: MonomialPrime) -> int:
    return p.height


def bight(I: MonomialIdeal) -> int:
    return max(p.height for p in associated_primes(I))


def q_p(I: MonomialIdeal, p: MonomialPrime, ass: list[MonomialPrime] | None = None) -> MonomialIdeal:
    """Product of the associated primes of ``I`` strictly containing ``p`` (``R`` if none)."""
    if ass is None:
        ass = associated_primes(I)
    if p not in ass:
        raise ValueError(f"{p} is not an associated prime of {I}")
    out = MonomialIdeal.unit(I.ctx)
    for q in ass:
        if p.is_proper_subset(q):
            out = product(out, q.ideal())
    return out
