"""Monomials and monomial ideals over a fixed polynomial ring.

Monomials are exponent tuples. A :class:`MonomialIdeal` always stores its
minimal generators, sorted lexicographically, so ``==`` is ideal equality.
Bulk divisibility work goes through numpy int64 arrays; exponents too large
for that fall back to plain Python integers.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple[int, ...]

_INT64_SAFE = 2**62
_CHUNK = 1 << 22


@dataclass(frozen=True)
class RingContext:
    """Ordered variable names of a polynomial ring."""

    variables: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def dim(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return (0,) * self.dim

    def var(self, i: int | str, power: int = 1) -> Monomial:
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.dim
        e[i] = power
        return tuple(e)

    def monomial(self, powers: dict[str, int]) -> Monomial:
        e = [0] * self.dim
        for name, a in powers.items():
            e[self.index(name)] += a
        return tuple(e)

    def format(self, m: Monomial) -> str:
        parts = []
        for name, a in zip(self.variables, m):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / gcd(a, b)``: the generator of ``((a) : b)``."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(m: Monomial) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(m) if a)


# --------------------------------------------------------------------------
# bulk minimalization


def _divisible_by_any(cands: np.ndarray, kept: np.ndarray) -> np.ndarray:
    out = np.zeros(len(cands), dtype=bool)
    if len(kept) == 0 or len(cands) == 0:
        return out
    step = max(1, _CHUNK // max(1, kept.size))
    for lo in range(0, len(cands), step):
        blk = cands[lo : lo + step]
        out[lo : lo + step] = (kept[None, :, :] <= blk[:, None, :]).all(axis=2).any(axis=1)
    return out


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    if len(arr) <= 1:
        return arr
    arr = np.unique(arr, axis=0)
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    bounds = np.flatnonzero(np.diff(deg)) + 1
    kept = arr[:0]
    for block in np.split(arr, bounds):
        # distinct monomials of equal degree never divide each other
        block = block[~_divisible_by_any(block, kept)]
        if len(block):
            kept = np.concatenate([kept, block])
    return kept


def _minimal_python(gens: Iterable[Monomial]) -> list[Monomial]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return kept


def _canonical(gens: Iterable[Monomial], dim: int) -> tuple[Monomial, ...]:
    gens = list(gens)
    if not gens:
        return ()
    if max(max(g, default=0) for g in gens) < _INT64_SAFE:
        arr = np.asarray(gens, dtype=np.int64).reshape(len(gens), dim)
        rows = _minimal_rows(arr).tolist()
        return tuple(sorted(tuple(r) for r in rows))
    return tuple(sorted(_minimal_python(gens)))


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` (or :meth:`from_generators`);
    the dataclass constructor assumes ``gens`` is already canonical.
    """

    ctx: RingContext
    gens: tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], ctx: RingContext) -> MonomialIdeal:
        return minimalize(gens, ctx)

    @classmethod
    def zero(cls, ctx: RingContext) -> MonomialIdeal:
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx: RingContext) -> MonomialIdeal:
        return cls(ctx, (ctx.one(),))

    @classmethod
    def from_variables(cls, ctx: RingContext, indices: Iterable[int]) -> MonomialIdeal:
        return minimalize([ctx.var(i) for i in indices], ctx)

    @functools.cached_property
    def array(self) -> np.ndarray:
        if self.gens and max(max(g) for g in self.gens) >= _INT64_SAFE:
            raise OverflowError("exponents exceed int64 range")
        return np.asarray(self.gens, dtype=np.int64).reshape(len(self.gens), self.ctx.dim)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def ngens(self) -> int:
        return len(self.gens)

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.gens]

    def max_exponents(self) -> Monomial:
        if not self.gens:
            return self.ctx.one()
        return tuple(max(col) for col in zip(*self.gens))

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) <= 1

    def __contains__(self, f: Monomial) -> bool:
        return contains(self, f)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, n: int) -> MonomialIdeal:
        return power(self, n)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __le__(self, other: MonomialIdeal) -> bool:
        return is_subset(self, other)

    def __str__(self) -> str:
        body = ", ".join(self.ctx.format(g) for g in self.gens) if self.gens else "0"
        return f"({body})"


def _check(*ideals: MonomialIdeal) -> RingContext:
    ctx = ideals[0].ctx
    for I in ideals[1:]:
        if I.ctx != ctx:
            raise ValueError(f"ring context mismatch: {ctx.variables} vs {I.ctx.variables}")
    return ctx


def minimalize(gens: Iterable[Sequence[int]], ctx: RingContext) -> MonomialIdeal:
    out = []
    for g in gens:
        g = tuple(int(a) for a in g)
        if len(g) != ctx.dim:
            raise ValueError(f"monomial {g} has length {len(g)}, ring has {ctx.dim} variables")
        if any(a < 0 for a in g):
            raise ValueError(f"negative exponent in {g}")
        out.append(g)
    return MonomialIdeal(ctx, _canonical(out, ctx.dim))


def _from_array(arr: np.ndarray, ctx: RingContext) -> MonomialIdeal:
    rows = _minimal_rows(arr).tolist()
    return MonomialIdeal(ctx, tuple(sorted(tuple(r) for r in rows)))


def _bulk_ok(*ideals: MonomialIdeal) -> bool:
    return all(not I.gens or max(max(g) for g in I.gens) < _INT64_SAFE // 2 for I in ideals)


def contains(I: MonomialIdeal, f: Monomial) -> bool:
    if len(f) != I.ctx.dim:
        raise ValueError("monomial length does not match ring")
    if not I.gens:
        return False
    if len(I.gens) < 16 or not _bulk_ok(I):
        return any(divides(g, f) for g in I.gens)
    return bool((I.array <= np.asarray(f, dtype=np.int64)).all(axis=1).any())


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check(I, J)
    return all(contains(J, g) for g in I.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.ctx == J.ctx and I.gens == J.gens


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _check(I, J)
    return minimalize(I.gens + J.gens, ctx)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _check(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(ctx)
    if _bulk_ok(I, J):
        arr = (I.array[:, None, :] + J.array[None, :, :]).reshape(-1, ctx.dim)
        return _from_array(arr, ctx)
    return minimalize([mul(a, b) for a in I.gens for b in J.gens], ctx)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    out = MonomialIdeal.unit(I.ctx)
    for _ in range(n):
        out = product(out, I)
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _check(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(ctx)
    if _bulk_ok(I, J):
        arr = np.maximum(I.array[:, None, :], J.array[None, :, :]).reshape(-1, ctx.dim)
        return _from_array(arr, ctx)
    return minimalize([lcm(a, b) for a in I.gens for b in J.gens], ctx)


def intersect_all(ideals: Iterable[MonomialIdeal], ctx: RingContext | None = None) -> MonomialIdeal:
    """Fold :func:`intersect` over ``ideals``; the empty intersection is ``R``."""
    ideals = list(ideals)
    if not ideals:
        if ctx is None:
            raise ValueError("empty intersection needs a ring context")
        return MonomialIdeal.unit(ctx)
    # small ideals first keeps intermediate generator counts down
    ideals.sort(key=lambda I: I.ngens)
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def colon(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """``(I : f)`` for a monomial ``f``."""
    if len(f) != I.ctx.dim:
        raise ValueError("monomial length does not match ring")
    if I.is_zero:
        return I
    if _bulk_ok(I) and max(f, default=0) < _INT64_SAFE:
        arr = np.maximum(I.array - np.asarray(f, dtype=np.int64), 0)
        return _from_array(arr, I.ctx)
    return minimalize([quotient(g, f) for g in I.gens], I.ctx)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``(I : J)`` as the intersection of ``(I : g)`` over generators of ``J``."""
    ctx = _check(I, J)
    if J.is_zero:
        raise ValueError("colon by the zero ideal is undefined")
    return intersect_all((colon(I, g) for g in J.gens), ctx)


def _drop_variables(I: MonomialIdeal, idx: Iterable[int]) -> MonomialIdeal:
    """``(I : (prod_{i in idx} x_i)^oo)``: set those exponents to zero."""
    idx = list(idx)
    if not idx or I.is_zero:
        return I
    gens = []
    for g in I.gens:
        g = list(g)
        for i in idx:
            g[i] = 0
        gens.append(tuple(g))
    return minimalize(gens, I.ctx)


def saturation(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``(I : J^oo)``.

    Uses ``(I : J^oo) = ∩_g (I : g^oo)`` over generators ``g`` of ``J``, and
    ``(I : g^oo)`` only depends on the support of ``g``; only
    inclusion-minimal supports contribute to the intersection.
    """
    ctx = _check(I, J)
    if J.is_zero:
        raise ValueError("saturation by the zero ideal is undefined")
    supports = {frozenset(support(g)) for g in J.gens}
    minimal = [s for s in supports if not any(t < s for t in supports)]
    return intersect_all((_drop_variables(I, sorted(s)) for s in minimal), ctx)


def saturation_by_iteration(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``(I : J^oo)`` as the fixpoint of ``K -> (K : J)`` starting from ``I``."""
    K = I
    while True:
        nxt = colon_ideal(K, J)
        if nxt == K:
            return K
        K = nxt


def alpha(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ValueError("alpha of the zero ideal is undefined")
    return min(I.degrees())


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return minimalize([tuple(1 if a else 0 for a in g) for g in I.gens], I.ctx)


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(a <= 1 for g in I.gens for a in g)


def embed(I: MonomialIdeal, ctx: RingContext) -> MonomialIdeal:
    """Re-express ``I`` in a ring whose variables include those of ``I``."""
    pos = [ctx.index(v) for v in I.ctx.variables]
    gens = []
    for g in I.gens:
        e = [0] * ctx.dim
        for p, a in zip(pos, g):
            e[p] = a
        gens.append(tuple(e))
    return MonomialIdeal(ctx, tuple(sorted(gens)))


def rename(I: MonomialIdeal, mapping: dict[str, str]) -> MonomialIdeal:
    """Rename variables; generators keep their exponent vectors."""
    names = tuple(mapping.get(v, v) for v in I.ctx.variables)
    return MonomialIdeal(RingContext(names), I.gens)


def same_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Equality after aligning variables by name (the union ring)."""
    names = list(I.ctx.variables) + [v for v in J.ctx.variables if v not in I.ctx.variables]
    ctx = RingContext(tuple(sorted(names)))
    return embed(I, ctx) == embed(J, ctx)
