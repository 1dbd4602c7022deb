"""Ordinary, symbolic and integral-closure power filtrations of monomial ideals."""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .decomp import MonomialPrime, associated_primes, minimal_primes
from .lp import simplex_feasible
from .monomial import (
    Monomial,
    MonomialIdeal,
    RingContext,
    degree,
    intersect_all,
    is_squarefree,
    minimalize,
    power,
    product,
    saturation,
)
from .serialize import ideal_from_json, ideal_to_json

KINDS = ("ordinary", "symbolic_minass", "symbolic_ass", "generalized", "closure", "explicit")


@dataclass(frozen=True)
class FiltrationSpec:
    """A rule ``n -> I_n``.

    ``generalized`` uses ``I_n = (base^n : L^oo)``; ``explicit`` looks
    ``I_n`` up in ``table`` (``table[n-1]``, with ``I_0 = R``).
    """

    kind: str
    base: MonomialIdeal | None = None
    L: MonomialIdeal | None = None
    table: tuple[MonomialIdeal, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown filtration kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "explicit":
            if not self.table:
                raise ValueError("explicit filtration needs a nonempty table")
            object.__setattr__(self, "table", tuple(self.table))
        elif self.base is None:
            raise ValueError(f"{self.kind} filtration needs a base ideal")
        if self.kind == "generalized" and self.L is None:
            raise ValueError("generalized symbolic filtration needs L")

    @property
    def ctx(self):
        return self.table[0].ctx if self.kind == "explicit" else self.base.ctx

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.base is not None:
            out["base"] = ideal_to_json(self.base)
        if self.L is not None:
            out["L"] = ideal_to_json(self.L)
        if self.table:
            out["ideals"] = [ideal_to_json(I) for I in self.table]
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> FiltrationSpec:
        return cls(
            kind=data["kind"],
            base=ideal_from_json(data["base"]) if "base" in data else None,
            L=ideal_from_json(data["L"]) if "L" in data else None,
            table=tuple(ideal_from_json(d) for d in data.get("ideals", ())),
        )


# -- symbolic powers -----------------------------------------------------------


def symbolic_power_via_primes(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``∩_{p in Ass(I)} p^n`` for a squarefree monomial ideal."""
    if not is_squarefree(I):
        raise ValueError("symbolic_power_via_primes needs a squarefree ideal")
    if n == 0:
        return MonomialIdeal.unit(I.ctx)
    return intersect_all((power(p.ideal(), n) for p in associated_primes(I)), I.ctx)


def symbolic_saturator(I: MonomialIdeal, n: int, variant: str = "minass") -> MonomialIdeal:
    """The ideal ``L`` with ``I^(n) = (I^n : L^oo)``.

    ``L`` is the product of the associated primes of ``I^n`` that lie in no
    minimal (``variant="minass"``) or associated (``"ass"``) prime of ``I``;
    saturating at it removes exactly the components that localization kills.
    """
    keep = minimal_primes(I) if variant == "minass" else associated_primes(I)
    out = MonomialIdeal.unit(I.ctx)
    for P in associated_primes(power(I, n)):
        if not any(set(P.support) <= set(Q.support) for Q in keep):
            out = product(out, P.ideal())
    return out


def symbolic_power(I: MonomialIdeal, n: int, variant: str = "minass") -> MonomialIdeal:
    if variant not in ("minass", "ass"):
        raise ValueError(f"unknown symbolic-power variant {variant!r}")
    if n == 0:
        return MonomialIdeal.unit(I.ctx)
    if is_squarefree(I):
        # no embedded primes, so both variants are ∩ p^n
        return symbolic_power_via_primes(I, n)
    L = symbolic_saturator(I, n, variant)
    In = power(I, n)
    return In if L.is_unit else saturation(In, L)


# -- integral closure -----------------------------------------------------------


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(generator exponents) + R_{>=0}^m, tested exactly."""

    vertices: tuple[Monomial, ...]

    @classmethod
    def of(cls, I: MonomialIdeal) -> NewtonPolyhedron:
        if I.is_zero:
            raise ValueError("the zero ideal has no Newton polyhedron")
        return cls(I.gens)

    def contains(self, v: Monomial, scale: int = 1) -> bool:
        """Is ``v`` in ``scale`` times the polyhedron?

        Feasibility of ``lam >= 0``, ``sum(lam) = scale``,
        ``sum_i lam_i a_i <= v`` componentwise.
        """
        k = len(self.vertices)
        A_ub = [[a[j] for a in self.vertices] for j in range(len(v))]
        sol = simplex_feasible(A_eq=[[1] * k], b_eq=[scale], A_ub=A_ub, b_ub=list(v))
        return sol is not None

    def certificate(self, v: Monomial, scale: int = 1) -> list[Fraction] | None:
        k = len(self.vertices)
        A_ub = [[a[j] for a in self.vertices] for j in range(len(v))]
        return simplex_feasible(A_eq=[[1] * k], b_eq=[scale], A_ub=A_ub, b_ub=list(v))


def closure_membership(I: MonomialIdeal, v: Monomial, n: int = 1) -> bool:
    """Is ``x^v`` in the integral closure of ``I^n``?"""
    if I.is_zero:
        raise ValueError("closure of the zero ideal is not supported")
    if n == 0:
        return True
    return NewtonPolyhedron.of(I).contains(v, n)


def _box(bounds: Monomial):
    pts = itertools.product(*(range(b + 1) for b in bounds))
    return sorted(pts, key=lambda p: (sum(p), p))


@functools.lru_cache(maxsize=256)
def closure_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """Integral closure of ``I^n``.

    Minimal generators lie in the box ``[0, n*d_j]`` where ``d_j`` is the
    largest exponent of ``x_j`` in ``G(I)``: lowering a coordinate beyond it
    keeps the point inside ``n`` times the Newton polyhedron.
    """
    if I.is_zero:
        raise ValueError("closure of the zero ideal is not supported")
    if n == 0 or I.is_unit:
        return MonomialIdeal.unit(I.ctx)
    poly = NewtonPolyhedron.of(I)
    bounds = tuple(n * d for d in I.max_exponents())
    found: list[Monomial] = []
    for v in _box(bounds):
        if any(all(a <= b for a, b in zip(g, v)) for g in found):
            continue
        if poly.contains(v, n):
            found.append(v)
    return minimalize(found, I.ctx)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    return closure_power(I, 1)


# -- evaluation -------------------------------------------------------------------


@functools.lru_cache(maxsize=1024)
def evaluate(spec: FiltrationSpec, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("filtration index must be nonnegative")
    if n == 0:
        return MonomialIdeal.unit(spec.ctx)
    kind = spec.kind
    if kind == "ordinary":
        return power(spec.base, n)
    if kind == "symbolic_minass":
        return symbolic_power(spec.base, n, "minass")
    if kind == "symbolic_ass":
        return symbolic_power(spec.base, n, "ass")
    if kind == "generalized":
        return saturation(power(spec.base, n), spec.L)
    if kind == "closure":
        return closure_power(spec.base, n)
    if n > len(spec.table):
        raise IndexError(f"explicit filtration only defines I_1..I_{len(spec.table)}, asked for I_{n}")
    return spec.table[n - 1]


@dataclass(frozen=True)
class SvdCertificate:
    """Result of an empirical standard-Veronese-degree search.

    ``svd`` is the least ``e <= e_max`` with ``I_{en} = I_e^n`` for every
    ``n <= n_max``, or None if there is none; nothing beyond ``n_max`` is
    certified.
    """

    svd: int | None
    e_max: int
    n_max: int


def svd_detect(spec: FiltrationSpec, e_max: int = 4, n_max: int = 4) -> SvdCertificate:
    if e_max < 1 or n_max < 1:
        raise ValueError("e_max and n_max must be positive")
    for e in range(1, e_max + 1):
        Ie = evaluate(spec, e)
        acc = Ie
        ok = True
        for n in range(2, n_max + 1):
            acc = product(acc, Ie)
            if evaluate(spec, e * n) != acc:
                ok = False
                break
        if ok:
            return SvdCertificate(e, e_max, n_max)
    return SvdCertificate(None, e_max, n_max)


def ass_stabilization(spec: FiltrationSpec, n_min: int, n_max: int) -> tuple[int, list[MonomialPrime]]:
    """Least ``n0`` in the range with ``Ass(I_n)`` constant on ``[n0, n_max]``."""
    sets = {n: tuple(associated_primes(evaluate(spec, n))) for n in range(n_min, n_max + 1)}
    n0 = n_max
    while n0 > n_min and sets[n0 - 1] == sets[n_max]:
        n0 -= 1
    return n0, list(sets[n_max])


def check_filtration_axioms(spec: FiltrationSpec, n_max: int) -> list[str]:
    """Violations of ``I_r I_s ⊆ I_{r+s}`` and ``I_s ⊆ I_r`` (r <= s) up to ``n_max``."""
    bad = []
    for r in range(0, n_max + 1):
        for s in range(r, n_max + 1):
            Ir, Is = evaluate(spec, r), evaluate(spec, s)
            if not Is <= Ir:
                bad.append(f"I_{s} not inside I_{r}")
            if r + s <= n_max and not product(Ir, Is) <= evaluate(spec, r + s):
                bad.append(f"I_{r} I_{s} not inside I_{r + s}")
    return bad


def alpha_degrees(spec: FiltrationSpec, n_max: int) -> list[int]:
    return [min(degree(g) for g in evaluate(spec, n).gens) for n in range(1, n_max + 1)]


def explicit_filtration(ideals, name: str = "") -> FiltrationSpec:
    return FiltrationSpec("explicit", table=tuple(ideals), name=name)


def ceil_sqrt2_times(n: int) -> int:
    """``ceil(n * sqrt(2))`` in exact integer arithmetic."""
    c = math.isqrt(2 * n * n)
    return c if c * c == 2 * n * n else c + 1


def square_exponent_filtration(n_max: int) -> FiltrationSpec:
    """``I_n = (x^2, x*y^(n^2))`` in ``k[x, y]``, tabulated up to ``n_max``."""
    ctx = RingContext(("x", "y"))
    return explicit_filtration([minimalize([(2, 0), (1, n * n)], ctx) for n in range(1, n_max + 1)], "example-1.1")


def sqrt2_filtration(n_max: int) -> FiltrationSpec:
    """``I_n = (x^ceil(n*sqrt 2))`` in ``k[x]``, tabulated up to ``n_max``."""
    ctx = RingContext(("x",))
    return explicit_filtration([minimalize([(ceil_sqrt2_times(n),)], ctx) for n in range(1, n_max + 1)], "example-1.2")


BUILTIN_SPECS = {"example-1.1": square_exponent_filtration, "example-1.2": sqrt2_filtration}
