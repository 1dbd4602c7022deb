"""Local and global v-numbers of monomial ideals.

``local_v`` uses the quotient description

    v_p(I) = min{ w : ((I : p) / ((I : p) ∩ (I : Q_p^oo)))_w != 0 }

where ``Q_p`` is the product of the associated primes strictly above ``p``.
Both ideals are monomial, so the minimum is attained at a minimal generator
of ``(I : p)`` outside ``(I : Q_p^oo)``. ``local_v_oracle`` searches
monomials degree by degree instead and shares no code with it beyond
``colon``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator

from .decomp import MonomialPrime, associated_primes, q_p
from .monomial import Monomial, MonomialIdeal, colon, colon_ideal, contains, degree, saturation


class InconsistencyError(RuntimeError):
    """A computation contradicted a mathematical invariant (a bug, not a fact)."""


@dataclass(frozen=True)
class VResult:
    value: int
    prime: MonomialPrime
    witness: Monomial

    def to_json(self) -> dict[str, Any]:
        return {"value": self.value, "prime": self.prime.names, "witness": list(self.witness)}


def is_witness(I: MonomialIdeal, f: Monomial, p: MonomialPrime) -> bool:
    return colon(I, f) == p.ideal()


def _require_ass(I: MonomialIdeal, p: MonomialPrime, ass: list[MonomialPrime] | None) -> list[MonomialPrime]:
    if I.is_zero or I.is_unit:
        raise ValueError("v-numbers need a proper nonzero ideal")
    if p.ctx != I.ctx:
        raise ValueError("prime and ideal live in different rings")
    if ass is None:
        ass = associated_primes(I)
    if p not in ass:
        raise ValueError(f"{p} is not an associated prime of {I}")
    return ass


def local_v(I: MonomialIdeal, p: MonomialPrime, ass: list[MonomialPrime] | None = None) -> VResult:
    ass = _require_ass(I, p, ass)
    A = colon_ideal(I, p.ideal())
    Q = q_p(I, p, ass)
    S = I if Q.is_unit else saturation(I, Q)
    # g in A already, so g lies in A ∩ S iff g lies in S
    cands = sorted((g for g in A.gens if not contains(S, g)), key=lambda g: (degree(g), g))
    if not cands:
        raise InconsistencyError(f"(I:p) ⊆ (I:Q_p^oo) for associated prime {p} of {I}")
    w = degree(cands[0])
    for g in itertools.takewhile(lambda g: degree(g) == w, cands):
        if is_witness(I, g, p):
            return VResult(w, p, g)
    raise InconsistencyError(f"no degree-{w} generator of (I:p) is a witness for {p} in {I}")


def local_v_all(I: MonomialIdeal) -> dict[MonomialPrime, VResult]:
    ass = associated_primes(I)
    return {p: local_v(I, p, ass) for p in ass}


def v_number(I: MonomialIdeal) -> VResult:
    """``v(I)``; ties go to the first prime in canonical order."""
    if I.is_zero or I.is_unit:
        raise ValueError("v-numbers need a proper nonzero ideal")
    results = local_v_all(I).values()
    return min(results, key=lambda r: (r.value, r.prime.support))


def _bounded_compositions(total: int, bounds: Monomial) -> Iterator[Monomial]:
    if not bounds:
        if total == 0:
            yield ()
        return
    head, rest = bounds[0], bounds[1:]
    room = sum(rest)
    for a in range(min(head, total), -1, -1):
        if total - a <= room:
            for tail in _bounded_compositions(total - a, rest):
                yield (a,) + tail


def local_v_oracle(I: MonomialIdeal, p: MonomialPrime, degree_cap: int | None = None) -> VResult:
    """Smallest-degree monomial ``f`` with ``(I : f) = p``, by enumeration.

    Only exponents up to the largest exponent of each variable in ``G(I)``
    are tried: lowering a larger exponent to that bound leaves ``(I : f)``
    unchanged and lowers the degree. ``degree_cap`` defaults to ``local_v``.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("v-numbers need a proper nonzero ideal")
    if degree_cap is None:
        degree_cap = local_v(I, p).value
    target = p.ideal()
    bounds = I.max_exponents()
    for d in range(degree_cap + 1):
        for f in _bounded_compositions(d, bounds):
            if colon(I, f) == target:
                return VResult(d, p, f)
    raise InconsistencyError(f"no witness for {p} up to degree {degree_cap}")
