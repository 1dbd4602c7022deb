"""Recompute v-numbers from scratch and compare them with closed-form expectations.

The closed forms only ever supply the expected column. Each case also
cross-checks one computed local v-number with the enumeration oracle.

Case ids and their statements:

====== ==================================================================
T4.1   K_{p1,p2}: v(J^(n)) = n*p1 + p2 - 2; reg - v = (n-1)(p2-p1)
T4.3   K_m: v(J^(n)) = (m/2)n + m - 3 (n even), (m/2)n + m/2 - 2 (n odd)
T4.5   cycle C_u: every v_p and v equal (u/2)n, minus 1/2 for odd u, n odd
T4.7   K_m^s: v_P = mn + s - 2 (pendant edges), v_Q = (m+s-1)n + s - 1
C4.4   hbip(p): bipartite, unmixed, not complete multipartite, v - bight = p - 2
T4.6   reg(S/J(H)) - v(J(H)) = k for H = fakhari(Kb(m,m+1), k+1) or fakhari(K(3), 2k+1)
C4.9   K_m^(t+1): slope of v_Q minus slope of v_P equals t
E1.1   I_n = (x^2, x*y^(n^2)): v = n^2, and no quasi-linear fit
E1.2   I_n = (x^ceil(n*sqrt2)): v = ceil(n*sqrt2) - 1
E3.6   I = (xy,xz,xw,yz): v_P(I^(n)) = 3n/2 (n even), (3n-1)/2 (n odd)
R4.2   polarize(J(G)^(k)) = J(fakhari(G,k)) and both have the same v
====== ==================================================================
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .asymptotics import quasi_linear_fit, slope_limit, v_series
from .decomp import MonomialPrime, associated_primes, bight
from .filtrations import FiltrationSpec, ceil_sqrt2_times, evaluate, sqrt2_filtration, square_exponent_filtration
from .graphs import (
    Complete,
    CompleteBipartite,
    Cycle,
    Fakhari,
    HBip,
    Pendant,
    build,
    complete_multipartite_by_search,
    cover_ideal,
    edge_ideal,
    is_bipartite,
    is_complete_multipartite,
    is_unmixed_edge_ideal,
    parse_family,
    polarize,
    reg_closed_form,
)
from .monomial import MonomialIdeal, RingContext, minimalize, same_ideal
from .vnumber import local_v, local_v_all, local_v_oracle, v_number

DEFAULT_MAX_VARS = 12
DEFAULT_MAX_N = 8
ORACLE_MAX_VARS = 10


class ScaleLimitError(ValueError):
    pass


def scale_limits() -> tuple[int, int]:
    return (
        int(os.environ.get("VFILT_MAX_VARS", DEFAULT_MAX_VARS)),
        int(os.environ.get("VFILT_MAX_N", DEFAULT_MAX_N)),
    )


@dataclass(frozen=True)
class TheoremCase:
    id: str
    params: dict[str, int] = field(default_factory=dict)
    n_min: int = 1
    n_max: int = 1

    def __hash__(self):
        return hash((self.id, tuple(sorted(self.params.items())), self.n_min, self.n_max))


@dataclass
class Check:
    label: str
    n: int | None
    expected: Any
    computed: Any
    witness: list[int] | None = None

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass
class VerifyReport:
    case: TheoremCase
    checks: list[Check]
    seconds: float

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_mismatch(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)

    def to_json(self) -> dict[str, Any]:
        return {
            "case": self.case.id,
            "params": self.case.params,
            "range": [self.case.n_min, self.case.n_max],
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [
                {
                    "label": c.label,
                    "n": c.n,
                    "expected": str(c.expected),
                    "computed": str(c.computed),
                    "witness": c.witness,
                    "ok": c.ok,
                }
                for c in self.checks
            ],
        }


# -- helpers ------------------------------------------------------------------------


def _symbolic_spec(G) -> FiltrationSpec:
    return FiltrationSpec("symbolic_minass", base=cover_ideal(G))


def _oracle_check(checks: list[Check], I: MonomialIdeal, p: MonomialPrime, n: int | None):
    if I.ctx.dim > ORACLE_MAX_VARS:
        return
    quick = local_v(I, p)
    slow = local_v_oracle(I, p)
    checks.append(Check(f"oracle v_{p}", n, quick.value, slow.value, list(slow.witness)))


def _half_line(num: Fraction) -> int | Fraction:
    return int(num) if num.denominator == 1 else num


def _edge_prime(ctx: RingContext, a: str, b: str) -> MonomialPrime:
    return MonomialPrime.from_names(ctx, (a, b))


# -- cases --------------------------------------------------------------------------


def _complete_bipartite(case: TheoremCase, checks: list[Check], oracle_n: int):
    p1, p2 = case.params["p1"], case.params["p2"]
    tag = CompleteBipartite(p1, p2)
    spec = _symbolic_spec(build(tag))
    for n in range(case.n_min, case.n_max + 1):
        I = evaluate(spec, n)
        r = v_number(I)
        checks.append(Check("v", n, n * p1 + p2 - 2, r.value, list(r.witness)))
        checks.append(Check("reg-v", n, n * (p2 - p1) - (p2 - p1), reg_closed_form(tag, n) - r.value))
        if n == oracle_n:
            _oracle_check(checks, I, r.prime, n)


def _complete(case: TheoremCase, checks: list[Check], oracle_n: int):
    m = case.params["m"]
    tag = Complete(m)
    spec = _symbolic_spec(build(tag))
    for n in range(case.n_min, case.n_max + 1):
        if n % 2 == 0:
            expected = Fraction(m, 2) * n + m - 3
        else:
            expected = Fraction(m, 2) * n + Fraction(m, 2) - 2
        I = evaluate(spec, n)
        r = v_number(I)
        checks.append(Check("v", n, _half_line(expected), r.value, list(r.witness)))
        gap = reg_closed_form(tag, n) - r.value
        if n <= 2:
            checks.append(Check("reg-v", n, 0, gap))
        else:
            checks.append(Check("reg-v>0", n, True, gap > 0))
        if n == oracle_n:
            _oracle_check(checks, I, r.prime, n)


def _cycle(case: TheoremCase, checks: list[Check], oracle_n: int):
    u = case.params["u"]
    spec = _symbolic_spec(build(Cycle(u)))
    for n in range(case.n_min, case.n_max + 1):
        shift = Fraction(-1, 2) if (u % 2 and n % 2) else Fraction(0)
        expected = _half_line(Fraction(u, 2) * n + shift)
        I = evaluate(spec, n)
        local = local_v_all(I)
        for p, r in sorted(local.items()):
            checks.append(Check(f"v_{p}", n, expected, r.value, list(r.witness)))
        r = v_number(I)
        checks.append(Check("v", n, expected, r.value, list(r.witness)))
        if n == oracle_n:
            _oracle_check(checks, I, r.prime, n)


def _pendant(case: TheoremCase, checks: list[Check], oracle_n: int):
    m, s = case.params["m"], case.params["s"]
    G = build(Pendant(m, s))
    spec = _symbolic_spec(G)
    ctx = G.ctx
    core = [f"x{j}" for j in range(1, m + 1)]
    for n in range(case.n_min, case.n_max + 1):
        I = evaluate(spec, n)
        ass = associated_primes(I)
        for j in range(1, m + 1):
            for l in range(1, s + 1):
                P = _edge_prime(ctx, f"x{j}", f"x{j}_{l}")
                r = local_v(I, P, ass)
                checks.append(Check(f"v_{P}", n, m * n + s - 2, r.value, list(r.witness)))
        for a in range(m):
            for b in range(a + 1, m):
                Q = _edge_prime(ctx, core[a], core[b])
                r = local_v(I, Q, ass)
                checks.append(Check(f"v_{Q}", n, (m + s - 1) * n + s - 1, r.value, list(r.witness)))
        r = v_number(I)
        checks.append(Check("v", n, m * n + s - 2, r.value, list(r.witness)))
        if n == oracle_n:
            _oracle_check(checks, I, r.prime, n)


def _hbip(case: TheoremCase, checks: list[Check], oracle_n: int):
    p = case.params["p"]
    H = build(HBip(p))
    bip, _ = is_bipartite(H)
    checks.append(Check("bipartite", None, True, bip))
    checks.append(Check("unmixed", None, True, is_unmixed_edge_ideal(H)))
    checks.append(Check("complete multipartite", None, False, is_complete_multipartite(H)))
    if len(H.vertices) <= 8:
        checks.append(Check("complete multipartite (exhaustive)", None, False, complete_multipartite_by_search(H)))
    J = cover_ideal(H)
    r = v_number(J)
    b = bight(edge_ideal(H))
    checks.append(Check("v(J)", None, 3 * p - 2, r.value, list(r.witness)))
    checks.append(Check("bight(I)", None, 2 * p, b))
    checks.append(Check("v-bight", None, p - 2, r.value - b))
    _oracle_check(checks, J, r.prime, None)


def _reg_gap(case: TheoremCase, checks: list[Check], oracle_n: int):
    k = case.params["k"]
    if case.params.get("bipartite", 1):
        m = case.params.get("m", 2)
        inner, kk = CompleteBipartite(m, m + 1), k + 1
    else:
        inner, kk = Complete(3), 2 * k + 1
    H = build(Fakhari(inner, kk))
    # reg(S/J(H)) = reg(R/J(G)^(kk)) through polarization
    reg = reg_closed_form(inner, kk)
    r = v_number(cover_ideal(H))
    checks.append(Check("bipartite", None, bool(case.params.get("bipartite", 1)), is_bipartite(H)[0]))
    checks.append(Check("reg-v", None, k, reg - r.value, list(r.witness)))


def _slope_gap(case: TheoremCase, checks: list[Check], oracle_n: int):
    m, t = case.params["m"], case.params["t"]
    G = build(Pendant(m, t + 1))
    spec = _symbolic_spec(G)
    P = _edge_prime(G.ctx, "x1", "x1_1")
    Q = _edge_prime(G.ctx, "x1", "x2")
    sp = slope_limit(v_series(spec, case.n_min, case.n_max, P))
    sq = slope_limit(v_series(spec, case.n_min, case.n_max, Q))
    checks.append(Check("slope v_P", None, m, sp))
    checks.append(Check("slope v_Q", None, m + t, sq))
    checks.append(Check("slope gap", None, t, sq - sp if not isinstance(sq, tuple) and not isinstance(sp, tuple) else None))


def _square_exponent(case: TheoremCase, checks: list[Check], oracle_n: int):
    spec = square_exponent_filtration(max(case.n_max, 3 * 4))
    ctx = spec.ctx
    for n in range(case.n_min, case.n_max + 1):
        I = evaluate(spec, n)
        for p, r in sorted(local_v_all(I).items()):
            checks.append(Check(f"v_{p}", n, n * n, r.value, list(r.witness)))
    # n = 1..12 gives every residue class mod 4 three samples
    s = v_series(spec, 1, 12)
    for t in range(1, 5):
        checks.append(Check(f"no fit at period {t} (n=1..12)", None, None, quasi_linear_fit(s, t)))
    _oracle_check(checks, evaluate(spec, oracle_n), MonomialPrime.from_names(ctx, ["x"]), oracle_n)


def _sqrt2(case: TheoremCase, checks: list[Check], oracle_n: int):
    spec = sqrt2_filtration(case.n_max)
    for n in range(case.n_min, case.n_max + 1):
        r = v_number(evaluate(spec, n))
        checks.append(Check("v", n, ceil_sqrt2_times(n) - 1, r.value, list(r.witness)))
        if n == oracle_n:
            _oracle_check(checks, evaluate(spec, n), r.prime, n)


def _four_variable_example(case: TheoremCase, checks: list[Check], oracle_n: int):
    ctx = RingContext(("x", "y", "z", "w"))
    I = minimalize([ctx.monomial(d) for d in ({"x": 1, "y": 1}, {"x": 1, "z": 1}, {"x": 1, "w": 1}, {"y": 1, "z": 1})], ctx)
    spec = FiltrationSpec("symbolic_minass", base=I)
    primes = [MonomialPrime.from_names(ctx, s) for s in (["x", "y"], ["x", "z"], ["y", "z", "w"])]
    for n in range(case.n_min, case.n_max + 1):
        expected = 3 * n // 2 if n % 2 == 0 else (3 * n - 1) // 2
        In = evaluate(spec, n)
        ass = associated_primes(In)
        for P in primes:
            r = local_v(In, P, ass)
            checks.append(Check(f"v_{P}", n, expected, r.value, list(r.witness)))
        if n == oracle_n:
            _oracle_check(checks, In, primes[0], n)


def _polarization(case: TheoremCase, checks: list[Check], oracle_n: int):
    k = case.params["k"]
    tag = parse_family(case.params["graph"]) if isinstance(case.params.get("graph"), str) else case.params["graph"]
    G = build(tag)
    Jk = evaluate(_symbolic_spec(G), k)
    pol = polarize(Jk)
    JG = cover_ideal(build(Fakhari(tag, k)))
    checks.append(Check("polarization = cover ideal", None, True, same_ideal(pol, JG)))
    checks.append(Check("v(pol) = v(J^(k))", None, v_number(Jk).value, v_number(pol).value))
    checks.append(Check("v(J(G_k)) = v(J^(k))", None, v_number(Jk).value, v_number(JG).value))


CASES: dict[str, Callable[[TheoremCase, list[Check], int], None]] = {
    "T4.1": _complete_bipartite,
    "T4.3": _complete,
    "T4.5": _cycle,
    "T4.7": _pendant,
    "C4.4": _hbip,
    "T4.6": _reg_gap,
    "C4.9": _slope_gap,
    "E1.1": _square_exponent,
    "E1.2": _sqrt2,
    "E3.6": _four_variable_example,
    "R4.2": _polarization,
}

REQUIRED_PARAMS = {
    "T4.1": ("p1", "p2"),
    "T4.3": ("m",),
    "T4.5": ("u",),
    "T4.7": ("m", "s"),
    "C4.4": ("p",),
    "T4.6": ("k",),
    "C4.9": ("m", "t"),
    "E1.1": (),
    "E1.2": (),
    "E3.6": (),
    "R4.2": ("graph", "k"),
}


def _ring_size(case: TheoremCase) -> int:
    p = case.params
    cid = case.id
    if cid == "T4.1":
        return p["p1"] + p["p2"]
    if cid == "T4.3":
        return p["m"]
    if cid == "T4.5":
        return p["u"]
    if cid == "T4.7":
        return p["m"] * (p["s"] + 1)
    if cid == "C4.4":
        return 4 * p["p"]
    if cid == "T4.6":
        if p.get("bipartite", 1):
            return (2 * p.get("m", 2) + 1) * (p["k"] + 1)
        return 3 * (2 * p["k"] + 1)
    if cid == "C4.9":
        return p["m"] * (p["t"] + 2)
    if cid == "R4.2":
        tag = parse_family(p["graph"]) if isinstance(p["graph"], str) else p["graph"]
        return len(build(tag).vertices) * p["k"]
    return 4


def verify(case: TheoremCase, max_vars: int | None = None, max_n: int | None = None,
           expected_override: dict[tuple[str, int | None], Any] | None = None,
           seed: int | None = None) -> VerifyReport:
    """Run one case.

    The oracle cross-check runs at ``n_min``, or at a seeded random ``n`` in
    range when ``seed`` is given. ``expected_override`` replaces expected
    values by ``(label, n)``, which is how failure reports are exercised.
    """
    if case.id not in CASES:
        raise KeyError(f"unknown case {case.id!r}; known: {sorted(CASES)}")
    missing = [k for k in REQUIRED_PARAMS[case.id] if k not in case.params]
    if missing:
        raise ValueError(f"case {case.id} is missing parameters {missing}")
    env_vars, env_n = scale_limits()
    max_vars = max_vars if max_vars is not None else env_vars
    max_n = max_n if max_n is not None else env_n
    if _ring_size(case) > max_vars:
        raise ScaleLimitError(f"{case.id} needs {_ring_size(case)} variables; limit is {max_vars}")
    if case.n_max > max_n:
        raise ScaleLimitError(f"{case.id} asks for n up to {case.n_max}; limit is {max_n}")
    checks: list[Check] = []
    t0 = time.perf_counter()
    oracle_n = case.n_min if seed is None else random.Random(seed).randint(case.n_min, case.n_max)
    CASES[case.id](case, checks, oracle_n)
    if expected_override:
        for c in checks:
            if (c.label, c.n) in expected_override:
                c.expected = expected_override[(c.label, c.n)]
    return VerifyReport(case, checks, time.perf_counter() - t0)


DEFAULT_CASES: list[TheoremCase] = [
    *[TheoremCase("T4.1", {"p1": a, "p2": b}, 1, 5) for a, b in ((2, 2), (2, 3), (3, 3), (2, 4))],
    *[TheoremCase("T4.3", {"m": m}, 1, 6) for m in (3, 4, 5)],
    *[TheoremCase("T4.5", {"u": u}, 1, 5) for u in (4, 5, 6, 7)],
    *[TheoremCase("T4.7", {"m": m, "s": s}, 1, 4) for m, s in ((2, 2), (3, 2), (2, 3))],
    TheoremCase("E3.6", {}, 1, 6),
    TheoremCase("E1.1", {}, 1, 5),
    TheoremCase("E1.2", {}, 1, 5),
    *[TheoremCase("C4.4", {"p": p}) for p in (2, 3)],
    TheoremCase("T4.6", {"k": 1, "m": 2, "bipartite": 1}),
    TheoremCase("T4.6", {"k": 1, "bipartite": 0}),
    *[TheoremCase("C4.9", {"m": 2, "t": t}, 1, 6) for t in (1, 2)],
    *[TheoremCase("R4.2", {"graph": g, "k": 2}) for g in ("K(3)", "C(5)")],
]


def _run(args) -> VerifyReport:
    return verify(*args)


def verify_all(cases: list[TheoremCase], max_vars: int | None = None, max_n: int | None = None,
               seed: int | None = None, jobs: int = 1) -> list[VerifyReport]:
    """Run independent cases, in worker processes when ``jobs > 1``.

    Reports come back sorted by ``(id, params, range)`` whatever the
    completion order.
    """
    work = [(c, max_vars, max_n, None, seed) for c in cases]
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run, work))
    else:
        reports = [_run(w) for w in work]
    return sorted(reports, key=lambda r: (r.case.id, sorted(r.case.params.items(), key=str), r.case.n_min, r.case.n_max))
