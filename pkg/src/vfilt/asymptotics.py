"""v-number series along filtrations and exact quasi-linear fits.

All fits are exact: a residue class fits when its tail samples lie on one
rational line. Nothing here is certified beyond the sampled range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .decomp import MonomialPrime, associated_primes
from .filtrations import FiltrationSpec, evaluate
from .vnumber import VResult, is_witness, local_v, v_number

MAX_PERIOD = 6
MIN_SAMPLES = 3


class NoFitError(ValueError):
    """No exact quasi-linear fit at any tried period."""

    def __init__(self, msg: str, tail: dict[int, Fraction]):
        super().__init__(msg)
        self.tail = tail


@dataclass(frozen=True)
class VSeries:
    spec: FiltrationSpec
    prime: MonomialPrime | None  # None means the global v-number
    samples: dict[int, VResult]
    n_min: int
    n_max: int

    def values(self) -> dict[int, int]:
        return {n: r.value for n, r in sorted(self.samples.items())}

    def validate(self) -> bool:
        return all(is_witness(evaluate(self.spec, n), r.witness, r.prime) for n, r in self.samples.items())


@dataclass(frozen=True)
class QuasiLinearFit:
    """``value(n) = slope_i * n + intercept_i`` for ``n >= n0``, ``i = n mod period``."""

    period: int
    lines: tuple[tuple[Fraction, Fraction], ...]
    n0: int

    def __call__(self, n: int) -> Fraction:
        slope, intercept = self.lines[n % self.period]
        return slope * n + intercept

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s for s, _ in self.lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "period": self.period,
            "lines": [{"slope": str(s), "intercept": str(b)} for s, b in self.lines],
            "n0": self.n0,
        }


def v_series(spec: FiltrationSpec, n_min: int, n_max: int, prime: MonomialPrime | None = None) -> VSeries:
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"bad range {n_min}..{n_max}")
    samples = {}
    for n in range(n_min, n_max + 1):
        I = evaluate(spec, n)
        if prime is None:
            samples[n] = v_number(I)
            continue
        ass = associated_primes(I)
        if prime not in ass:
            raise ValueError(f"{prime} is not an associated prime of I_{n}")
        samples[n] = local_v(I, prime, ass)
    return VSeries(spec, prime, samples, n_min, n_max)


def _values(series: VSeries | Mapping[int, int]) -> dict[int, int]:
    return series.values() if isinstance(series, VSeries) else dict(sorted(series.items()))


def quasi_linear_fit(series: VSeries | Mapping[int, int], period: int) -> QuasiLinearFit | None:
    """Exact per-residue lines fitted from the tail, or None if the tail is not linear.

    Each residue class needs at least three samples; its line is taken
    through the last two, and the third-to-last must lie on it.
    """
    if period < 1:
        raise ValueError("period must be positive")
    vals = _values(series)
    classes: dict[int, list[int]] = {i: [] for i in range(period)}
    for n in vals:
        classes[n % period].append(n)
    if any(len(ns) < MIN_SAMPLES for ns in classes.values()):
        raise ValueError(f"period {period} needs at least {MIN_SAMPLES} samples per residue class")
    lines = []
    for i in range(period):
        ns = classes[i]
        a, b = ns[-2], ns[-1]
        slope = Fraction(vals[b] - vals[a], b - a)
        intercept = vals[b] - slope * b
        if slope * ns[-3] + intercept != vals[ns[-3]]:
            return None
        lines.append((slope, intercept))
    fit = QuasiLinearFit(period, tuple(lines), 0)
    ns = sorted(vals)
    n0 = ns[-1]
    for n in reversed(ns):
        if fit(n) != vals[n]:
            break
        n0 = n
    return QuasiLinearFit(period, tuple(lines), n0)


def best_fit(series: VSeries | Mapping[int, int], max_period: int = MAX_PERIOD) -> QuasiLinearFit | None:
    """The first exact fit over periods ``1..max_period`` that have enough samples."""
    vals = _values(series)
    for t in range(1, max_period + 1):
        if len(vals) < MIN_SAMPLES * t:
            break
        try:
            fit = quasi_linear_fit(vals, t)
        except ValueError:
            break
        if fit is not None:
            return fit
    return None


def slope_limit(series: VSeries | Mapping[int, int], max_period: int = MAX_PERIOD) -> Fraction | tuple[Fraction, ...]:
    """Common slope of the fitted lines, or the per-class slopes when they differ."""
    fit = best_fit(series, max_period)
    if fit is None:
        vals = _values(series)
        tail = {n: Fraction(v, n) for n, v in list(vals.items())[-MIN_SAMPLES:]}
        raise NoFitError("diverges from linear on the sampled range", tail)
    slopes = set(fit.slopes)
    return slopes.pop() if len(slopes) == 1 else fit.slopes


def slope_gap(spec: FiltrationSpec, prime_a: MonomialPrime, prime_b: MonomialPrime, n_min: int, n_max: int) -> Fraction:
    """Fitted slope of ``v_{prime_b}`` minus that of ``v_{prime_a}``."""
    sa = slope_limit(v_series(spec, n_min, n_max, prime_a))
    sb = sa if prime_b == prime_a else slope_limit(v_series(spec, n_min, n_max, prime_b))
    if isinstance(sa, tuple) or isinstance(sb, tuple):
        raise NoFitError("per-class slopes differ; no single limit", {})
    return sb - sa


def series_report(series: VSeries, fit: QuasiLinearFit | None = None) -> dict[str, Any]:
    return {
        "prime": series.prime.names if series.prime else "global",
        "samples": {str(n): v for n, v in series.values().items()},
        "witnesses": {str(n): list(r.witness) for n, r in sorted(series.samples.items())},
        "fit": fit.to_json() if fit else None,
    }
