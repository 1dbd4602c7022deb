from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vfilt.asymptotics import (
    NoFitError,
    QuasiLinearFit,
    best_fit,
    quasi_linear_fit,
    series_report,
    slope_gap,
    slope_limit,
    v_series,
)
from vfilt.decomp import MonomialPrime
from vfilt.filtrations import FiltrationSpec, evaluate, explicit_filtration, square_exponent_filtration
from vfilt.graphs import Complete, CompleteBipartite, Cycle, Pendant, build, cover_ideal
from vfilt.monomial import alpha
from vfilt.serialize import parse_ideal


def symbolic(tag):
    return FiltrationSpec("symbolic_minass", base=cover_ideal(build(tag)))


def test_square_exponent_series():
    s = v_series(square_exponent_filtration(4), 1, 4)
    assert list(s.values().values()) == [1, 4, 9, 16]
    assert s.validate()


def test_ordinary_powers_of_k33():
    s = v_series(FiltrationSpec("ordinary", base=cover_ideal(build(CompleteBipartite(3, 3)))), 1, 4)
    assert s.values() == {n: 3 * n + 1 for n in range(1, 5)}


def test_constant_series_has_slope_zero():
    I = parse_ideal("(x^2, x*y) in [x,y]")
    s = v_series(explicit_filtration([I] * 4), 1, 4)
    assert len(set(s.values().values())) == 1
    assert slope_limit(s) == 0


def test_prime_leaving_ass_names_n():
    spec = FiltrationSpec("ordinary", base=cover_ideal(build(Complete(3))))
    m = MonomialPrime.from_names(spec.ctx, ["x1", "x2", "x3"])
    with pytest.raises(ValueError, match="I_1"):
        v_series(spec, 1, 3, m)


def test_bad_range():
    with pytest.raises(ValueError):
        v_series(square_exponent_filtration(4), 3, 2)


def test_odd_cycle_fit():
    fit = quasi_linear_fit(v_series(symbolic(Cycle(5)), 1, 6), 2)
    assert fit.lines == ((Fraction(5, 2), Fraction(0)), (Fraction(5, 2), Fraction(-1, 2)))
    assert fit.n0 == 1
    assert fit.to_json()["lines"][1] == {"slope": "5/2", "intercept": "-1/2"}


def test_pendant_prime_fit():
    spec = symbolic(Pendant(3, 2))
    P = MonomialPrime.from_names(spec.ctx, ["x1", "x1_1"])
    fit = quasi_linear_fit(v_series(spec, 1, 4, P), 1)
    assert fit.lines == ((Fraction(3), Fraction(0)),)


@pytest.mark.parametrize("period", [1, 2, 3, 4])
def test_square_exponent_has_no_fit(period):
    assert quasi_linear_fit(v_series(square_exponent_filtration(12), 1, 12), period) is None


def test_insufficient_samples():
    with pytest.raises(ValueError):
        quasi_linear_fit({1: 1, 2: 2}, 1)
    with pytest.raises(ValueError):
        quasi_linear_fit({n: n for n in range(1, 6)}, 2)
    with pytest.raises(ValueError):
        quasi_linear_fit({1: 1, 2: 2, 3: 3}, 0)


def test_fit_start_index():
    vals = {1: 7, 2: 2, 3: 4, 4: 6}
    fit = quasi_linear_fit(vals, 1)
    assert fit.n0 == 2 and fit(10) == 18


def test_slope_limits(k3):
    assert slope_limit(v_series(symbolic(Complete(3)), 1, 6)) == Fraction(3, 2)
    assert Fraction(alpha(evaluate(symbolic(Complete(3)), 2)), 2) == Fraction(3, 2)
    assert slope_limit(v_series(FiltrationSpec("ordinary", base=k3), 1, 4)) == alpha(k3)


def test_diverging_series():
    with pytest.raises(NoFitError) as err:
        slope_limit(v_series(square_exponent_filtration(12), 1, 12))
    assert err.value.tail[12] == 12


def test_slope_gaps():
    spec = symbolic(Pendant(2, 2))
    P = MonomialPrime.from_names(spec.ctx, ["x1", "x1_1"])
    Q = MonomialPrime.from_names(spec.ctx, ["x1", "x2"])
    assert slope_gap(spec, P, Q, 1, 6) == 1
    assert slope_gap(spec, P, P, 1, 6) == 0
    spec = symbolic(Pendant(3, 3))
    P = MonomialPrime.from_names(spec.ctx, ["x1", "x1_1"])
    Q = MonomialPrime.from_names(spec.ctx, ["x1", "x2"])
    assert slope_gap(spec, P, Q, 1, 3) == 2


def test_report_shape():
    s = v_series(symbolic(Cycle(5)), 1, 6)
    rep = series_report(s, best_fit(s))
    assert rep["samples"] == {"1": 2, "2": 5, "3": 7, "4": 10, "5": 12, "6": 15}
    assert rep["fit"] == {
        "period": 2,
        "lines": [{"slope": "5/2", "intercept": "0"}, {"slope": "5/2", "intercept": "-1/2"}],
        "n0": 1,
    }


lines = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


@given(st.integers(1, 4).flatmap(lambda t: st.tuples(st.just(t), st.lists(lines, min_size=t, max_size=t))))
def test_fit_recovers_exact_quasi_linear_data(data):
    t, ls = data
    vals = {n: ls[n % t][0] * n + ls[n % t][1] for n in range(1, 3 * t + 1)}
    exact = quasi_linear_fit(vals, t)
    assert exact.n0 == 1 and all(exact(n) == v for n, v in vals.items())
    # a smaller period may still fit the tail
    fit = best_fit(vals, t)
    assert fit is not None and fit.period <= t
    assert all(fit(n) == v for n, v in vals.items() if n >= fit.n0)


def test_quasi_linear_fit_callable():
    fit = QuasiLinearFit(2, ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))), 1)
    assert [fit(n) for n in range(1, 5)] == [2, 2, 4, 4]
