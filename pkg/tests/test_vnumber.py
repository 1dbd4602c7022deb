import pytest
from hypothesis import given

from conftest import ideals
from vfilt.decomp import MonomialPrime, associated_primes
from vfilt.graphs import Complete, Cycle, Pendant, build, cover_ideal
from vfilt.monomial import MonomialIdeal, colon, degree
from vfilt.serialize import parse_ideal
from vfilt.vnumber import is_witness, local_v, local_v_all, local_v_oracle, v_number


def P(text):
    return parse_ideal(text)


def prime(I, *names):
    return MonomialPrime.from_names(I.ctx, names)


def test_square_exponent_example_at_two():
    I = P("(x^2, x*y^4) in [x,y]")
    assert local_v(I, prime(I, "x", "y")).value == 4
    assert local_v(I, prime(I, "x")).value == 4


def test_prime_itself_has_v_zero():
    I = P("(x, y) in [x,y]")
    r = local_v(I, prime(I, "x", "y"))
    assert r.value == 0 and r.witness == (0, 0)


def test_four_variable_example_at_one():
    I = P("(x*y, x*z, x*w, y*z) in [x,y,z,w]")
    r = local_v(I, prime(I, "x", "y"))
    assert r.value == 1 and r.witness == I.ctx.var("z")


def test_graph_values(k3):
    assert v_number(k3).value == 1
    assert v_number(cover_ideal(build(Cycle(5)))).value == 2
    assert v_number(cover_ideal(build(Pendant(3, 2)))).value == 3


def test_documented_witnesses(k3):
    J = cover_ideal(build(Cycle(5)))
    r = local_v(J, prime(J, "x3", "x4"))
    assert r.value == 2
    assert colon(J, J.ctx.monomial({"x2": 1, "x5": 1})) == prime(J, "x3", "x4").ideal()
    assert is_witness(J, r.witness, r.prime)
    r = local_v(k3, prime(k3, "x1", "x2"))
    assert r.witness == k3.ctx.var("x3")


def test_rejects_non_associated_prime():
    I = P("(x^2, x*y^4) in [x,y]")
    with pytest.raises(ValueError):
        local_v(I, prime(I, "y"))


@pytest.mark.parametrize("text", ["(1) in [x]", "() in [x]"])
def test_v_rejects_trivial(text):
    with pytest.raises(ValueError):
        v_number(P(text))


def test_oracle_rejects_unit():
    I = P("(1) in [x]")
    with pytest.raises(ValueError):
        local_v_oracle(I, MonomialPrime(I.ctx, (0,)))


def test_oracle_cap_too_small_is_an_error():
    I = P("(x^2, x*y^4) in [x,y]")
    with pytest.raises(RuntimeError):
        local_v_oracle(I, prime(I, "x"), degree_cap=2)


def test_v_is_minimum_over_local():
    J = cover_ideal(build(Pendant(2, 2)))
    loc = local_v_all(J)
    assert v_number(J).value == min(r.value for r in loc.values())


def test_result_json():
    I = P("(x^2, x*y^4) in [x,y]")
    assert v_number(I).to_json() == {"value": 4, "prime": ["x"], "witness": [0, 4]}


@given(ideals())
def test_quotient_method_matches_oracle(I):
    for p in associated_primes(I):
        fast = local_v(I, p)
        slow = local_v_oracle(I, p)
        assert fast.value == slow.value
        assert degree(fast.witness) == fast.value
        assert colon(I, fast.witness) == p.ideal()
        assert is_witness(I, slow.witness, p)


@given(ideals())
def test_global_is_min_of_local(I):
    assert v_number(I).value == min(r.value for r in local_v_all(I).values())
