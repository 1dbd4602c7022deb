import pytest
from hypothesis import given

from conftest import box, ideals
from vfilt.decomp import (
    MonomialPrime,
    associated_primes,
    bight,
    height,
    irreducible_decomposition,
    minimal_primes,
    q_p,
    recombine,
)
from vfilt.graphs import Complete, HBip, build, cover_ideal, edge_ideal
from vfilt.monomial import MonomialIdeal, colon
from vfilt.serialize import parse_ideal


def P(text):
    return parse_ideal(text)


def supports(I, comps):
    return {tuple(I.ctx.variables[i] for i in c.support) for c in comps}


def test_decomposition_examples():
    I = P("(x*y) in [x,y]")
    assert {c.ideal(I.ctx) for c in irreducible_decomposition(I)} == {P("(x) in [x,y]"), P("(y) in [x,y]")}
    I = P("(x^2, x*y) in [x,y]")
    assert {c.ideal(I.ctx) for c in irreducible_decomposition(I)} == {P("(x) in [x,y]"), P("(x^2, y) in [x,y]")}
    I = P("(x*y, x*z, x*w, y*z) in [x,y,z,w]")
    assert supports(I, irreducible_decomposition(I)) == {("x", "y"), ("x", "z"), ("y", "z", "w")}


@pytest.mark.parametrize("text", ["() in [x]", "(1) in [x]"])
def test_decomposition_rejects_trivial_ideals(text):
    with pytest.raises(ValueError):
        irreducible_decomposition(P(text))


def test_associated_primes_examples(k3):
    I = P("(x^2, x*y^4) in [x,y]")
    assert [p.names for p in associated_primes(I)] == [["x"], ["x", "y"]]
    assert [p.names for p in associated_primes(P("(x, y) in [x,y]"))] == [["x", "y"]]
    assert sorted(p.names for p in associated_primes(k3)) == [["x1", "x2"], ["x1", "x3"], ["x2", "x3"]]
    assert [p.names for p in minimal_primes(I)] == [["x"]]


def test_height_and_bight():
    ctx = build(Complete(3)).ctx
    assert height(MonomialPrime.from_names(ctx, ["x1", "x2"])) == 2
    H = build(HBip(2))
    assert bight(edge_ideal(H)) == 4
    assert {p.height for p in associated_primes(edge_ideal(H))} == {4}


def test_q_p_examples():
    I = P("(x^2, x*y^4) in [x,y]")
    p = MonomialPrime.from_names(I.ctx, ["x"])
    m = MonomialPrime.from_names(I.ctx, ["x", "y"])
    assert q_p(I, p) == P("(x, y) in [x,y]")
    assert q_p(I, m).is_unit
    E = P("(x*y, x*z, x*w, y*z) in [x,y,z,w]")
    assert q_p(E, MonomialPrime.from_names(E.ctx, ["x", "y"])).is_unit


def test_q_p_rejects_non_associated():
    I = P("(x^2, x*y^4) in [x,y]")
    with pytest.raises(ValueError):
        q_p(I, MonomialPrime.from_names(I.ctx, ["y"]))


def test_prime_requires_support(xy):
    with pytest.raises(ValueError):
        MonomialPrime(xy, ())


def test_cover_ideal_primes_are_edges():
    G = build(HBip(2))
    ass = associated_primes(cover_ideal(G))
    assert {tuple(p.names) for p in ass} == {tuple(sorted(e, key=G.vertices.index)) for e in G.edges}


# -- properties ---------------------------------------------------------------------


@given(ideals())
def test_decomposition_recombines(I):
    for method in ("incremental", "split"):
        assert recombine(irreducible_decomposition(I, method), I.ctx) == I


@given(ideals())
def test_methods_agree(I):
    a = {c.exponents for c in irreducible_decomposition(I, "incremental")}
    b = {c.exponents for c in irreducible_decomposition(I, "split")}
    assert a == b


@given(ideals())
def test_decomposition_is_irredundant(I):
    comps = irreducible_decomposition(I)
    for c in comps:
        rest = [d for d in comps if d is not c]
        if rest:
            assert recombine(rest, I.ctx) != I


@given(ideals(max_exp=2))
def test_associated_primes_match_box_search(I):
    # a prime is associated iff it is (I : f) for some monomial f below the lcm of the generators
    found = set()
    for f in box(I.max_exponents()):
        if f in I:
            continue
        Q = colon(I, f)
        if all(sum(g) == 1 for g in Q.gens):
            found.add(tuple(g.index(1) for g in Q.gens))
    assert {tuple(sorted(p.support)) for p in associated_primes(I)} == {tuple(sorted(s)) for s in found}


@given(ideals())
def test_minimal_primes_are_minimal(I):
    mins = minimal_primes(I)
    for p in mins:
        assert not any(q.is_proper_subset(p) for q in associated_primes(I))
    assert MonomialIdeal.unit(I.ctx) != I


def test_huge_exponents_stay_exact():
    N = 2**50
    I = P(f"(x^2, x*y^{N}) in [x,y]")
    for method in ("incremental", "split"):
        comps = {c.exponents for c in irreducible_decomposition(I, method)}
        assert comps == {(1, 0), (2, N)}
