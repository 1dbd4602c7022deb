import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vfilt.decomp import associated_primes
from vfilt.filtrations import symbolic_power
from vfilt.graphs import (
    REG_REGISTRY,
    Complete,
    CompleteBipartite,
    Cycle,
    Fakhari,
    Graph,
    HBip,
    Pendant,
    build,
    complete_multipartite_by_search,
    cover_ideal,
    edge_ideal,
    graph_from_string,
    is_bipartite,
    is_complete_multipartite,
    is_unmixed_edge_ideal,
    minimal_vertex_covers,
    parse_family,
    polarize,
    reg_closed_form,
)
from vfilt.monomial import rename, same_ideal
from vfilt.serialize import parse_ideal
from vfilt.vnumber import v_number

EDGE = Graph(("x1", "x2"), (("x1", "x2"),))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(("a",), (("a", "a"),))
    with pytest.raises(ValueError):
        Graph(("a", "b"), (("a", "b"), ("b", "a")))
    with pytest.raises(ValueError):
        Graph(("a",), (("a", "b"),))
    with pytest.raises(ValueError):
        build(CompleteBipartite(3, 2))
    with pytest.raises(ValueError):
        build(Cycle(2))


def test_family_sizes():
    assert len(build(Pendant(3, 2)).vertices) == 9
    assert len(build(HBip(3)).vertices) == 12
    assert len(build(Fakhari(CompleteBipartite(2, 3), 2)).vertices) == 10


def test_fakhari_one_is_identity_up_to_labels():
    G = build(Cycle(5))
    F = build(Fakhari(Cycle(5), 1))
    assert F.relabel({f"{v}.1": v for v in G.vertices}) == G


def test_fakhari_two_edges_of_k22():
    F = build(Fakhari(CompleteBipartite(2, 2), 2))
    expected = set()
    for i in (1, 2):
        for j in (1, 2):
            expected |= {frozenset((f"x{i}.1", f"y{j}.1")), frozenset((f"x{i}.1", f"y{j}.2")), frozenset((f"x{i}.2", f"y{j}.1"))}
    assert {frozenset(e) for e in F.edges} == expected


def test_cover_and_edge_ideals(k3):
    assert cover_ideal(EDGE) == parse_ideal("(x1, x2) in [x1,x2]")
    assert k3 == parse_ideal("(x1*x2, x1*x3, x2*x3) in [x1,x2,x3]")
    assert cover_ideal(build(CompleteBipartite(2, 3))) == parse_ideal("(x1*x2, y1*y2*y3) in [x1,x2,y1,y2,y3]")
    assert edge_ideal(EDGE) == parse_ideal("(x1*x2) in [x1,x2]")
    assert edge_ideal(build(Cycle(4))).ngens == 4


def test_edgeless_rejected():
    G = Graph(("a", "b"), ())
    with pytest.raises(ValueError):
        cover_ideal(G)
    with pytest.raises(ValueError):
        edge_ideal(G)


def test_polarize():
    assert polarize(parse_ideal("(x^2) in [x]")) == parse_ideal("(x.1*x.2) in [x.1, x.2]")
    # squarefree input only gains a ".1" suffix
    J = cover_ideal(build(Cycle(5)))
    assert rename(polarize(J), {f"{v}.1": v for v in J.ctx.variables}) == J


@pytest.mark.parametrize("tag", [Complete(3), Cycle(5), CompleteBipartite(2, 2)])
def test_polarized_symbolic_square_is_fakhari_cover(tag):
    J2 = symbolic_power(cover_ideal(build(tag)), 2)
    assert same_ideal(polarize(J2), cover_ideal(build(Fakhari(tag, 2))))


def test_bipartite():
    assert is_bipartite(build(Cycle(5)))[0] is False
    ok, (a, b) = is_bipartite(build(CompleteBipartite(2, 3)))
    assert ok and sorted((len(a), len(b))) == [2, 3]
    H = build(HBip(2))
    assert is_bipartite(H)[0] and is_unmixed_edge_ideal(H)


def test_complete_multipartite():
    assert is_complete_multipartite(build(CompleteBipartite(2, 3)))
    assert is_complete_multipartite(build(Complete(4)))
    assert not is_complete_multipartite(build(Cycle(5)))
    assert not is_complete_multipartite(build(HBip(2)))
    assert complete_multipartite_by_search(build(Cycle(4)))
    assert not complete_multipartite_by_search(build(HBip(2)))


def test_reg_closed_form():
    assert reg_closed_form(CompleteBipartite(2, 3), 2) == 6
    assert reg_closed_form(Complete(3), 1) == 1
    assert v_number(cover_ideal(build(Complete(3)))).value == 1
    with pytest.raises(NotImplementedError):
        reg_closed_form(Cycle(5), 1)
    assert set(REG_REGISTRY) == {"CompleteBipartite", "Complete"}


@pytest.mark.parametrize("p", [2, 3])
def test_reg_equals_v_on_balanced_bipartite(p):
    tag = CompleteBipartite(p, p)
    J = cover_ideal(build(tag))
    for n in (1, 2, 3):
        assert reg_closed_form(tag, n) == v_number(symbolic_power(J, n)).value


def test_minimal_vertex_covers():
    assert set(minimal_vertex_covers(build(Complete(3)))) == {frozenset(s) for s in (("x1", "x2"), ("x1", "x3"), ("x2", "x3"))}
    assert set(minimal_vertex_covers(EDGE)) == {frozenset(("x1",)), frozenset(("x2",))}


def test_covers_of_c5_are_sharp_on_every_edge():
    G = build(Cycle(5))
    covers = minimal_vertex_covers(G)
    for a, b in G.edges:
        assert any(len({a, b} & c) == 1 for c in covers)


def test_parse_family():
    assert parse_family("Kb(2,3)") == CompleteBipartite(2, 3)
    assert parse_family("fakhari(Kb(2,3), 2)") == Fakhari(CompleteBipartite(2, 3), 2)
    assert parse_family("kpend(3,2)") == Pendant(3, 2)
    assert str(parse_family("hbip(2)")) == "hbip(2)"
    for bad in ("Q(3)", "K(a)", "K(2,3)", "fakhari(K(3))", "K3"):
        with pytest.raises(ValueError):
            parse_family(bad)


@given(st.sampled_from(["K(3)", "C(6)", "Kb(2,3)", "kpend(2,2)", "hbip(2)", "fakhari(C(4),2)"]))
def test_graph_json_round_trip(text):
    G = graph_from_string(text)
    assert Graph.from_json(json.loads(json.dumps(G.to_json()))) == G


@given(st.integers(3, 6).flatmap(lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=1, max_size=8).map(lambda es: (n, es))))
def test_cover_ideal_matches_vertex_cover_enumeration(data):
    n, raw = data
    verts = tuple(f"v{i}" for i in range(n))
    edges = {tuple(sorted((a, b))) for a, b in raw if a != b}
    if not edges:
        return
    G = Graph(verts, tuple((verts[a], verts[b]) for a, b in edges))
    covers = [set(c) for r in range(n + 1) for c in itertools.combinations(verts, r)
              if all(verts[a] in c or verts[b] in c for a, b in edges)]
    minimal = {frozenset(c) for c in covers if not any(d < c for d in covers)}
    assert set(minimal_vertex_covers(G)) == minimal
    assert {frozenset(p.names) for p in associated_primes(cover_ideal(G))} == {frozenset((verts[a], verts[b])) for a, b in edges}
