import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vfilt.monomial import MonomialIdeal, RingContext, minimalize

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

NAMES = ("x", "y", "z", "w")


def ring(dim: int) -> RingContext:
    return RingContext(NAMES[:dim])


@st.composite
def monomials(draw, dim: int, max_exp: int = 3):
    return tuple(draw(st.integers(0, max_exp)) for _ in range(dim))


@st.composite
def ideals(draw, dim: int | None = None, max_exp: int = 3, max_gens: int = 4, proper: bool = True):
    """Nonzero monomial ideals in at most four variables, exponents <= max_exp."""
    d = dim if dim is not None else draw(st.integers(1, 4))
    gens = draw(st.lists(monomials(d, max_exp), min_size=1, max_size=max_gens))
    if proper:
        gens = [g for g in gens if any(g)]
        if not gens:
            gens = [tuple(1 if i == 0 else 0 for i in range(d))]
    return minimalize(gens, ring(d))


@st.composite
def ideal_pairs(draw, max_exp: int = 3):
    d = draw(st.integers(1, 4))
    return draw(ideals(d, max_exp)), draw(ideals(d, max_exp))


def random_corpus(count: int = 200, seed: int = 20240611) -> list[MonomialIdeal]:
    """Seeded corpus: up to 4 variables, exponents <= 3, proper and nonzero."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(d)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)]
        if gens:
            out.append(minimalize(gens, ring(d)))
    return out


def box(bounds):
    import itertools

    return itertools.product(*(range(b + 1) for b in bounds))


@pytest.fixture
def xy():
    return RingContext(("x", "y"))


@pytest.fixture
def k3():
    from vfilt.graphs import Complete, build, cover_ideal

    return cover_ideal(build(Complete(3)))
