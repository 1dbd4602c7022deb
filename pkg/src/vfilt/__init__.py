"""Monomial-ideal engine for v-numbers along power filtrations."""

from .asymptotics import NoFitError, QuasiLinearFit, VSeries, best_fit, quasi_linear_fit, slope_gap, slope_limit, v_series
from .decomp import (
    IrreducibleComponent,
    MonomialPrime,
    associated_primes,
    bight,
    irreducible_decomposition,
    minimal_primes,
    q_p,
    recombine,
)
from .filtrations import (
    FiltrationSpec,
    NewtonPolyhedron,
    SvdCertificate,
    closure_membership,
    closure_power,
    evaluate,
    integral_closure,
    svd_detect,
    symbolic_power,
)
from .graphs import Graph, build, cover_ideal, edge_ideal, graph_from_string, parse_family, polarize, reg_closed_form
from .monomial import (
    MonomialIdeal,
    RingContext,
    alpha,
    colon,
    colon_ideal,
    intersect,
    intersect_all,
    minimalize,
    power,
    product,
    saturation,
)
from .serialize import ParseError, format_ideal, parse_ideal
from .verify import ScaleLimitError, TheoremCase, VerifyReport, verify
from .vnumber import VResult, local_v, local_v_oracle, v_number

__all__ = [name for name in dir() if not name.startswith("_")]
