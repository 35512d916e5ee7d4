"""Exact counting of cuts, cocircuits and convex two-colourings, with the
reductions linking them and brute-force oracles to check each one."""

from .graph import (
    Cut,
    DisconnectedGraphError,
    Graph,
    GraphError,
    GraphFormatError,
    bridges,
    components,
    crossing_set,
    induces_connected,
    is_cocircuit,
    is_connected,
    parse_graph,
    serialize_graph,
    stretch,
)
from .linalg import RationalMatrix, SingularMatrixError, build_stretch_system, gauss_solve_exact
from .oracles import (
    CnfFormatError,
    FormulaError,
    MonotoneFormula,
    ResourceLimitError,
    Spectrum,
    cocircuit_spectrum,
    count_cocircuits,
    count_convex_two_colourings,
    count_cuts_of_size,
    count_sat,
    parse_cnf,
    serialize_cnf,
)
from .reductions import (
    NonIntegralSolutionError,
    ReductionCertificate,
    ReductionError,
    compose_chain,
    convex_from_cocircuits,
    maxcut_to_cocircuits,
    recover_spectrum,
    sat_to_maxcut,
)

__version__ = "0.1.0"
