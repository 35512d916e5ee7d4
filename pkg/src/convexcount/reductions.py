"""Counting reductions along the chain

    monotone 2-SAT -> cuts of size k -> cocircuits of size k'
                   -> all cocircuits -> convex two-colourings.

Each construction returns the target instance together with a
:class:`ReductionCertificate` recording the claimed relation between the
two solution counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .graph import Graph, bridges, is_connected, stretch
from .linalg import build_stretch_system, gauss_solve_exact
from .oracles import (
    MonotoneFormula,
    Spectrum,
    count_cocircuits,
    count_cuts_of_size,
    count_sat,
)


class ReductionError(ValueError):
    pass


class NonIntegralSolutionError(ArithmeticError):
    """Recovered spectrum is not a vector of non-negative integers."""

    def __init__(self, message: str, solution):
        super().__init__(message)
        self.solution = solution


@dataclass
class ReductionCertificate:
    """Claimed relation ``source_count * multiplier + additive = target_count``.

    ``sizes`` holds ``(role, n, m, k)`` rows for the source and target
    instances; ``k`` is ``None`` where the problem has no size parameter.
    """

    source_problem: str
    target_problem: str
    params: dict[str, int]
    multiplier: int
    additive: int = 0
    label_map: dict[int, str] = field(default_factory=dict)
    sizes: list[tuple[str, int, int, int | None]] = field(default_factory=list)

    def serialize(self) -> str:
        lines = [_instance_line(*row) for row in self.sizes]
        lines.append(f"factor {self.multiplier}")
        if self.additive:
            lines.append(f"additive {self.additive}")
        return "\n".join(lines) + "\n"


def _instance_line(role: str, n: int, m: int, k: int | None) -> str:
    return f"instance {role} n={n} m={m} k={'-' if k is None else k}"


# -- monotone 2-SAT -> cuts of size k ---------------------------------------

def clause_vertex(num_vars: int, j: int, t: int) -> int:
    """Id of gadget vertex ``c_{j,t}`` (``j`` and ``t`` 1-based)."""
    return num_vars + 6 * (j - 1) + t


def clause_cycle(num_vars: int, j: int, clause: tuple[int, int]) -> list[int]:
    """Vertices of clause ``j``'s 9-cycle, starting and ending at the apex 0."""
    u, v = clause
    c = [clause_vertex(num_vars, j, t) for t in range(1, 7)]
    return [0, c[0], c[1], u, c[2], c[3], v, c[4], c[5], 0]


def clause_cycle_edges(num_vars: int, j: int, clause: tuple[int, int]) -> list[tuple[int, int]]:
    cyc = clause_cycle(num_vars, j, clause)
    return [(min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:])]


def _build_maxcut_graph(f: MonotoneFormula) -> Graph:
    edges = []
    for j, clause in enumerate(f.clauses, 1):
        edges.extend(clause_cycle_edges(f.num_vars, j, clause))
    return Graph(1 + f.num_vars + 6 * len(f.clauses), tuple(edges))


@lru_cache(maxsize=None)
def clause_multiplier() -> int:
    """Size-8 cuts of the single-clause gadget per satisfying assignment.

    Measured by enumeration on ``x1 v x2``, not assumed.
    """
    anchor = MonotoneFormula(2, ((1, 2),))
    cuts = count_cuts_of_size(_build_maxcut_graph(anchor), 8)
    sat = count_sat(anchor)
    mu, rem = divmod(cuts, sat)
    if rem:
        raise ArithmeticError(f"gadget cut count {cuts} is not a multiple of {sat}")
    return mu


def sat_to_maxcut(f: MonotoneFormula) -> tuple[Graph, int, ReductionCertificate]:
    """Clause-cycle construction; returns ``(graph, k, certificate)`` with ``k = 8 * #clauses``.

    Vertex 0 is the apex ``x``, vertices ``1..n`` are the variables and
    clause ``j`` owns ``c_{j,1..6}`` at ``n + 6(j-1) + 1 .. n + 6j``.
    """
    if not f.clauses:
        raise ReductionError("formula has no clauses")
    unused = f.unused_variables()
    if unused:
        names = ", ".join(f"x{i}" for i in unused)
        raise ReductionError(f"variables not used by any clause: {names}")
    g = _build_maxcut_graph(f)
    k = 8 * len(f.clauses)
    labels = {0: "x"}
    labels.update({i: f"x_{i}" for i in range(1, f.num_vars + 1)})
    for j in range(1, len(f.clauses) + 1):
        for t in range(1, 7):
            labels[clause_vertex(f.num_vars, j, t)] = f"c_{j},{t}"
    mu = clause_multiplier()
    cert = ReductionCertificate(
        source_problem="monotone-2sat",
        target_problem="max-cut",
        params={"k": k, "clauses": len(f.clauses), "mu": mu},
        multiplier=mu ** len(f.clauses),
        label_map=labels,
        sizes=[("sat", f.num_vars, len(f.clauses), None), ("maxcut", g.n, g.m, k)],
    )
    return g, k, cert


def strip_unused_variables(f: MonotoneFormula) -> tuple[MonotoneFormula, int]:
    """Drop variables no clause mentions, renumbering the rest in order.

    Returns the reduced formula and the factor ``2**dropped`` relating the
    two satisfying-assignment counts.
    """
    used = sorted(f.used_variables())
    if not used:
        raise ReductionError("formula has no clauses")
    rename = {old: new for new, old in enumerate(used, 1)}
    reduced = MonotoneFormula(len(used), tuple((rename[u], rename[v]) for u, v in f.clauses))
    return reduced, 2 ** (f.num_vars - len(used))


# -- cuts of size k -> cocircuits of size k' --------------------------------

def maxcut_to_cocircuits(g: Graph, k: int) -> tuple[Graph, int, ReductionCertificate]:
    """Two-apex padding construction; returns ``(graph, k', certificate)``.

    New ids: ``n`` is ``x``, ``n+1`` is ``x'`` and ``n+2 .. n+1+n**2`` are
    the padding vertices.  ``x`` is joined to everything but ``x'`` and
    vice versa.
    """
    n = g.n
    if n < 2:
        raise ReductionError("graph needs at least two vertices")
    if not is_connected(g):
        raise ReductionError("graph must be connected")
    if not 1 <= k <= g.m:
        raise ReductionError(f"k must lie in 1..{g.m}, got {k}")
    x, xp = n, n + 1
    others = [v for v in range(n + 2 + n * n) if v not in (x, xp)]
    edges = list(g.edges)
    edges.extend((x, v) for v in others)
    edges.extend((xp, v) for v in others)
    gp = Graph(n + 2 + n * n, tuple(edges))
    kp = n * n + n + k
    labels = {v: f"v_{v}" for v in range(n)}
    labels[x] = "x"
    labels[xp] = "x'"
    labels.update({n + 1 + j: f"x_{j}" for j in range(1, n * n + 1)})
    cert = ReductionCertificate(
        source_problem="max-cut",
        target_problem="required-size-cocircuits",
        params={"k": k, "k'": kp},
        multiplier=2 ** (n * n + 1),
        label_map=labels,
        sizes=[("maxcut", n, g.m, k), ("cocircuits", gp.n, gp.m, kp)],
    )
    return gp, kp, cert


# -- cocircuits of size k -> all cocircuits ---------------------------------

def stretch_constant(l: int, m: int, b: int, bridge_corrected: bool = True) -> int:
    """Cocircuits of the l-stretch that cut two edges of one path.

    Only paths replacing non-bridge edges contribute, giving
    ``C(l,2) * (m - b)``.  With ``bridge_corrected=False`` all ``m`` paths
    are counted, which is only right for bridgeless graphs.
    """
    return comb(l, 2) * (m - b if bridge_corrected else m)


def recover_spectrum(stretch_counts, m: int, b: int, bridge_corrected: bool = True) -> Spectrum:
    """Recover ``N_1..N_m`` from the cocircuit totals of the stretches ``l = 1..m``."""
    if m < 1:
        raise ValueError(f"edge count must be positive, got {m}")
    if len(stretch_counts) != m:
        raise ValueError(f"need {m} stretch counts, got {len(stretch_counts)}")
    if not 0 <= b <= m:
        raise ValueError(f"bridge count must lie in 0..{m}, got {b}")
    rhs = [Fraction(c - stretch_constant(l, m, b, bridge_corrected)) for l, c in enumerate(stretch_counts, 1)]
    x = gauss_solve_exact(build_stretch_system(m), rhs)
    bad = [v for v in x if v.denominator != 1 or v < 0]
    if bad:
        raise NonIntegralSolutionError(
            f"recovered spectrum {[str(v) for v in x]} is not a non-negative integer vector", x
        )
    return Spectrum(m, tuple(int(v) for v in x))


def stretch_counts(g: Graph, *, unbounded: bool = False) -> list[int]:
    """Total cocircuit counts of the stretches ``l = 1..m`` of ``g``."""
    return [count_cocircuits(stretch(g, l)[0], unbounded=unbounded) for l in range(1, g.m + 1)]


def spectrum_via_stretch(g: Graph, bridge_corrected: bool = True, *, unbounded: bool = False) -> Spectrum:
    """Cocircuit spectrum of ``g`` using only total cocircuit counts."""
    return recover_spectrum(stretch_counts(g, unbounded=unbounded), g.m, len(bridges(g)), bridge_corrected)


# -- cocircuits -> convex two-colourings ------------------------------------

def convex_from_cocircuits(component_count: int, cocircuit_count: int | None = None) -> int:
    """Convex two-colourings from the component count and, for connected
    graphs, the cocircuit count."""
    if component_count < 0:
        raise ValueError("component count must be non-negative")
    if component_count == 0:
        return 1
    if component_count == 1:
        if cocircuit_count is None:
            raise ValueError("connected graphs need the cocircuit count")
        return 2 + 2 * cocircuit_count
    return 2 if component_count == 2 else 0


# -- whole chain ------------------------------------------------------------

@dataclass
class ChainReport:
    instances: list[tuple[str, int, int, int | None]]
    factors: list[int]
    relation: str

    def render(self) -> str:
        lines = [_instance_line(*row) for row in self.instances]
        lines.extend(f"factor {f}" for f in self.factors)
        lines.append(self.relation)
        return "\n".join(lines) + "\n"


def compose_chain(f: MonotoneFormula) -> ChainReport:
    """Build every instance of the chain for ``f`` and check their sizes.

    No counting is done here; the instances are far beyond brute force
    for any formula.
    """
    g, k, cert1 = sat_to_maxcut(f)
    gp, kp, cert2 = maxcut_to_cocircuits(g, k)
    n = g.n
    checks = [
        (g.m == 9 * len(f.clauses), "clause gadgets must contribute nine edges each"),
        (k == 8 * len(f.clauses), "k must be eight per clause"),
        (is_connected(g), "clause-cycle graph must be connected"),
        (gp.n == n + 2 + n * n, "padded graph has the wrong vertex count"),
        (gp.m == g.m + 2 * (n + n * n), "padded graph has the wrong edge count"),
        (kp == n * n + n + k, "k' arithmetic"),
        (is_connected(gp), "padded graph must be connected"),
    ]
    for ok, what in checks:
        if not ok:
            raise ReductionError(f"chain validation failed: {what}")
    instances = [*cert1.sizes, cert2.sizes[1]]
    for l in range(1, gp.m + 1):
        instances.append((f"stretch-{l}", gp.n + gp.m * (l - 1), gp.m * l, None))
    instances.append(("convex", gp.n, gp.m, None))
    divisor = cert1.multiplier * cert2.multiplier
    relation = f"relation sat = cocircuits(G', size={kp}) / {divisor}"
    return ChainReport(instances, [cert1.multiplier, cert2.multiplier], relation)


__all__ = [
    "ChainReport",
    "NonIntegralSolutionError",
    "ReductionCertificate",
    "ReductionError",
    "clause_cycle_edges",
    "clause_multiplier",
    "compose_chain",
    "convex_from_cocircuits",
    "maxcut_to_cocircuits",
    "recover_spectrum",
    "sat_to_maxcut",
    "spectrum_via_stretch",
    "stretch_counts",
    "stretch_constant",
    "strip_unused_variables",
]
