"""Seeded instance generators and identity-verification suites.

Randomness comes from :class:`random.Random` (MT19937) seeded with the
given integer, and only integer draws (``randrange``, ``getrandbits``,
``choice``) are used.  Outputs are therefore identical on every platform
and Python version that keeps MT19937 integer seeding stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil

import numpy as np

from .graph import Graph, bridges, components, is_connected, parse_graph, serialize_graph, stretch
from .oracles import (
    MAX_VERTICES,
    MonotoneFormula,
    ResourceLimitError,
    _crossing_sizes,
    _cut_chunks,
    cocircuit_spectrum,
    count_cocircuits,
    count_convex_two_colourings,
    count_cuts_of_size,
    count_sat,
    cut_size_histogram,
    parse_cnf,
    serialize_cnf,
)
from .reductions import (
    NonIntegralSolutionError,
    clause_cycle_edges,
    clause_multiplier,
    convex_from_cocircuits,
    maxcut_to_cocircuits,
    recover_spectrum,
    sat_to_maxcut,
    stretch_constant,
)

MAX_STRETCH_EDGES = 5


class PreconditionError(ValueError):
    """Trial instance does not meet the lemma's preconditions."""


# -- generators ---------------------------------------------------------------

def gen_random_graph(n: int, p, seed: int) -> Graph:
    """Include each pair ``u < v`` (lexicographic order) with probability ``p``.

    ``p`` is a rational in [0, 1]; a pair is kept when a uniform draw from
    ``range(denominator)`` falls below the numerator.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if rng.randrange(p.denominator) < p.numerator
    ]
    return Graph(n, tuple(edges))


def gen_random_formula(num_vars: int, num_clauses: int, seed: int, max_attempts: int = 100_000) -> MonotoneFormula:
    """Uniform clauses over distinct variable pairs, redrawn until every
    variable occurs."""
    if num_vars < 2 or num_clauses < 1:
        raise ValueError("need at least two variables and one clause")
    if num_vars > 2 * num_clauses:
        raise ValueError(f"{num_clauses} clauses cannot cover {num_vars} variables")
    pairs = list(combinations(range(1, num_vars + 1), 2))
    rng = random.Random(seed)
    for _ in range(max_attempts):
        clauses = tuple(rng.choice(pairs) for _ in range(num_clauses))
        if len({x for c in clauses for x in c}) == num_vars:
            return MonotoneFormula(num_vars, clauses)
    raise RuntimeError(f"no covering formula found in {max_attempts} attempts")


def random_connected_graph(rng: random.Random, n_lo: int, n_hi: int, max_edges: int | None = None,
                           attempts: int = 1000) -> Graph:
    """Rejection-sample a connected graph with ``n_lo <= n <= n_hi``."""
    for _ in range(attempts):
        n = rng.randint(n_lo, n_hi)
        g = gen_random_graph(n, Fraction(rng.randint(1, 4), 4), rng.getrandbits(64))
        if is_connected(g) and (max_edges is None or 1 <= g.m <= max_edges):
            return g
    raise RuntimeError("could not sample a connected graph with the requested bounds")


# -- reports ------------------------------------------------------------------

@dataclass
class TrialResult:
    index: int
    status: str  # "pass", "fail" or "skip"
    instance: str
    lhs: str = ""
    rhs: str = ""
    note: str = ""

    def line(self) -> str:
        parts = [f"trial {self.index} {self.status}"]
        if self.lhs or self.rhs:
            parts.append(f"lhs={self.lhs} rhs={self.rhs}")
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


@dataclass
class VerificationReport:
    lemma: int
    identity: str
    trials: list[TrialResult] = field(default_factory=list)
    mu: int | None = None
    claimed_factor_agrees: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def attempted(self) -> int:
        return len(self.trials)

    @property
    def skipped(self) -> int:
        return sum(t.status == "skip" for t in self.trials)

    @property
    def failures(self) -> list[TrialResult]:
        return [t for t in self.trials if t.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_counterexample(self) -> TrialResult | None:
        fails = self.failures
        return fails[0] if fails else None

    def render(self) -> str:
        passed = sum(t.status == "pass" for t in self.trials)
        out = [
            f"lemma {self.lemma}",
            f"identity {self.identity}",
            f"trials {self.attempted} passed {passed} failed {len(self.failures)} skipped {self.skipped}",
        ]
        if self.mu is not None:
            out.append(f"mu {self.mu}")
        if self.claimed_factor_agrees is not None:
            verdict = "agree" if self.claimed_factor_agrees else "disagree"
            out.append(f"claimed-factor 2^|C| {verdict}")
        out.extend(t.line() for t in self.trials)
        out.extend(f"note {n}" for n in self.notes)
        first = self.first_counterexample
        if first is not None:
            out.append(f"first-counterexample trial {first.index}")
            out.append(first.instance.rstrip("\n"))
        out.append("status " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(out) + "\n"


# -- per-lemma checks -----------------------------------------------------------
# Each check takes one instance (plus parameters) and returns a TrialResult
# with index -1; the suites below fill in the index.  Checks re-run from the
# serialized instance give the same numbers.

def clause_parity(f: MonotoneFormula) -> tuple[bool, bool]:
    """Scan every cut of the clause-cycle graph of ``f``.

    Returns ``(every cut meets each clause cycle evenly,
    every cut of size 8*|C| meets each clause cycle in exactly 8 edges)``.
    """
    g, k, _ = sat_to_maxcut(f)
    cycles = [clause_cycle_edges(f.num_vars, j, c) for j, c in enumerate(f.clauses, 1)]
    even = exact = True
    for masks in _cut_chunks(g.n):
        total = _crossing_sizes(masks, g.edges)
        for cyc in cycles:
            meet = _crossing_sizes(masks, cyc)
            even &= not np.any(meet & 1)
            exact &= bool(np.all(meet[total == k] == 8))
    return bool(even), bool(exact)


def check_lemma1(f: MonotoneFormula) -> TrialResult:
    g, k, cert = sat_to_maxcut(f)
    cuts = count_cuts_of_size(g, k)
    sat = count_sat(f)
    rhs = cert.multiplier * sat
    even, exact = clause_parity(f)
    note = f"sat={sat} cuts={cuts}"
    if not (even and exact):
        note += " parity-violation"
    status = "pass" if cuts == rhs and even and exact else "fail"
    return TrialResult(-1, status, serialize_cnf(f), str(cuts), str(rhs), note)


def check_lemma2(g: Graph, k: int) -> TrialResult:
    gp, kp, cert = maxcut_to_cocircuits(g, k)
    lhs = count_cocircuits(gp, kp)
    rhs = cert.multiplier * count_cuts_of_size(g, k)
    status = "pass" if lhs == rhs else "fail"
    return TrialResult(-1, status, f"c k={k}\n" + serialize_graph(g), str(lhs), str(rhs), f"k={k} k'={kp}")


def check_lemma3(g: Graph, bridge_corrected: bool = True) -> tuple[TrialResult, list[str]]:
    """Stretch identity for ``l = 1..m`` plus the spectrum round trip.

    The second return value lists every ``l`` where the uncorrected
    constant term ``C(l,2)*m`` mispredicts the stretch count.
    """
    if not is_connected(g) or g.m < 1:
        raise PreconditionError("need a connected graph with at least one edge")
    if g.m > MAX_STRETCH_EDGES:
        raise PreconditionError(f"m={g.m} exceeds {MAX_STRETCH_EDGES}")
    spec = cocircuit_spectrum(g)
    b = len(bridges(g))
    actual, predicted, mismatches = [], [], []
    for l in range(1, g.m + 1):
        # the l = m stretch of a 5-edge tree has 26 vertices
        count = count_cocircuits(stretch(g, l)[0], unbounded=True)
        base = sum(l**k * spec[k] for k in range(1, g.m + 1))
        pred = base + stretch_constant(l, g.m, b, bridge_corrected)
        uncorrected = base + stretch_constant(l, g.m, b, bridge_corrected=False)
        if uncorrected != count:
            mismatches.append(f"l={l} uncorrected={uncorrected} actual={count}")
        actual.append(count)
        predicted.append(pred)
    ok = actual == predicted
    try:
        roundtrip = recover_spectrum(actual, g.m, b, bridge_corrected) == spec
    except NonIntegralSolutionError:
        roundtrip = False
    note = f"m={g.m} b={b} spectrum={list(spec.values)}"
    if not roundtrip:
        note += " roundtrip-failed"
    status = "pass" if ok and roundtrip else "fail"
    lhs = ",".join(map(str, actual))
    rhs = ",".join(map(str, predicted))
    return TrialResult(-1, status, serialize_graph(g), lhs, rhs, note), mismatches


def check_lemma4(g: Graph) -> TrialResult:
    comps = components(g)
    cocircuits = count_cocircuits(g) if len(comps) == 1 else None
    lhs = count_convex_two_colourings(g)
    rhs = convex_from_cocircuits(len(comps), cocircuits)
    status = "pass" if lhs == rhs else "fail"
    return TrialResult(-1, status, serialize_graph(g), str(lhs), str(rhs), f"components={len(comps)}")


def rerun_trial(lemma: int, instance: str, bridge_corrected: bool = True) -> TrialResult:
    """Re-check a trial from its serialized instance alone."""
    if lemma == 1:
        return check_lemma1(parse_cnf(instance))
    if lemma == 2:
        first, _, rest = instance.partition("\n")
        return check_lemma2(parse_graph(rest), int(first.split("k=")[1]))
    if lemma == 3:
        return check_lemma3(parse_graph(instance), bridge_corrected)[0]
    if lemma == 4:
        return check_lemma4(parse_graph(instance))
    raise ValueError(f"unknown lemma {lemma}")


# -- suites -----------------------------------------------------------------------

IDENTITIES = {
    1: "cuts(M(I), 8|C|) = mu^|C| * sat(I)",
    2: "cocircuits(G', n^2+n+k) = 2^(n^2+1) * cuts(G, k)",
    3: "cocircuits(G_l) = sum_k l^k N_k(G) + C(l,2)(m-b)",
    4: "convex2(G) = convex_from_cocircuits(#components, cocircuits(G))",
}


def _trial_instances(lemma: int, trials: int, rng: random.Random, max_n: int):
    """Yield ``(builder, description)`` pairs; builders may raise
    :class:`PreconditionError` or :class:`ResourceLimitError`."""
    anchors = []
    if lemma == 1:
        anchors = [MonotoneFormula(2, ((1, 2),))]
    elif lemma == 3:
        anchors = [
            Graph(3, ((0, 1), (0, 2), (1, 2))),
            Graph(3, ((0, 1), (1, 2))),
        ]
    for i in range(trials):
        if i < len(anchors):
            yield anchors[i]
            continue
        sub_seed = rng.getrandbits(64)
        if lemma == 1:
            v = rng.randint(2, max(2, max_n))
            c = rng.randint(ceil(v / 2), ceil(v / 2) + 1)
            yield gen_random_formula(v, c, sub_seed)
        elif lemma == 2:
            yield random_connected_graph(random.Random(sub_seed), 2, max(2, max_n))
        elif lemma == 3:
            hi = min(max(2, max_n), MAX_STRETCH_EDGES + 1)
            yield random_connected_graph(random.Random(sub_seed), 2, hi, MAX_STRETCH_EDGES)
        else:
            n = rng.randint(1, max(1, max_n))
            yield gen_random_graph(n, Fraction(rng.randint(0, 4), 4), sub_seed)


def verify_lemma(lemma: int, trials: int, seed: int, max_n: int, bridge_corrected: bool = True) -> VerificationReport:
    """Run ``trials`` seeded checks of one lemma identity against the oracles.

    Instances failing a precondition, or too large for the oracles, are
    recorded as skipped.  ``bridge_corrected`` only affects lemma 3.
    """
    if lemma not in IDENTITIES:
        raise ValueError(f"lemma must be 1, 2, 3 or 4, got {lemma}")
    identity = IDENTITIES[lemma]
    if lemma == 3 and not bridge_corrected:
        identity = identity.replace("(m-b)", "m")
    report = VerificationReport(lemma, identity)
    rng = random.Random(seed)
    if lemma == 1:
        report.mu = clause_multiplier()
    for i, inst in enumerate(_trial_instances(lemma, trials, rng, max_n)):
        try:
            if isinstance(inst, Graph) and inst.n > MAX_VERTICES:
                raise ResourceLimitError(f"n={inst.n}")
            if lemma == 1:
                res = check_lemma1(inst)
            elif lemma == 2:
                if inst.n > 4:
                    # the padded graph would exceed the enumeration bound
                    raise ResourceLimitError(f"n={inst.n} gives {inst.n + 2 + inst.n ** 2} padded vertices")
                if not is_connected(inst):
                    raise PreconditionError("disconnected")
                hist = cut_size_histogram(inst)
                feasible = [k for k in range(1, inst.m + 1) if hist[k]]
                res = check_lemma2(inst, rng.choice(feasible))
            elif lemma == 3:
                res, mismatches = check_lemma3(inst, bridge_corrected)
                report.notes.extend(f"trial {i} uncorrected-term mismatch {m}" for m in mismatches)
            else:
                res = check_lemma4(inst)
        except (PreconditionError, ResourceLimitError) as exc:
            text = serialize_cnf(inst) if isinstance(inst, MonotoneFormula) else serialize_graph(inst)
            res = TrialResult(-1, "skip", text, note=str(exc))
        res.index = i
        report.trials.append(res)
    if lemma == 1:
        checked = [t for t in report.trials if t.status != "skip"]
        report.claimed_factor_agrees = all(
            int(t.lhs) == 2 ** len(parse_cnf(t.instance).clauses) * count_sat(parse_cnf(t.instance))
            for t in checked
        )
    return report


def all_formulas(max_vars: int = 4, max_clauses: int = 2):
    """Every clause list over ``2..max_vars`` variables that uses all of them."""
    for v in range(2, max_vars + 1):
        pairs = list(combinations(range(1, v + 1), 2))
        for c in range(1, max_clauses + 1):
            for clauses in product(pairs, repeat=c):
                if len({x for cl in clauses for x in cl}) == v:
                    yield MonotoneFormula(v, clauses)

