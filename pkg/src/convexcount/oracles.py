"""Brute-force exact counters.

Every counter enumerates all candidate objects.  Bipartitions are scanned
as integer masks in numpy chunks; a mask holds the shore *not* containing
vertex 0, so each unordered cut is visited exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .graph import (
    DisconnectedGraphError,
    Graph,
    full_mask,
    is_connected,
)

MAX_VERTICES = 24
MAX_VARS = 30
_CHUNK = 1 << 20


class ResourceLimitError(RuntimeError):
    """Instance exceeds the practical enumeration bound."""


class FormulaError(ValueError):
    pass


class CnfFormatError(FormulaError):
    """Malformed CNF text; ``lineno`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


@dataclass(frozen=True)
class MonotoneFormula:
    """Monotone 2-CNF; clauses are pairs ``(u, v)`` with ``1 <= u < v <= num_vars``.

    Repeated clauses are kept.  A clause naming the same variable twice is
    rejected.
    """

    num_vars: int
    clauses: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise FormulaError("a formula needs at least one variable")
        normed = []
        for clause in self.clauses:
            u, v = clause
            if u == v:
                raise FormulaError(f"clause ({u}, {v}) must name two distinct variables")
            if u < 1 or v < 1:
                raise FormulaError(f"clause ({u}, {v}): monotone formulas have no negated literals")
            if u > self.num_vars or v > self.num_vars:
                raise FormulaError(f"clause ({u}, {v}) uses a variable beyond {self.num_vars}")
            normed.append((min(u, v), max(u, v)))
        object.__setattr__(self, "clauses", tuple(normed))

    def used_variables(self) -> set[int]:
        return {x for c in self.clauses for x in c}

    def unused_variables(self) -> list[int]:
        used = self.used_variables()
        return [x for x in range(1, self.num_vars + 1) if x not in used]


@dataclass(frozen=True)
class Spectrum:
    """Cocircuit counts by size: ``values[k-1]`` is ``N_k`` for ``k = 1..m``."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.m:
            raise ValueError(f"spectrum of a graph with {self.m} edges needs {self.m} values")

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.m:
            raise IndexError(k)
        return self.values[k - 1]

    @property
    def total(self) -> int:
        return sum(self.values)


def _check_bound(n: int, limit: int, what: str, unbounded: bool) -> None:
    if n > limit and not unbounded:
        raise ResourceLimitError(
            f"{what} {n} exceeds the enumeration bound {limit}; pass unbounded=True to force"
        )


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("input graph must be connected")


def _mask_chunks(lo: int, hi: int, shift: int = 0) -> Iterator[np.ndarray]:
    for start in range(lo, hi, _CHUNK):
        yield np.arange(start, min(start + _CHUNK, hi), dtype=np.int64) << shift


def _cut_chunks(n: int) -> Iterator[np.ndarray]:
    # vertex 0 stays in shore0; the mask is the other shore, never empty
    return _mask_chunks(1, 1 << max(n - 1, 0), shift=1)


def _crossing_sizes(masks: np.ndarray, edges) -> np.ndarray:
    sizes = np.zeros(masks.shape, dtype=np.int16)
    bits = {}
    for u, v in edges:
        for w in (u, v):
            if w not in bits:
                bits[w] = ((masks >> w) & 1).astype(np.uint8)
        sizes += bits[u] ^ bits[v]
    return sizes


def _induces_connected(sub: np.ndarray, adj) -> np.ndarray:
    """Vectorised connectivity test of the vertex masks in ``sub``."""
    result = np.empty(sub.shape, dtype=bool)
    idx = np.arange(sub.size)
    reach = sub & -sub
    live = [(v, np.int64(a)) for v, a in enumerate(adj) if a]
    while idx.size:
        grown = reach.copy()
        for v, a in live:
            grown |= -((reach >> v) & 1) & a
        grown &= sub
        done = grown == reach
        result[idx[done]] = reach[done] == sub[done]
        keep = ~done
        idx, reach, sub = idx[keep], grown[keep], sub[keep]
    return result


def cut_size_histogram(g: Graph, *, unbounded: bool = False) -> list[int]:
    """``hist[k]`` = number of cuts with crossing set of size ``k``, ``k = 0..m``."""
    _check_bound(g.n, MAX_VERTICES, "vertex count", unbounded)
    hist = np.zeros(g.m + 1, dtype=np.int64)
    for masks in _cut_chunks(g.n):
        hist += np.bincount(_crossing_sizes(masks, g.edges), minlength=g.m + 1)
    return [int(h) for h in hist]


def count_cuts_of_size(g: Graph, k: int, *, unbounded: bool = False) -> int:
    if k < 1:
        raise ValueError(f"cut size must be positive, got {k}")
    _require_connected(g)
    hist = cut_size_histogram(g, unbounded=unbounded)
    return hist[k] if k < len(hist) else 0


def cocircuit_histogram(
    g: Graph, sizes: Iterable[int] | None = None, *, unbounded: bool = False
) -> list[int]:
    """``hist[k]`` = number of cocircuits of size ``k``, ``k = 0..m``.

    When ``sizes`` is given only those sizes are counted (others read 0).
    A cocircuit has both shores connected, so its crossing set has at most
    ``m - n + 2`` edges; larger cuts are discarded before the connectivity
    test.
    """
    _require_connected(g)
    _check_bound(g.n, MAX_VERTICES, "vertex count", unbounded)
    wanted = np.zeros(g.m + 1, dtype=bool)
    if sizes is None:
        wanted[:] = True
    else:
        for k in sizes:
            if 0 <= k <= g.m:
                wanted[k] = True
    wanted[max(g.m - g.n + 3, 0):] = False
    hist = np.zeros(g.m + 1, dtype=np.int64)
    if not wanted.any():
        return [0] * (g.m + 1)
    full = np.int64(full_mask(g.n))
    for masks in _cut_chunks(g.n):
        cs = _crossing_sizes(masks, g.edges)
        sel = wanted[cs]
        masks, cs = masks[sel], cs[sel]
        ok = _induces_connected(masks, g.adjacency)
        masks, cs = masks[ok], cs[ok]
        ok = _induces_connected(full & ~masks, g.adjacency)
        hist += np.bincount(cs[ok], minlength=g.m + 1)
    return [int(h) for h in hist]


def count_cocircuits(g: Graph, size_filter: int | None = None, *, unbounded: bool = False) -> int:
    """Number of cocircuits of the connected graph ``g``, optionally of one size."""
    if size_filter is None:
        return sum(cocircuit_histogram(g, unbounded=unbounded))
    if size_filter < 1:
        raise ValueError(f"size filter must be positive, got {size_filter}")
    hist = cocircuit_histogram(g, [size_filter], unbounded=unbounded)
    return hist[size_filter] if size_filter <= g.m else 0


def cocircuit_spectrum(g: Graph, *, unbounded: bool = False) -> Spectrum:
    hist = cocircuit_histogram(g, unbounded=unbounded)
    return Spectrum(g.m, tuple(hist[1:]))


def count_convex_two_colourings(g: Graph, *, unbounded: bool = False) -> int:
    """Number of maps ``f: V -> {0, 1}`` whose two colour classes both induce
    connected subgraphs (an empty class counts as connected)."""
    _check_bound(g.n, MAX_VERTICES, "vertex count", unbounded)
    if g.n == 0:
        return 1
    full = np.int64(full_mask(g.n))
    total = 0
    for ones in _mask_chunks(0, 1 << g.n):
        ok = _induces_connected(ones, g.adjacency)
        ones = ones[ok]
        total += int(np.count_nonzero(_induces_connected(full & ~ones, g.adjacency)))
    return total


def count_sat(f: MonotoneFormula, *, unbounded: bool = False) -> int:
    """Satisfying assignments, bit ``i-1`` of an assignment mask being ``x_i``."""
    _check_bound(f.num_vars, MAX_VARS, "variable count", unbounded)
    total = 0
    for assign in _mask_chunks(0, 1 << f.num_vars):
        sat = np.ones(assign.shape, dtype=bool)
        for u, v in f.clauses:
            sat &= (((assign >> (u - 1)) | (assign >> (v - 1))) & 1).astype(bool)
        total += int(np.count_nonzero(sat))
    return total


def parse_cnf(text: str) -> MonotoneFormula:
    """Read a DIMACS-style monotone 2-CNF: one ``u v 0`` clause per line."""
    header = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise CnfFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfFormatError("expected 'p cnf <vars> <clauses>'", lineno)
            try:
                header = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfFormatError("non-integer in header", lineno) from None
            if header[0] < 1 or header[1] < 0:
                raise CnfFormatError("bad counts in header", lineno)
            continue
        if header is None:
            raise CnfFormatError("clause before header", lineno)
        try:
            lits = [int(p) for p in parts]
        except ValueError:
            raise CnfFormatError(f"non-integer literal in {line!r}", lineno) from None
        if len(lits) != 3 or lits[2] != 0:
            raise CnfFormatError("expected a clause 'u v 0' with two literals", lineno)
        u, v = lits[0], lits[1]
        if u < 0 or v < 0:
            raise CnfFormatError("negative literal in a monotone formula", lineno)
        if u == 0 or v == 0 or u > header[0] or v > header[0]:
            raise CnfFormatError(f"variable out of range 1..{header[0]}", lineno)
        if u == v:
            raise CnfFormatError(f"clause repeats variable {u}", lineno)
        clauses.append((u, v))
    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return MonotoneFormula(header[0], tuple(clauses))


def serialize_cnf(f: MonotoneFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines.extend(f"{u} {v} 0" for u, v in f.clauses)
    return "\n".join(lines) + "\n"


__all__ = [
    "CnfFormatError",
    "FormulaError",
    "MAX_VARS",
    "MAX_VERTICES",
    "MonotoneFormula",
    "ResourceLimitError",
    "Spectrum",
    "cocircuit_histogram",
    "cocircuit_spectrum",
    "count_cocircuits",
    "count_convex_two_colourings",
    "count_cuts_of_size",
    "count_sat",
    "cut_size_histogram",
    "parse_cnf",
    "serialize_cnf",
]
