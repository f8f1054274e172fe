"""The refinement graph on Omega_d and what it says about closures of strata.

Vertices are the partitions of Omega_d; there is an edge E -> E' when E' refines
E with nothing strictly in between.  Edges are found as the transitive reduction
of the refinement relation, and only afterwards classified as single-entry
splits into two or three parts.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import EdgeTypeError, InvalidParameters
from .strata import Partition, _as_partition, enumerate_partitions, stratum_dimension


class Closure(str, enum.Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class EdgeInfo:
    split: tuple[int, tuple[int, ...]]
    edge_type: int
    closure: Closure
    dim_delta: int


@dataclass
class RefinementGraph:
    p: int
    d: int
    vertices: list[Partition]
    edges: list[tuple[int, int, EdgeInfo]] = field(default_factory=list)

    def index(self, E) -> int:
        return self.vertices.index(_as_partition(self.p, E))

    def successors(self, i: int) -> list[int]:
        return [b for a, b, _ in self.edges if a == i]

    def edge(self, E, E2) -> EdgeInfo | None:
        i, j = self.index(E), self.index(E2)
        for a, b, info in self.edges:
            if (a, b) == (i, j):
                return info
        return None

    def minimal(self) -> list[int]:
        targets = {b for _, b, _ in self.edges}
        return [i for i in range(len(self.vertices)) if i not in targets]

    def maximal(self) -> list[int]:
        sources = {a for a, _, _ in self.edges}
        return [i for i in range(len(self.vertices)) if i not in sources]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "vertices": [
                {"id": i, "partition": list(E.parts), "r": E.r,
                 "dimension": stratum_dimension(self.p, E)}
                for i, E in enumerate(self.vertices)
            ],
            "edges": [
                {"source": a, "target": b, "split": [info.split[0], list(info.split[1])],
                 "type": info.edge_type, "closure": info.closure.value,
                 "dim_delta": info.dim_delta}
                for a, b, info in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        styles = {
            Closure.YES: "style=solid",
            Closure.UNKNOWN: "style=dashed",
            Closure.NO: "style=dotted, color=red",
        }
        lines = [f'digraph "G_{self.d} p={self.p}" {{', "  rankdir=TB;", "  node [shape=box];"]
        for i, E in enumerate(self.vertices):
            lines.append(f'  n{i} [label="{E}\\ndim {stratum_dimension(self.p, E)}"];')
        for a, b, info in self.edges:
            lines.append(f"  n{a} -> n{b} [{styles[info.closure]}, label=\"t{info.edge_type}\"];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _groupable(blocks: list[int], pieces: list[int]) -> bool:
    # assign pieces (descending) to blocks with remaining capacity
    if not pieces:
        return all(b == 0 for b in blocks)
    x, rest = pieces[0], pieces[1:]
    tried = set()
    for i, cap in enumerate(blocks):
        if cap >= x and cap not in tried:
            tried.add(cap)
            blocks[i] -= x
            ok = _groupable(blocks, rest)
            blocks[i] += x
            if ok:
                return True
    return False


def _refines(coarse: tuple[int, ...], fine: tuple[int, ...]) -> bool:
    if sum(coarse) != sum(fine) or len(fine) < len(coarse):
        return False
    return _groupable(list(coarse), sorted(fine, reverse=True))


def refines(E, E2) -> bool:
    """Whether the parts of E2 group into blocks whose sums are the parts of E."""
    if isinstance(E, Partition) and isinstance(E2, Partition):
        if E.p != E2.p or E.d != E2.d:
            raise InvalidParameters(f"{E} and {E2} belong to different Omega_d")
    elif sum(E) != sum(E2):
        raise InvalidParameters(f"{E} and {E2} have different sums")
    return _refines(tuple(E), tuple(E2))


def least_positive_residue(p: int, e: int) -> int:
    """e mod p taken in 1..p, so multiples of p map to p."""
    return (e - 1) % p + 1


def equal_dimension_split(p: int, e1: int, e2: int) -> bool:
    """Whether a 2-split {e1+e2} -> {e1, e2} keeps the stratum dimension: 2 < e1' + e2' <= p."""
    return 2 < least_positive_residue(p, e1) + least_positive_residue(p, e2) <= p


def classify_edge(p: int, E: Partition, E2: Partition) -> EdgeInfo:
    """Split shape, type, closure status and dimension change of a covering relation E -> E2."""
    c1, c2 = Counter(E.parts), Counter(E2.parts)
    removed = sorted((c1 - c2).elements())
    added = tuple(sorted((c2 - c1).elements()))
    if len(removed) != 1 or len(added) not in (2, 3) or sum(added) != removed[0]:
        raise EdgeTypeError(f"{E} -> {E2} is not a single-entry split into 2 or 3 parts")
    e = removed[0]
    dim_delta = stratum_dimension(p, E2) - stratum_dimension(p, E)
    if dim_delta not in (0, 1):
        raise EdgeTypeError(f"{E} -> {E2} changes dimension by {dim_delta}")
    if len(added) == 2:
        e1, e2 = added
        assert (dim_delta == 0) == equal_dimension_split(p, e1, e2)
        if e1 % p == 0 or e2 % p == 0:
            closure = Closure.YES
        elif dim_delta == 0:
            # equal dimensions: the smaller-rank stratum cannot lie in the closure
            closure = Closure.NO
        else:
            closure = Closure.UNKNOWN
        return EdgeInfo((e, added), 1, closure, dim_delta)
    if p == 2 or any(2 * x % p != 1 for x in added):
        raise EdgeTypeError(f"3-split {E} -> {E2} has a part not congruent to (p+1)/2 mod {p}")
    return EdgeInfo((e, added), 2, Closure.UNKNOWN, dim_delta)


@lru_cache(maxsize=None)
def _build(p: int, d: int) -> RefinementGraph:
    vertices = enumerate_partitions(p, d)
    n = len(vertices)
    above = [set() for _ in range(n)]
    for i, E in enumerate(vertices):
        for j, E2 in enumerate(vertices):
            if len(E2) > len(E) and _refines(E.parts, E2.parts):
                above[i].add(j)
    edges = []
    for i in range(n):
        for j in sorted(above[i]):
            if not any(j in above[k] for k in above[i]):
                edges.append((i, j, classify_edge(p, vertices[i], vertices[j])))
    return RefinementGraph(p, d, vertices, edges)


def build_graph(p: int, d: int) -> RefinementGraph:
    """The refinement graph G_d, vertices in lexicographic order, edges sorted by endpoints."""
    g = _build(p, d)
    return RefinementGraph(g.p, g.d, list(g.vertices), list(g.edges))


def chain_lengths(p: int, d: int) -> set[int]:
    """Lengths (edge counts) of all maximal paths from a minimal to a maximal vertex."""
    g = _build(p, d)
    succ = [g.successors(i) for i in range(len(g.vertices))]
    memo: dict[int, frozenset[int]] = {}

    def lengths_from(i: int) -> frozenset[int]:
        if i not in memo:
            memo[i] = (frozenset(1 + L for j in succ[i] for L in lengths_from(j))
                       if succ[i] else frozenset({0}))
        return memo[i]

    out: set[int] = set()
    for i in g.minimal():
        out |= lengths_from(i)
    return out


def prank_closure_step(p: int, E) -> tuple[Partition, str] | None:
    """Split the largest part e >= p+2 of E as {p, e-p}; None when every part is at most p.

    The stratum of E then lies in the closure of the stratum of the result, whose
    p-rank is larger by p - 1.
    """
    E = _as_partition(p, E)
    big = [e for e in E.parts if e >= p + 2]
    if not big:
        assert stratum_dimension(p, E) == E.d - 1
        return None
    e = max(big)
    parts = list(E.parts)
    parts.remove(e)
    E2 = Partition(p, tuple(parts) + (p, e - p))
    return E2, f"split {e} -> {{{p},{e - p}}}: p divides a split part"
