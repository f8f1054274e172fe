"""Batch verification suites run by ``asprank verify``.

Each suite returns a list of ``Check`` rows; a suite passes when every row does.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .covers import ASCover, cover_with_partition, genus, p_rank_DS, zeta_data
from .deform import make_family, verify_closure_step, verify_deformation
from .errors import DeformationHypothesisError
from .fieldarith import GF
from .refgraph import build_graph, chain_lengths, equal_dimension_split
from .strata import (
    _parts,
    codim_check,
    enumerate_partitions,
    hyperelliptic_components,
    is_irreducible_AS,
    maximal_partitions,
    partition_count,
    stratum_dimension,
)

#: the refinement graph for p = 3, d = 10 as drawn in the reference figure
REFERENCE_G10_VERTICES = [
    (12,), (3, 9), (6, 6), (2, 2, 8), (2, 5, 5), (3, 3, 6),
    (2, 2, 2, 6), (2, 2, 3, 5), (3, 3, 3, 3), (2, 2, 2, 3, 3), (2, 2, 2, 2, 2, 2),
]
REFERENCE_G10_EDGES = [
    ((12,), (3, 9)), ((12,), (6, 6)), ((12,), (2, 2, 8)), ((12,), (2, 5, 5)),
    ((3, 9), (3, 3, 6)), ((6, 6), (3, 3, 6)), ((2, 2, 8), (2, 2, 2, 6)),
    ((2, 2, 8), (2, 2, 3, 5)), ((2, 5, 5), (2, 2, 3, 5)), ((3, 3, 6), (3, 3, 3, 3)),
    ((2, 2, 2, 6), (2, 2, 2, 3, 3)), ((2, 2, 2, 6), (2, 2, 2, 2, 2, 2)),
    ((2, 2, 3, 5), (2, 2, 2, 3, 3)), ((3, 3, 6), (2, 2, 2, 3, 3)), ((6, 6), (2, 2, 2, 6)),
]

#: component dimensions for p = 3, g = 10
REFERENCE_DIMS_P3_D10 = {
    (12,): 6, (3, 9): 7, (6, 6): 7, (2, 2, 8): 7, (2, 5, 5): 7, (3, 3, 6): 8,
    (2, 2, 2, 6): 8, (2, 2, 3, 5): 8, (3, 3, 3, 3): 9, (2, 2, 2, 3, 3): 9,
    (2, 2, 2, 2, 2, 2): 9,
}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _timed(name: str, limit: float, fn: Callable[[], list[Check]]) -> list[Check]:
    start = time.perf_counter()
    rows = fn()
    elapsed = time.perf_counter() - start
    rows.append(Check(f"{name}: runtime", elapsed < limit, f"{elapsed:.2f}s (limit {limit:g}s)"))
    return rows


def suite_graph10() -> list[Check]:
    def run():
        g = build_graph(3, 10)
        verts = sorted(E.parts for E in g.vertices)
        edges = sorted((g.vertices[a].parts, g.vertices[b].parts) for a, b, _ in g.edges)
        ref = sorted(REFERENCE_G10_EDGES)
        extra = [e for e in edges if e not in ref]
        missing = [e for e in ref if e not in edges]
        return [
            Check("graph10: vertices", verts == sorted(REFERENCE_G10_VERTICES), f"{len(verts)} vertices"),
            Check("graph10: edge {6,6} -> {2,2,2,6} of type 2",
                  g.edge((6, 6), (2, 2, 2, 6)) is not None and g.edge((6, 6), (2, 2, 2, 6)).edge_type == 2),
            Check("graph10: edges", not extra and not missing,
                  f"{len(edges)} edges; extra {extra}; missing {missing}"),
        ]
    return _timed("graph10", 1.0, run)


def suite_dims() -> list[Check]:
    rows = []
    for E, expected in REFERENCE_DIMS_P3_D10.items():
        got = stratum_dimension(3, E)
        rows.append(Check(f"dims: {set_str(E)}", got == expected, f"{got} (expected {expected})"))
    return rows


def set_str(parts) -> str:
    return "{" + ",".join(map(str, parts)) + "}"


def _valid_ds(p: int, bound: int):
    return [d for d in range(0, bound + 1) if p != 2 or d % 2 == 0]


def suite_irreducible() -> list[Check]:
    def run():
        bad = []
        count = 0
        for p in (2, 3, 5, 7):
            for d in _valid_ds(p, 30):
                g = d * (p - 1) // 2
                expected = p == 2 or d in (0, 1) or (p == 3 and d in (2, 3, 5))
                got, _ = is_irreducible_AS(p, g)
                count += 1
                if got != expected:
                    bad.append((p, d))
        return [Check("irreducible: classification", not bad, f"{count} cases; mismatches {bad}")]
    return _timed("irreducible", 10.0, run)


@lru_cache(maxsize=None)
def _unsplittable(p: int, e: int) -> bool:
    # e admits no partition into two or more parts from {2, 3, ...} \ {1 mod p}
    return not any(len(ps) >= 2 for ps in _parts(p, e, e - 1))


def _count_unsplittable(p: int, total: int) -> int:
    allowed = [e for e in range(2, total + 1) if e % p != 1 and _unsplittable(p, e)]
    ways = [1] + [0] * total
    for e in allowed:
        for t in range(e, total + 1):
            ways[t] += ways[t - e]
    return ways[total]


def suite_counting() -> list[Check]:
    bad_one, bad_max = [], []
    for p in (2, 3, 5, 7):
        for d in _valid_ds(p, 50):
            if d == 0:
                continue
            if (d + 1) % p == 0:
                expected = -(-(d + 1) * (p - 2) // (2 * p))
                if len(enumerate_partitions(p, d, 1)) != expected:
                    bad_one.append((p, d))
            if p >= 3:
                expected = d // 2 - math.ceil((d - 4) / 3)
                got = len(maximal_partitions(p, d))
                if not got == expected == _count_unsplittable(p, d + 2):
                    bad_max.append((p, d, got, expected))
    return [
        Check("counting: |Omega_{d,1}| when p | d+1", not bad_one, f"mismatches {bad_one}"),
        Check("counting: number of maximal partitions", not bad_max, f"mismatches {bad_max}"),
    ]


def suite_hyperelliptic() -> list[Check]:
    bad = []
    for g in range(1, 13):
        top = 0
        for s in range(0, g + 1):
            count, dim = hyperelliptic_components(g, s)
            if count != partition_count(g + 1, s + 1) or dim != g - 1 + s:
                bad.append((g, s, count, dim))
            top = max(top, dim)
        if top != 2 * g - 1:
            bad.append((g, "top", top))
    return [Check("hyperelliptic: counts and dimensions", not bad, f"mismatches {bad}")]


def oracle_battery() -> list[tuple[str, ASCover]]:
    """At least 30 explicit covers with p in {2, 3, 5} and genus at most 4."""
    out = []

    def add(label, field, num, den=(1,)):
        out.append((label, ASCover.from_coeffs(field, num, den)))

    F2, F3, F5, F4, F9 = GF(2), GF(3), GF(5), GF(2, 2), GF(3, 2)
    add("p=2: x^3", F2, [0, 0, 0, 1])
    add("p=2: x + 1/x", F2, [1, 0, 1], [0, 1])
    add("p=3: x^2", F3, [0, 0, 1])
    add("p=5: x^3 + x^2", F5, [0, 0, 1, 1])
    add("p=5: x + 1/x", F5, [1, 0, 1], [0, 1])
    for p, max_d in ((2, 8), (3, 4), (5, 2)):
        for field in (GF(p), GF(p, 2)):
            for d in range(1, max_d + 1):
                if p == 2 and d % 2:
                    continue
                for E in enumerate_partitions(p, d):
                    # enough rational points for the branch points, and q^g within the oracle bound
                    if len(E) > field.q + 1 or field.q**E.g > 2**16:
                        continue
                    cover = cover_with_partition(field, E.parts)
                    out.append((f"p={p} q={field.q}: partition {E}", cover))
    # covers with extra lower-order terms, a non-rational pole pair and a constant term
    add("p=2 q=4: w x^5 + x^3 + x + 1", F4, [1, 1, 0, 1, 0, 2])
    add("p=3 q=9: (x^2 + w)/(x^2 + 1)", F9, [3, 0, 1], [1, 0, 1])
    add("p=2: x^3/(x^2 + x + 1)", F2, [0, 0, 0, 1], [1, 1, 1])
    add("p=3: x^4 + x^2 + 2", F3, [2, 0, 1, 0, 1])
    add("p=5: 2x + 1/(x - 1)", F5, [1, 3, 2], [4, 1])
    return out


def suite_oracle(max_field_size: int = 2**16) -> list[Check]:
    def run():
        rows = []
        covers = oracle_battery()
        rows.append(Check("oracle: battery size", len(covers) >= 30, f"{len(covers)} covers"))
        for label, cover in covers:
            g = genus(cover)
            if g > 4:
                rows.append(Check(f"oracle: {label}", False, f"genus {g} exceeds 4"))
                continue
            z = zeta_data(cover, max_genus=4, max_field_size=max_field_size)
            ds = p_rank_DS(cover)
            ok = ds == z.p_rank and len(z.L) - 1 == 2 * g
            rows.append(Check(f"oracle: {label}", ok,
                              f"genus {g}, p-rank {ds} (formula) / {z.p_rank} (zeta), deg L {len(z.L) - 1}"))
        return rows
    return _timed("oracle", 60.0, run)


def admissible_splits(primes=(2, 3, 5), max_e: int = 10) -> list[tuple[int, int, int]]:
    out = []
    for p in primes:
        for e in range(4, max_e + 1):
            for e1 in range(2, e - 1):
                e2 = e - e1
                if e1 > e2:
                    continue
                try:
                    make_family(p, e1, e2)
                except DeformationHypothesisError:
                    continue
                out.append((p, e1, e2))
    return out


def suite_deformation() -> list[Check]:
    def run():
        rows = []
        for p, e1, e2 in admissible_splits():
            rep = verify_deformation(p, e1, e2)
            failed = [k for k, v in rep.checks.items() if not v]
            rows.append(Check(f"deformation: p={p} e1={rep.e1} e2={rep.e2}", rep.passed,
                              f"GF({rep.field[0]}^{rep.field[1]}) t0={rep.t0}"
                              f" {set_str(rep.special.partition)} -> {set_str(rep.generic.partition)}"
                              + (f"; failed {failed}" if failed else "")))
        return rows
    return _timed("deformation", 120.0, run)


def suite_closure_steps() -> list[Check]:
    bad = []
    count = 0
    for p in (2, 3, 5):
        for d in range(1, 11):
            if p == 2 and d % 2:
                continue
            for E in enumerate_partitions(p, d):
                if max(E.parts) >= p + 2:
                    count += 1
                    if not verify_closure_step(p, E).passed:
                        bad.append((p, E.parts))
    return [Check("closure steps: explicit covers", not bad, f"{count} steps; failures {bad}")]


def suite_chains() -> list[Check]:
    rows = []
    bad2 = [d for d in range(2, 17, 2) if chain_lengths(2, d) != {d // 2}]
    bad3 = [d for d in range(1, 17) if chain_lengths(3, d) != {d // 3}]
    rows.append(Check("chains: p=2 singleton {d/2}", not bad2, f"mismatches {bad2}"))
    rows.append(Check("chains: p=3 singleton {floor(d/3)}", not bad3, f"mismatches {bad3}"))
    witness = next((d for d in range(1, 17) if len(chain_lengths(5, d)) > 1), None)
    detail = (f"d={witness}: {sorted(chain_lengths(5, witness))}" if witness else "none found")
    rows.append(Check("chains: p=5 non-singleton witness", witness is not None, detail))
    return rows


def suite_codim() -> list[Check]:
    bad = []
    count = 0
    for p in (3, 5):
        for d in range(1, 21):
            g = d * (p - 1) // 2
            for r in range(0, d + 1):
                s = r * (p - 1)
                if s >= g or not enumerate_partitions(p, d, r):
                    continue
                codim, gap, strict = codim_check(p, g, s)
                count += 1
                if not strict:
                    bad.append((p, g, s, codim, gap))
    return [Check("codim: codim < g - s", not bad, f"{count} cases; failures {bad}")]


def suite_edges() -> list[Check]:
    shape_bad, delta_bad, char_bad = [], [], []
    count = 0
    for p in (2, 3, 5, 7):
        for d in range(1, 17):
            if p == 2 and d % 2:
                continue
            g = build_graph(p, d)
            for a, b, info in g.edges:
                count += 1
                e, added = info.split
                E, E2 = g.vertices[a], g.vertices[b]
                ok_shape = sum(added) == e and (
                    len(added) == 2
                    or (len(added) == 3 and p != 2 and all((2 * x - 1) % p == 0 for x in added)))
                if not ok_shape or info.edge_type != len(added) - 1:
                    shape_bad.append((p, E.parts, E2.parts))
                if info.dim_delta not in (0, 1):
                    delta_bad.append((p, E.parts, E2.parts))
                predicted = len(added) == 2 and equal_dimension_split(p, *added)
                if predicted != (info.dim_delta == 0):
                    char_bad.append((p, E.parts, E2.parts))
    return [
        Check("edges: single-entry 2-split or (p+1)/2 3-split", not shape_bad,
              f"{count} edges; failures {shape_bad[:5]}"),
        Check("edges: dimension change in {0, 1}", not delta_bad, f"failures {delta_bad[:5]}"),
        Check("edges: zero change exactly for 2 < e1' + e2' <= p", not char_bad,
              f"{len(char_bad)} failures {char_bad[:5]}"),
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "graph10": suite_graph10,
    "dims": suite_dims,
    "irreducible": suite_irreducible,
    "counting": suite_counting,
    "hyperelliptic": suite_hyperelliptic,
    "oracle": suite_oracle,
    "deformation": suite_deformation,
    "chains": suite_chains,
    "codim": suite_codim,
    "edges": suite_edges,
    "closure-steps": suite_closure_steps,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [row for fn in SUITES.values() for row in fn()]
    return SUITES[name]()
