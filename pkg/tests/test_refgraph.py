import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from asprank.errors import EdgeTypeError, InvalidParameters
from asprank.refgraph import (
    Closure,
    build_graph,
    chain_lengths,
    classify_edge,
    equal_dimension_split,
    least_positive_residue,
    prank_closure_step,
    refines,
)
from asprank.strata import Partition, enumerate_partitions, stratum_dimension

G10_DOT = r'''digraph "G_10 p=3" {
  rankdir=TB;
  node [shape=box];
  n0 [label="{2,2,2,2,2,2}\ndim 9"];
  n1 [label="{2,2,2,3,3}\ndim 9"];
  n2 [label="{2,2,2,6}\ndim 8"];
  n3 [label="{2,2,3,5}\ndim 8"];
  n4 [label="{2,2,8}\ndim 7"];
  n5 [label="{2,5,5}\ndim 7"];
  n6 [label="{3,3,3,3}\ndim 9"];
  n7 [label="{3,3,6}\ndim 8"];
  n8 [label="{3,9}\ndim 7"];
  n9 [label="{6,6}\ndim 7"];
  n10 [label="{12}\ndim 6"];
  n2 -> n0 [style=dashed, label="t2"];
  n2 -> n1 [style=solid, label="t1"];
  n3 -> n1 [style=solid, label="t1"];
  n4 -> n2 [style=solid, label="t1"];
  n4 -> n3 [style=solid, label="t1"];
  n5 -> n3 [style=solid, label="t1"];
  n7 -> n1 [style=dashed, label="t2"];
  n7 -> n6 [style=solid, label="t1"];
  n8 -> n3 [style=dashed, label="t2"];
  n8 -> n7 [style=solid, label="t1"];
  n9 -> n2 [style=dashed, label="t2"];
  n9 -> n7 [style=solid, label="t1"];
  n10 -> n4 [style=dashed, label="t2"];
  n10 -> n5 [style=dashed, label="t2"];
  n10 -> n8 [style=solid, label="t1"];
  n10 -> n9 [style=solid, label="t1"];
}
'''


def set_partitions(items):
    """All ways to split a list into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_refines(E, E2):
    target = sorted(E)
    for blocks in set_partitions(list(E2)):
        if sorted(sum(b) for b in blocks) == target:
            return True
    return False


def valid_pd(primes=(2, 3, 5, 7), max_d=12):
    return [(p, d) for p in primes for d in range(1, max_d + 1) if p != 2 or d % 2 == 0]


@pytest.mark.parametrize("p,d", valid_pd(max_d=10))
def test_refines_against_set_partitions(p, d):
    omega = enumerate_partitions(p, d)
    for E, E2 in itertools.product(omega, repeat=2):
        assert refines(E, E2) == brute_refines(E.parts, E2.parts)


def test_refines_examples():
    assert refines(Partition(3, (12,)), Partition(3, (3, 9)))
    assert refines((3, 9), (2, 2, 3, 5))
    assert not refines((6, 6), (3, 9))
    assert refines((6, 6), (6, 6))
    with pytest.raises(InvalidParameters):
        refines(Partition(3, (12,)), Partition(3, (2, 2)))


@pytest.mark.parametrize("p,d", valid_pd())
def test_edges_are_the_transitive_reduction(p, d):
    omega = enumerate_partitions(p, d)
    order = nx.DiGraph()
    order.add_nodes_from(E.parts for E in omega)
    for E, E2 in itertools.product(omega, repeat=2):
        if E != E2 and brute_refines(E.parts, E2.parts):
            order.add_edge(E.parts, E2.parts)
    reduced = nx.transitive_reduction(order)
    g = build_graph(p, d)
    got = {(g.vertices[a].parts, g.vertices[b].parts) for a, b, _ in g.edges}
    assert got == set(reduced.edges())


@pytest.mark.parametrize("p,d", valid_pd((2, 3, 5, 7), 16))
def test_graph_invariants(p, d):
    g = build_graph(p, d)
    dag = nx.DiGraph([(a, b) for a, b, _ in g.edges])
    assert nx.is_directed_acyclic_graph(dag)
    for a, b, info in g.edges:
        E, E2 = g.vertices[a], g.vertices[b]
        assert len(E2) > len(E)
        assert len(E2) - len(E) == info.edge_type
        assert info.dim_delta == stratum_dimension(p, E2) - stratum_dimension(p, E)
        e1_e2 = info.split[1]
        if info.closure is Closure.YES:
            assert info.edge_type == 1 and any(x % p == 0 for x in e1_e2)
        if info.closure is Closure.NO:
            assert info.edge_type == 1 and info.dim_delta == 0
        if info.edge_type == 2:
            assert info.closure is Closure.UNKNOWN and info.dim_delta == 1


def test_g10_golden_dot():
    assert build_graph(3, 10).to_dot() == G10_DOT


def test_g10_contains_drawn_type_two_edge():
    info = build_graph(3, 10).edge((6, 6), (2, 2, 2, 6))
    assert info.edge_type == 2 and info.split == (6, (2, 2, 2))


def test_g10_extra_covering_edge():
    # {3,9} -> {2,2,3,5} splits 9 into 2+2+5 and nothing lies strictly between
    info = build_graph(3, 10).edge((3, 9), (2, 2, 3, 5))
    assert info.edge_type == 2 and info.closure is Closure.UNKNOWN


def test_trivial_graph():
    g = build_graph(5, 1)
    assert len(g.vertices) == 1 and g.edges == []


def test_json_export_roundtrip():
    g = build_graph(3, 10)
    data = json.loads(g.to_json())
    assert len(data["vertices"]) == 11 and len(data["edges"]) == len(g.edges)
    for e, (a, b, info) in zip(data["edges"], g.edges):
        assert (e["source"], e["target"]) == (a, b)
        assert e["closure"] == info.closure.value and e["type"] == info.edge_type


def test_p2_graph_is_graded():
    g = build_graph(2, 8)
    assert all(info.edge_type == 1 for _, _, info in g.edges)
    for a, b, _ in g.edges:
        assert len(g.vertices[b]) == len(g.vertices[a]) + 1


def test_classify_edge_examples():
    p = 5
    info = classify_edge(p, Partition(p, (8,)), Partition(p, (3, 5)))
    assert info.closure is Closure.YES and info.dim_delta == 1
    info = classify_edge(p, Partition(p, (7,)), Partition(p, (3, 4)))
    assert info.closure is Closure.UNKNOWN and info.dim_delta == 1
    info = classify_edge(p, Partition(p, (5,)), Partition(p, (2, 3)))
    assert info.closure is Closure.NO and info.dim_delta == 0
    info = classify_edge(p, Partition(p, (12,)), Partition(p, (2, 10)))
    assert info.closure is Closure.YES and info.dim_delta == 1
    info = classify_edge(7, Partition(7, (7,)), Partition(7, (3, 4)))
    assert info.closure is Closure.NO and info.dim_delta == 0
    info = classify_edge(3, Partition(3, (6,)), Partition(3, (2, 2, 2)))
    assert info.edge_type == 2 and info.closure is Closure.UNKNOWN


def test_classify_edge_rejects_non_edges():
    with pytest.raises(EdgeTypeError):
        classify_edge(3, Partition(3, (12,)), Partition(3, (2, 2, 2, 6)))
    with pytest.raises(EdgeTypeError):
        classify_edge(5, Partition(5, (9,)), Partition(5, (2, 2, 5)))


def test_residues():
    assert [least_positive_residue(5, e) for e in (5, 6, 7, 10)] == [5, 1, 2, 5]
    assert equal_dimension_split(7, 3, 4)
    assert not equal_dimension_split(5, 3, 5)
    assert not equal_dimension_split(5, 3, 3)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_equal_dimension_split_matches_dimensions(p):
    for e1 in range(2, 4 * p):
        for e2 in range(e1, 4 * p):
            if e1 % p == 1 or e2 % p == 1 or (e1 + e2) % p == 1:
                continue
            delta = stratum_dimension(p, (e1, e2)) - stratum_dimension(p, (e1 + e2,))
            assert (delta == 0) == equal_dimension_split(p, e1, e2)


def test_chain_lengths():
    assert chain_lengths(2, 8) == {4}
    assert chain_lengths(3, 10) == {3}
    assert chain_lengths(5, 4) == {0, 1}
    assert chain_lengths(5, 6) == {2, 3}
    assert chain_lengths(5, 13) == {3, 4, 5, 6}


def test_chain_lengths_against_path_enumeration():
    for p, d in [(3, 10), (5, 9), (7, 12)]:
        g = build_graph(p, d)
        dag = nx.DiGraph()
        dag.add_nodes_from(range(len(g.vertices)))
        dag.add_edges_from((a, b) for a, b, _ in g.edges)
        lengths = set()
        for s in g.minimal():
            for t in g.maximal():
                if s == t:
                    lengths.add(0)
                for path in nx.all_simple_paths(dag, s, t):
                    lengths.add(len(path) - 1)
        assert chain_lengths(p, d) == lengths


def test_prank_closure_step():
    E2, why = prank_closure_step(3, (12,))
    assert E2.parts == (3, 9) and "split 12" in why
    assert prank_closure_step(3, (3, 3, 3, 3)) is None
    assert prank_closure_step(2, (2, 4))[0].parts == (2, 2, 2)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 20))
def test_prank_closure_step_is_above_in_the_order(p, d):
    if p == 2 and d % 2:
        d += 1
    for E in enumerate_partitions(p, d):
        step = prank_closure_step(p, E)
        if step is None:
            assert max(E.parts) <= p
            continue
        E2 = step[0]
        assert refines(E, E2) and E2.r == E.r + 1
        assert stratum_dimension(p, E2) == stratum_dimension(p, E) + 1
