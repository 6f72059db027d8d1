"""Shared fixtures: named spec graphs, exhaustive oracles, cached corpora."""

from __future__ import annotations

import itertools

import pytest

from pseudoloc import Graph, enumerate_trees, enumerate_unicyclic, from_edge_list


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def paw() -> Graph:
    # triangle 0-1-2 plus pendant 3 at 0
    return from_edge_list(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def k13() -> Graph:
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def spider122() -> Graph:
    # center 0; legs 0-1, 0-2-3, 0-4-5
    return from_edge_list(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])


@pytest.fixture
def c5p13() -> Graph:
    # C5 on 0..4 with pendants 5 at 0 and 6 at 2
    return from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)])


@pytest.fixture
def c4p() -> Graph:
    # C4 on 0..3 with pendant 4 at 0
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


@pytest.fixture
def c4pp() -> Graph:
    # C4 on 0..3 with pendants at 0 and 1
    return from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)])


def branching_showcase_graph() -> Graph:
    """Proper unicyclic graph reproducing the reference statistics
    g=8, l=10, lambda=6, l_s=8, lambda_s=4, c2=3, c3=5, rho=3."""
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(0, 8)]  # thread of length 1 at 0
    edges += [(1, 9), (9, 10)]  # thread of length 2 at 1
    edges += [(2, 11), (2, 12)]  # two pendants at 2 (branch-active, strong)
    edges += [(3, 13), (13, 14), (13, 15)]  # cherry behind 3
    edges += [(4, 16), (16, 17), (16, 18)]  # cherry behind 4
    edges += [(4, 19), (19, 20), (19, 21)]  # second cherry at 4
    return from_edge_list(22, edges)


def thread_gap_c14_graph() -> Graph:
    """C14 with a pendant at every vertex except the antipodal pair {0, 7}."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    nxt = 14
    for i in range(14):
        if i in (0, 7):
            continue
        edges.append((i, nxt))
        nxt += 1
    return from_edge_list(nxt, edges)


@pytest.fixture
def branching_showcase() -> Graph:
    return branching_showcase_graph()


@pytest.fixture
def thread_gap_c14() -> Graph:
    return thread_gap_c14_graph()


# exhaustive reference oracles, independent of the solvers under test


def alpha_by_enumeration(vertices, edges) -> int:
    vertices = list(vertices)
    edge_set = {frozenset(e) for e in edges}
    for size in range(len(vertices), -1, -1):
        for combo in itertools.combinations(vertices, size):
            chosen = set(combo)
            if not any(frozenset(e) <= chosen for e in edge_set):
                return size
    return 0


def gamma_by_enumeration(g: Graph) -> int:
    closed = [set(g.adjacency[v]) | {v} for v in range(g.n)]
    everything = set(range(g.n))
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            covered = set()
            for v in combo:
                covered |= closed[v]
            if covered == everything:
                return size
    return g.n


# cached corpora shared across test modules


@pytest.fixture(scope="session")
def tree_classes_by_n() -> dict[int, list[Graph]]:
    return {n: list(enumerate_trees(n, dedup=True)) for n in range(2, 10)}


@pytest.fixture(scope="session")
def unicyclic_classes_by_n() -> dict[int, list[Graph]]:
    return {n: list(enumerate_unicyclic(n, dedup=True)) for n in range(3, 10)}
