"""Graph construction, text formats, distances, girth, bipartiteness."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pseudoloc import (
    Disconnected,
    DuplicateEdge,
    MalformedGraph6,
    NotPseudotree,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
    distance_matrix,
    encode_graph6,
    format_edgelist,
    from_edge_list,
    girth_and_cycle,
    is_bipartite,
    parse_edgelist,
    parse_graph6,
)
from pseudoloc.corpus import CorpusSpec, random_pseudotree

from conftest import cycle_graph, path_graph


class TestFromEdgeList:
    def test_path(self, p4):
        assert p4.n == 4
        assert p4.edges == ((0, 1), (1, 2), (2, 3))
        assert p4.adjacency[1] == (0, 2)

    def test_paw(self, paw):
        assert paw.m == 4
        assert paw.degree(0) == 3
        assert paw.has_edge(0, 2) and not paw.has_edge(1, 3)

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (2, 0)])

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            from_edge_list(3, [(0, 0), (0, 1), (1, 2)])

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            from_edge_list(4, [(0, 1), (2, 3)])

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            from_edge_list(3, [(0, 3)])

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("PSEUDOLOC_MAX_N", "4")
        with pytest.raises(SizeCapExceeded):
            from_edge_list(5, [(i, i + 1) for i in range(4)])
        monkeypatch.delenv("PSEUDOLOC_MAX_N")
        assert from_edge_list(5, [(i, i + 1) for i in range(4)]).n == 5


class TestDistances:
    def test_path_row(self, p4):
        assert distance_matrix(p4)[0] == (0, 1, 2, 3)

    def test_cycle_symmetry(self, c5):
        dm = distance_matrix(c5)
        assert dm.d(0, 2) == 2 and dm.d(0, 3) == 2

    def test_paw_hand_bfs(self, paw):
        dm = distance_matrix(paw)
        assert dm.d(3, 1) == 2 and dm.d(3, 2) == 2
        assert dm.diameter() == 2

    def test_matrix_invariants_on_random_pseudotrees(self):
        for seed in range(40):
            family = "tree" if seed % 2 else "unicyclic"
            g = random_pseudotree(CorpusSpec(family=family, max_n=3 + seed % 8, seed=seed))
            dm = distance_matrix(g)
            for u in range(g.n):
                assert dm.d(u, u) == 0
                for v in range(g.n):
                    assert dm.d(u, v) == dm.d(v, u) >= 0
                    assert (dm.d(u, v) == 1) == g.has_edge(u, v)
                    for w in range(g.n):
                        assert dm.d(u, w) <= dm.d(u, v) + dm.d(v, w)


class TestGraph6:
    def test_k4(self):
        k4 = parse_graph6("C~")
        assert k4.n == 4 and k4.m == 6

    def test_header(self):
        assert parse_graph6(">>graph6<<C~").m == 6

    def test_empty(self):
        with pytest.raises(MalformedGraph6):
            parse_graph6("")

    def test_bad_character(self):
        with pytest.raises(MalformedGraph6):
            parse_graph6("C\x1f")

    def test_wrong_length(self):
        with pytest.raises(MalformedGraph6):
            parse_graph6("C~~")

    def test_nonzero_padding(self):
        # C5 body uses 10 bits; flip the lowest padding bit of the last group
        good = encode_graph6(cycle_graph(5))
        bad = good[:-1] + chr(((ord(good[-1]) - 63) | 1) + 63)
        with pytest.raises(MalformedGraph6):
            parse_graph6(bad)

    def test_disconnected_rejected(self):
        # 4 vertices, single edge 0-1
        with pytest.raises(Disconnected):
            parse_graph6("C_")

    def test_known_encoding_roundtrip(self):
        for s in ("C~", "DQc", "EY?W", "D?{"):
            assert encode_graph6(parse_graph6(s)) == s

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 10**6), st.integers(2, 12))
    def test_roundtrip_random_connected(self, seed, n):
        family = "tree" if seed % 2 else ("unicyclic" if n >= 3 else "tree")
        g = random_pseudotree(CorpusSpec(family=family, max_n=n, seed=seed))
        again = parse_graph6(encode_graph6(g))
        assert again.edges == g.edges and again.n == g.n

    def test_large_n_two_byte_order(self, monkeypatch):
        monkeypatch.setenv("PSEUDOLOC_MAX_N", "70")
        g = path_graph(64)
        assert parse_graph6(encode_graph6(g)).edges == g.edges


class TestEdgelistFormat:
    def test_parse_with_comments(self):
        text = "# a paw\n4\n0 1\n1 2 # triangle\n2 0\n0 3\n"
        g = parse_edgelist(text)
        assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 2))

    def test_roundtrip(self, c5p13):
        assert parse_edgelist(format_edgelist(c5p13)).edges == c5p13.edges

    def test_garbage(self):
        with pytest.raises(MalformedGraph6):
            parse_edgelist("4\n0 1 2\n")


class TestGirthAndCycle:
    def test_paw(self, paw):
        assert girth_and_cycle(paw) == (3, [0, 1, 2])

    def test_tree(self, p4):
        assert girth_and_cycle(p4) is None

    def test_whole_cycle(self, c6):
        assert girth_and_cycle(c6) == (6, [0, 1, 2, 3, 4, 5])

    def test_not_pseudotree(self):
        with pytest.raises(NotPseudotree):
            girth_and_cycle(parse_graph6("C~"))

    def test_cycle_is_closed_walk(self, unicyclic_classes_by_n):
        for g in unicyclic_classes_by_n[8]:
            length, cyc = girth_and_cycle(g)
            assert length == len(cyc)
            for i, v in enumerate(cyc):
                assert g.has_edge(v, cyc[(i + 1) % length])
            assert cyc[0] == min(cyc)
            assert cyc[1] == min(w for w in g.adjacency[cyc[0]] if w in set(cyc))


class TestBipartite:
    def test_even_cycle(self, c6):
        assert is_bipartite(c6)

    def test_paw(self, paw):
        assert not is_bipartite(paw)

    def test_trees(self, tree_classes_by_n):
        assert all(is_bipartite(t) for t in tree_classes_by_n[7])
