import json
import random

import networkx as nx
import pytest

from domblocker import (
    FormatError,
    LabeledGraph,
    VertexLabel,
    complete_graph,
    cycle_graph,
    emit_dot,
    emit_edge_list_json,
    emit_graph6,
    parse_edge_list_json,
    parse_graph6,
    build_clawfree,
    build_subcubic,
    satisfiable_fixture,
)


def to_networkx(g: LabeledGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng, n):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return LabeledGraph.from_edges(n, edges)


class TestGraph6:
    def test_c5_reference_encoding(self):
        # frozen from the independent reference encoder
        assert emit_graph6(cycle_graph(5)) == "Dhc"
        assert nx.to_graph6_bytes(to_networkx(cycle_graph(5)), header=False).strip() == b"Dhc"

    def test_round_trip_small(self):
        rng = random.Random(11)
        for _ in range(100):
            g = random_graph(rng, rng.randrange(0, 12))
            h = parse_graph6(emit_graph6(g))
            assert h.n == g.n and h.edges() == g.edges()

    def test_matches_reference_encoder(self):
        rng = random.Random(5)
        for _ in range(60):
            g = random_graph(rng, rng.randrange(1, 15))
            ours = emit_graph6(g)
            theirs = nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
            assert ours == theirs

    def test_parses_reference_output_long_form(self):
        # 63 vertices forces the 4-byte count
        g = cycle_graph(63)
        blob = nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
        parsed = parse_graph6(blob)
        assert parsed.n == 63 and parsed.edges() == g.edges()
        assert emit_graph6(g) == blob

    def test_long_form_matches_reference_on_random_graph(self):
        rng = random.Random(8)
        g = random_graph(rng, 100)
        theirs = nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
        assert emit_graph6(g) == theirs

    def test_header_accepted(self):
        g = cycle_graph(5)
        assert parse_graph6(">>graph6<<" + emit_graph6(g)).edges() == g.edges()
        assert emit_graph6(g, header=True).startswith(">>graph6<<")

    def test_large_build_round_trips_identically(self):
        base, _ = build_subcubic(satisfiable_fixture())
        back = parse_graph6(emit_graph6(base))  # 48 vertices: short form
        assert back.n == base.n and back.edges() == base.edges()
        big, _ = build_clawfree(base)  # 666 vertices: long form
        back = parse_graph6(emit_graph6(big))
        assert back.n == big.n and back.edges() == big.edges()

    def test_empty_input_rejected(self):
        with pytest.raises(FormatError):
            parse_graph6("")

    def test_out_of_range_byte_rejected(self):
        with pytest.raises(FormatError, match="byte"):
            parse_graph6("D\x20\x20\x20")

    def test_truncation_rejected(self):
        blob = emit_graph6(complete_graph(8))
        with pytest.raises(FormatError, match="truncated"):
            parse_graph6(blob[:-1])

    def test_trailing_garbage_rejected(self):
        with pytest.raises(FormatError, match="trailing"):
            parse_graph6(emit_graph6(cycle_graph(5)) + "AA")


class TestEdgeListJson:
    def test_round_trip_with_labels(self):
        labels = [
            VertexLabel("true", var=2, index=1),
            VertexLabel("l", clause=0, var=2),
            VertexLabel(),
        ]
        g = LabeledGraph.from_edges(3, [(0, 1), (1, 2)], labels)
        back = parse_edge_list_json(emit_edge_list_json(g))
        assert back == g

    def test_plain_labels_omitted(self):
        g = cycle_graph(4)
        payload = json.loads(emit_edge_list_json(g))
        assert "labels" not in payload
        assert parse_edge_list_json(emit_edge_list_json(g)) == g

    def test_malformed_json(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_edge_list_json("{oops")

    def test_missing_fields(self):
        with pytest.raises(FormatError):
            parse_edge_list_json('{"n": 3}')

    def test_bad_edge_shape(self):
        with pytest.raises(FormatError, match="edge #0"):
            parse_edge_list_json('{"n": 3, "edges": [[1]]}')

    def test_label_length_mismatch(self):
        with pytest.raises(FormatError, match="labels"):
            parse_edge_list_json('{"n": 2, "edges": [], "labels": [{"kind": "plain"}]}')

    def test_out_of_range_edge(self):
        with pytest.raises(FormatError):
            parse_edge_list_json('{"n": 2, "edges": [[0, 5]]}')


class TestDot:
    def test_colors_and_names_from_labels(self):
        g, rmap = build_subcubic(satisfiable_fixture())
        dot = emit_dot(g)
        assert dot.startswith("graph G {")
        assert "palegreen" in dot  # true vertices
        assert "lightskyblue" in dot  # clause vertices
        assert f"{g.n - 1} " in dot
        assert dot.count(" -- ") == g.edge_count()

    def test_plain_graph(self):
        dot = emit_dot(cycle_graph(3), name="tri")
        assert "graph tri {" in dot and dot.count(" -- ") == 3
