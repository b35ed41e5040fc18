import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slepnet.dataio import (
    SelectionQuery,
    parse_edge_list,
    parse_metadata,
    read_coords_csv,
    resolve_selection,
    write_coords_csv,
    write_edge_list,
)
from slepnet.embedding import EmbeddingCoords
from slepnet.errors import (
    DuplicateEdgeAggregationWarning,
    DuplicateIdError,
    EmptySelectionError,
    NonPositiveWeightError,
    ParseError,
    SelectionError,
    SelfLoopError,
    UnknownIdError,
    UnknownTagError,
)
from slepnet.fixture import fixture_paths, generate_mini_connectome
from slepnet.graph import build_graph, connected_components


def labeled_edges(g):
    """Graph as an id-keyed weighted edge dict (index-order independent)."""
    out = {}
    for e in range(g.num_edges):
        i, j = int(g.edge_index[e, 0]), int(g.edge_index[e, 1])
        key = frozenset((g.label(i), g.label(j)))
        out[key] = g.edge_weight[e]
    return out


class TestParseEdgeList:
    def test_default_weight_path(self):
        triples, ids = parse_edge_list("a,b\nb,c\n")
        assert ids == ["a", "b", "c"]
        assert triples == [(0, 1, 1.0), (1, 2, 1.0)]

    def test_explicit_weight(self):
        triples, ids = parse_edge_list("a,b,2.5")
        assert triples == [(0, 1, 2.5)]

    def test_comments_and_blank_lines(self):
        triples, ids = parse_edge_list("# header\n\na,b,1\n  \n# tail\n")
        assert len(triples) == 1

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            parse_edge_list("a,a,1")

    def test_bad_field_count(self):
        with pytest.raises(ParseError) as err:
            parse_edge_list("a,b,1\na\n")
        assert err.value.line == 2

    def test_bad_weight(self):
        with pytest.raises(ParseError):
            parse_edge_list("a,b,heavy")

    def test_nonpositive_weight(self):
        with pytest.raises(NonPositiveWeightError):
            parse_edge_list("a,b,0")
        with pytest.raises(NonPositiveWeightError):
            parse_edge_list("a,b,-1")

    def test_duplicate_pairs_summed_with_warning(self):
        with pytest.warns(DuplicateEdgeAggregationWarning):
            triples, ids = parse_edge_list("a,b,1\nb,a,2.5")
        assert triples == [(0, 1, 3.5)]

    def test_first_appearance_order(self):
        _, ids = parse_edge_list("z,c\na,z")
        assert ids == ["z", "c", "a"]


class TestParseMetadata:
    def test_single_tag(self):
        meta = parse_metadata("id,categories\nASEL,sensory\n")
        assert meta.ids == ("ASEL",)
        assert meta.tags_for("ASEL") == ("sensory",)

    def test_polymodal(self):
        meta = parse_metadata("id,categories\nX,sensory;motor\n")
        assert meta.tags_for("X") == ("sensory", "motor")
        assert meta.first_tag("X") == "sensory"
        assert meta.all_tags() == ["motor", "sensory"]

    def test_display_name_column(self):
        meta = parse_metadata("id,categories,display_name\nX,inter,Hub cell\n")
        assert meta.display_names["X"] == "Hub cell"

    def test_duplicate_id(self):
        with pytest.raises(DuplicateIdError):
            parse_metadata("id,categories\nX,a\nX,b\n")

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_metadata("name,tags\nX,a\n")

    def test_empty_tag(self):
        with pytest.raises(ParseError):
            parse_metadata("id,categories\nX,a;;b\n")


class TestResolveSelection:
    @pytest.fixture
    def meta(self):
        return parse_metadata(
            "id,categories\na,sensory\nb,inter\nc,inter;sensory\nd,motor\n"
        )

    def test_tag_query_includes_polymodal(self, meta):
        sel = resolve_selection(
            SelectionQuery(tags=("sensory",)), meta, ["a", "b", "c", "d"]
        )
        assert sel.members == (0, 2)

    def test_tag_union(self, meta):
        sel = resolve_selection(
            SelectionQuery(tags=("sensory", "motor")), meta, ["a", "b", "c", "d"]
        )
        assert sel.members == (0, 2, 3)

    def test_id_query(self, meta):
        sel = resolve_selection(SelectionQuery(ids=("b",)), meta, ["a", "b", "c", "d"])
        assert sel.members == (1,)
        assert sel.n_selected == 1

    def test_unknown_id(self, meta):
        with pytest.raises(UnknownIdError):
            resolve_selection(SelectionQuery(ids=("zz",)), meta, ["a", "b"])

    def test_unknown_tag(self, meta):
        with pytest.raises(UnknownTagError):
            resolve_selection(SelectionQuery(tags=("glial",)), meta,
                              ["a", "b", "c", "d"])

    def test_tag_query_requires_metadata(self):
        with pytest.raises(SelectionError):
            resolve_selection(SelectionQuery(tags=("x",)), None, ["a"])

    def test_metadata_must_cover_graph(self, meta):
        with pytest.raises(UnknownIdError):
            resolve_selection(SelectionQuery(tags=("sensory",)), meta,
                              ["a", "b", "c", "d", "extra"])

    def test_empty_id_list(self, meta):
        with pytest.raises(EmptySelectionError):
            resolve_selection(SelectionQuery(ids=()), meta, ["a", "b"])

    def test_query_needs_exactly_one_mode(self):
        with pytest.raises(SelectionError):
            SelectionQuery()
        with pytest.raises(SelectionError):
            SelectionQuery(ids=("a",), tags=("b",))


class TestCoordsCsv:
    def make_coords(self, mat, labels=None):
        mat = np.asarray(mat, dtype=float)
        labels = labels or tuple(f"u{k + 2}" for k in range(mat.shape[1]))
        return EmbeddingCoords(mat, labels, np.zeros(mat.shape[1]))

    def test_three_rows_no_metadata(self, tmp_path):
        path = tmp_path / "coords.csv"
        write_coords_csv(self.make_coords([[0.5, 1], [1, 2], [2, 3]]),
                         ["a", "b", "c"], path)
        lines = path.read_text().splitlines()
        assert lines[0] == "id,x,y"
        assert len(lines) == 4
        assert "category" not in lines[0]

    def test_three_dims_and_selection(self, tmp_path):
        from slepnet.slepian import Selection

        meta = parse_metadata("id,categories\na,s\nb,m\nc,s\n")
        path = tmp_path / "coords.csv"
        write_coords_csv(
            self.make_coords(np.arange(9.0).reshape(3, 3)),
            ["a", "b", "c"], path, meta=meta, sel=Selection(3, (1,)),
            comments=("axis_weights=1,2,3",),
        )
        lines = path.read_text().splitlines()
        assert lines[0] == "# axis_weights=1,2,3"
        assert lines[1] == "id,x,y,z,category,in_selection"
        assert lines[2].startswith("a,0,1,2,s,0")
        assert lines[3].endswith("m,1")

    @given(
        values=st.lists(
            st.tuples(
                st.floats(min_value=-1e12, max_value=1e12,
                          allow_nan=False, allow_infinity=False),
                st.floats(min_value=-1e12, max_value=1e12,
                          allow_nan=False, allow_infinity=False),
            ),
            min_size=1, max_size=10,
        )
    )
    @settings(max_examples=40, deadline=None)
    def test_round_trip_bit_exact(self, values, tmp_path_factory):
        tmp = tmp_path_factory.mktemp("csv")
        mat = np.array(values, dtype=float)
        ids = [f"n{k}" for k in range(mat.shape[0])]
        path = tmp / "coords.csv"
        write_coords_csv(self.make_coords(mat), ids, path)
        back_ids, back = read_coords_csv(path)
        assert back_ids == ids
        assert np.array_equal(back, mat)


edge_graph_strategy = st.builds(
    lambda n, picks, weights: (n, picks, weights),
    st.integers(min_value=2, max_value=10),
    st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=25),
    st.lists(
        st.floats(min_value=1e-6, max_value=1e6,
                  allow_nan=False, allow_infinity=False),
        min_size=25, max_size=25,
    ),
)


class TestEdgeListRoundTrip:
    @given(spec=edge_graph_strategy)
    @settings(max_examples=50, deadline=None)
    def test_write_then_parse_reproduces_graph(self, spec, tmp_path_factory):
        n, picks, weights = spec
        edges = {}
        for (a, b), w in zip(picks, weights):
            a, b = a % n, b % n
            if a == b:
                continue
            edges.setdefault((min(a, b), max(a, b)), w)
        # spanning chain keeps every node present in the file
        for k in range(n - 1):
            edges.setdefault((k, k + 1), 1.0)
        ids = [f"node{k}" for k in range(n)]
        g = build_graph([(i, j, w) for (i, j), w in edges.items()], n, node_ids=ids)

        tmp = tmp_path_factory.mktemp("edges")
        path = tmp / "graph.csv"
        write_edge_list(g, path)
        triples, back_ids = parse_edge_list(path.read_text())
        g2 = build_graph(triples, len(back_ids), node_ids=back_ids)
        assert sorted(back_ids) == sorted(ids)
        assert labeled_edges(g2) == labeled_edges(g)


class TestFixture:
    def test_regeneration_matches_shipped_files(self):
        edges_path, meta_path = fixture_paths()
        edges_text, meta_text = generate_mini_connectome()
        with open(edges_path, encoding="utf-8") as fh:
            assert fh.read() == edges_text
        with open(meta_path, encoding="utf-8") as fh:
            assert fh.read() == meta_text

    def test_fixture_shape(self):
        edges_text, meta_text = generate_mini_connectome()
        triples, ids = parse_edge_list(edges_text)
        g = build_graph(triples, len(ids), node_ids=ids)
        meta = parse_metadata(meta_text)
        assert g.num_nodes == 60
        assert len(connected_components(g)) == 1
        assert set(meta.all_tags()) == {"sensory", "inter", "motor"}
        sel = resolve_selection(SelectionQuery(tags=("sensory",)), meta, ids)
        assert sel.n_selected == 20
        motor = resolve_selection(SelectionQuery(tags=("motor",)), meta, ids)
        assert motor.n_selected == 18

    def test_different_seed_changes_edges(self):
        base, _ = generate_mini_connectome(seed=7)
        other, _ = generate_mini_connectome(seed=8)
        assert base != other
