"""File ingestion and delimited export.

Formats (all UTF-8, '\\n' line endings, deterministic row order):

* edge list: one ``src,dst[,weight]`` per line, ``#`` comments, weight
  defaults to 1.0. Node ids are arbitrary strings, mapped to dense
  indices in first-appearance order. Duplicate undirected pairs are
  summed with a warning.
* metadata CSV: header ``id,categories[,display_name]``; categories
  separated by ``;`` within the field.
* coordinates CSV: header ``id,x,y[,z...][,category,in_selection]``;
  floats at 17 significant digits, so re-parsing is bit-exact.
"""

import csv
import io
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
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
from .graph import build_graph
from .slepian import Selection

AXIS_NAMES = ("x", "y", "z")


def _fmt(value):
    return f"{value:.17g}"


def parse_edge_list(text):
    """Parse edge-list text into (edge triples, node id list).

    Duplicate undirected pairs are aggregated by summation and reported
    via :class:`DuplicateEdgeAggregationWarning`, supporting inputs that
    concatenate several connectivity files.
    """
    ids = {}
    pair_weight = {}
    pair_order = []
    duplicates = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) not in (2, 3):
            raise ParseError(
                f"expected 'src,dst[,weight]', got {raw!r}", line=line_no
            )
        src, dst = fields[0], fields[1]
        if not src or not dst:
            raise ParseError("empty node id", line=line_no)
        if src == dst:
            raise SelfLoopError(f"line {line_no}: self-loop at {src!r}")
        if len(fields) == 3:
            try:
                w = float(fields[2])
            except ValueError:
                raise ParseError(
                    f"bad weight {fields[2]!r}", line=line_no
                ) from None
        else:
            w = 1.0
        if not np.isfinite(w) or w <= 0:
            raise NonPositiveWeightError(
                f"line {line_no}: non-positive weight {w} on {src}-{dst}"
            )
        for node in (src, dst):
            if node not in ids:
                ids[node] = len(ids)
        i, j = ids[src], ids[dst]
        pair = (i, j) if i < j else (j, i)
        if pair in pair_weight:
            pair_weight[pair] += w
            duplicates.add(pair)
        else:
            pair_weight[pair] = w
            pair_order.append(pair)

    id_list = list(ids)
    if duplicates:
        names = ", ".join(
            f"{id_list[a]}-{id_list[b]}" for a, b in sorted(duplicates)[:5]
        )
        warnings.warn(
            f"{len(duplicates)} duplicate undirected pair(s) aggregated "
            f"by summation (e.g. {names})",
            DuplicateEdgeAggregationWarning,
            stacklevel=2,
        )
    triples = [(i, j, pair_weight[(i, j)]) for i, j in pair_order]
    return triples, id_list


def load_graph(path):
    """Read an edge-list file and build the graph."""
    with open(path, encoding="utf-8") as fh:
        triples, ids = parse_edge_list(fh.read())
    return build_graph(triples, len(ids), node_ids=ids)


def write_edge_list(g, path):
    """Write a graph back to edge-list form, edges sorted by index pair.

    Nodes without edges are not representable in this format.
    """
    order = np.lexsort((g.edge_index[:, 1], g.edge_index[:, 0]))
    lines = [
        f"{g.label(int(g.edge_index[e, 0]))},{g.label(int(g.edge_index[e, 1]))},"
        f"{_fmt(g.edge_weight[e])}"
        for e in order
    ]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


@dataclass(frozen=True)
class NodeMetadata:
    """Per-node category tags and display names, keyed by id."""

    ids: tuple
    categories: dict
    display_names: dict

    def tags_for(self, node_id):
        return self.categories[node_id]

    def first_tag(self, node_id):
        return self.categories[node_id][0]

    def all_tags(self):
        """Every tag present, sorted."""
        seen = set()
        for tags in self.categories.values():
            seen.update(tags)
        return sorted(seen)


def parse_metadata(text):
    """Parse metadata CSV text into a :class:`NodeMetadata`."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty metadata input") from None
    header = [h.strip() for h in header]
    if header[:2] != ["id", "categories"] or len(header) > 3 or (
        len(header) == 3 and header[2] != "display_name"
    ):
        raise ParseError(
            f"expected header 'id,categories[,display_name]', got {header}"
        )
    ids = []
    categories = {}
    display_names = {}
    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, got {len(row)}", line=line_no
            )
        node_id = row[0].strip()
        if not node_id:
            raise ParseError("empty id", line=line_no)
        if node_id in categories:
            raise DuplicateIdError(f"duplicate id {node_id!r}", line=line_no)
        tags = tuple(t.strip() for t in row[1].split(";"))
        if any(not t for t in tags):
            raise ParseError(f"empty category tag for {node_id!r}", line=line_no)
        ids.append(node_id)
        categories[node_id] = tags
        if len(header) == 3 and row[2].strip():
            display_names[node_id] = row[2].strip()
    return NodeMetadata(tuple(ids), categories, display_names)


def load_metadata(path):
    with open(path, encoding="utf-8") as fh:
        return parse_metadata(fh.read())


@dataclass(frozen=True)
class SelectionQuery:
    """Either an explicit id list or a tag union.

    A tag query selects every node whose tag set intersects the query
    tags, which is how multi-tag (polymodal) nodes join a single-tag
    selection.
    """

    ids: tuple = None
    tags: tuple = None

    def __post_init__(self):
        if (self.ids is None) == (self.tags is None):
            raise SelectionError("query needs exactly one of ids or tags")


def resolve_selection(query, meta, node_ids):
    """Resolve a query to a :class:`Selection` over graph node indices."""
    index_of = {node_id: k for k, node_id in enumerate(node_ids)}
    if query.ids is not None:
        members = []
        for node_id in query.ids:
            if node_id not in index_of:
                raise UnknownIdError(f"id {node_id!r} not in the graph")
            members.append(index_of[node_id])
        if not members:
            raise EmptySelectionError("empty id list")
        return Selection(len(node_ids), tuple(members))

    if meta is None:
        raise SelectionError("tag queries require metadata")
    missing = [n for n in node_ids if n not in meta.categories]
    if missing:
        raise UnknownIdError(
            f"{len(missing)} graph node(s) without a metadata row "
            f"(e.g. {missing[:5]})"
        )
    universe = set(meta.all_tags())
    for tag in query.tags:
        if tag not in universe:
            raise UnknownTagError(
                f"tag {tag!r} not in metadata (known: {sorted(universe)})"
            )
    wanted = set(query.tags)
    members = tuple(
        k for k, node_id in enumerate(node_ids)
        if wanted.intersection(meta.categories[node_id])
    )
    if not members:
        raise EmptySelectionError(f"no node carries any of {sorted(wanted)}")
    return Selection(len(node_ids), members)


def write_coords_csv(coords, node_ids, path, meta=None, sel=None, comments=()):
    """Write embedding coordinates, one row per node in index order.

    Optional metadata adds a ``category`` column (tags joined by ';');
    an optional selection adds 0/1 ``in_selection``. ``comments`` lines
    are emitted first, prefixed with ``# ``.
    """
    mat = np.asarray(coords.coords)
    if mat.shape[0] != len(node_ids):
        raise DimensionMismatchError(
            f"{mat.shape[0]} coordinate rows for {len(node_ids)} nodes"
        )
    d = mat.shape[1]
    axis_cols = [AXIS_NAMES[k] if k < len(AXIS_NAMES) else f"c{k}" for k in range(d)]
    header = ["id", *axis_cols]
    if meta is not None:
        header.append("category")
    if sel is not None:
        header.append("in_selection")
        selected = set(sel.members)
    lines = [f"# {c}" for c in comments]
    lines.append(",".join(header))
    for k, node_id in enumerate(node_ids):
        row = [node_id, *(_fmt(v) for v in mat[k])]
        if meta is not None:
            row.append(";".join(meta.categories[node_id]))
        if sel is not None:
            row.append("1" if k in selected else "0")
        lines.append(",".join(row))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_coords_csv(path):
    """Re-read a coordinates CSV; returns (ids, coordinate matrix)."""
    ids = []
    rows = []
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().splitlines() if not ln.startswith("#")]
    header = lines[0].split(",")
    n_axes = 0
    for h in header[1:]:
        if h in ("category", "in_selection"):
            break
        n_axes += 1
    for line in lines[1:]:
        fields = line.split(",")
        ids.append(fields[0])
        rows.append([float(v) for v in fields[1 : 1 + n_axes]])
    return ids, np.array(rows)


def write_spectrum_csv(slepian, mu, xi, path):
    """Per-column eigenvalue table: k, design value, recovered mu and xi."""
    lines = ["k,value,mu,xi"]
    for k in range(slepian.bandwidth):
        lines.append(
            f"{k + 1},{_fmt(slepian.values[k])},{_fmt(mu[k])},{_fmt(xi[k])}"
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_vectors_csv(slepian, node_ids, path):
    """Node-domain basis columns, one CSV column per basis vector."""
    header = ["id"] + [f"g{k + 1}" for k in range(slepian.bandwidth)]
    lines = [",".join(header)]
    for i, node_id in enumerate(node_ids):
        lines.append(
            ",".join([node_id, *(_fmt(v) for v in slepian.vectors[i])])
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_sweep_csv(rows, path):
    """Bandwidth sweep table, one row per bandwidth."""
    lines = [
        "bandwidth,shannon,sum_mu_concentration,sum_mu_embedded,sum_xi_embedded"
    ]
    for r in rows:
        lines.append(
            f"{r.bandwidth},{_fmt(r.shannon)},{_fmt(r.sum_mu_concentration)},"
            f"{_fmt(r.sum_mu_embedded)},{_fmt(r.sum_xi_embedded)}"
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
