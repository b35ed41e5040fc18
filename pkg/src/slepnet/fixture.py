"""Bundled synthetic test network.

A 60-node, three-category network with block-structured connectivity
and integer weights, standing in for connectome-style data that cannot
be redistributed. Generation is fully deterministic in the seed; the
CSV files shipped under ``slepnet/data`` are the seed-7 output.
"""

from importlib import resources

import numpy as np

from .graph import build_graph

FIXTURE_SEED = 7
EDGES_FILENAME = "mini_connectome_edges.csv"
META_FILENAME = "mini_connectome_meta.csv"

_GROUPS = (("S", 18, "sensory"), ("N", 24, "inter"), ("M", 18, "motor"))
_POLYMODAL = {
    "N23": "inter;sensory",
    "N24": "inter;sensory",
    "M18": "motor;inter",
}
# Within/between block edge probabilities, by primary category.
_BLOCK_P = {
    ("sensory", "sensory"): 0.22,
    ("inter", "inter"): 0.18,
    ("motor", "motor"): 0.22,
    ("sensory", "inter"): 0.10,
    ("inter", "motor"): 0.10,
    ("sensory", "motor"): 0.03,
}


def _nodes():
    ids, primary = [], []
    for prefix, count, tag in _GROUPS:
        for k in range(1, count + 1):
            ids.append(f"{prefix}{k:02d}")
            primary.append(tag)
    return ids, primary


def generate_mini_connectome(seed=FIXTURE_SEED):
    """Generate the fixture; returns (edge_csv_text, meta_csv_text)."""
    ids, primary = _nodes()
    n = len(ids)
    rng = np.random.default_rng(seed)

    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            key = (primary[i], primary[j])
            p = _BLOCK_P.get(key) or _BLOCK_P[(key[1], key[0])]
            if rng.random() < p:
                edges.append((i, j, int(rng.integers(1, 6))))

    # Safety net: bridge any stray components deterministically.
    g = build_graph(edges, n, node_ids=ids)
    from .graph import connected_components

    comps = connected_components(g)
    while len(comps) > 1:
        edges.append((comps[0][0], comps[1][0], 1))
        g = build_graph(edges, n, node_ids=ids)
        comps = connected_components(g)

    edge_lines = ["# synthetic mini-connectome fixture"]
    edge_lines += [f"{ids[i]},{ids[j]},{w}" for i, j, w in edges]
    meta_lines = ["id,categories"]
    meta_lines += [
        f"{node_id},{_POLYMODAL.get(node_id, tag)}"
        for node_id, tag in zip(ids, primary)
    ]
    return "\n".join(edge_lines) + "\n", "\n".join(meta_lines) + "\n"


def write_fixture(out_dir, seed=FIXTURE_SEED):
    """Write the fixture files into a directory; returns their paths."""
    import os

    edges_text, meta_text = generate_mini_connectome(seed)
    edges_path = os.path.join(out_dir, EDGES_FILENAME)
    meta_path = os.path.join(out_dir, META_FILENAME)
    for path, text in ((edges_path, edges_text), (meta_path, meta_text)):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return edges_path, meta_path


def fixture_paths():
    """Paths of the bundled seed-7 fixture files."""
    data = resources.files(__package__) / "data"
    return str(data / EDGES_FILENAME), str(data / META_FILENAME)
