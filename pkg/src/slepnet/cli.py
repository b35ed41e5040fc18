"""Command-line front end.

Subcommands cover the full pipeline: ``embed`` (Laplacian embedding),
``slepian`` (concentrated-basis spectrum), ``summarize`` (subset-aware
2-D view), ``sweep`` (concentration totals vs. bandwidth), and
``fixture`` (write the bundled synthetic network). Exit codes: 0
success, 1 domain or I/O error (one ``error:`` line on stderr), 2 usage
error.
"""

import argparse
import sys
from dataclasses import dataclass

from . import dataio, figures
from .embedding import laplacian_embedding, slepian_summary
from .errors import DimensionMismatchError, SlepnetError
from .fixture import FIXTURE_SEED, write_fixture
from .slepian import (
    DESIGN_CONCENTRATION,
    DESIGN_EMBEDDED,
    concentration_matrix,
    cross_eigenvalues,
    embedded_matrix,
    selection_orthogonality_defect,
    shannon_number,
    shannon_sweep,
    slepian_design,
)
from .spectral import spectral_basis, validate_basis
from .tolerances import Tolerances

_DESIGN_FLAG = {
    "concentration": DESIGN_CONCENTRATION,
    "embedded": DESIGN_EMBEDDED,
}


@dataclass
class RunConfig:
    """Validated knobs of one CLI invocation."""

    graph_path: str
    meta_path: str = None
    select: str = None
    bandwidth: int = None
    design: str = DESIGN_EMBEDDED
    dims: int = 2
    out_path: str = None
    svg_path: str = None
    vectors_path: str = None
    sweep: tuple = None
    seed: int = FIXTURE_SEED

    def output_paths(self):
        return [p for p in (self.out_path, self.svg_path, self.vectors_path)
                if p is not None]


def _load_inputs(config):
    g = dataio.load_graph(config.graph_path)
    meta = dataio.load_metadata(config.meta_path) if config.meta_path else None
    return g, meta


def _parse_select(raw):
    if raw.startswith("@"):
        with open(raw[1:], encoding="utf-8") as fh:
            ids = [ln.strip() for ln in fh
                   if ln.strip() and not ln.startswith("#")]
        return dataio.SelectionQuery(ids=tuple(ids))
    tags = tuple(t.strip() for t in raw.split(",") if t.strip())
    return dataio.SelectionQuery(tags=tags)


def _resolve(config, g, meta):
    sel = dataio.resolve_selection(_parse_select(config.select), meta, g.node_ids)
    print(
        f"selection: {sel.n_selected} of {g.num_nodes} nodes "
        f"({100 * sel.fraction:.2f}%)"
    )
    return sel


def _basis(g, bandwidth):
    from .graph import normalized_laplacian

    basis = spectral_basis(g, bandwidth)
    tol = Tolerances.from_env()
    validate_basis(basis, normalized_laplacian(g),
                   tol_ortho=tol.orthonormality, tol_resid=tol.residual)
    return basis


def cmd_embed(config):
    g, meta = _load_inputs(config)
    basis = _basis(g, config.dims + 1)
    coords = laplacian_embedding(basis, config.dims)
    dataio.write_coords_csv(coords, g.node_ids, config.out_path, meta=meta)
    print(f"wrote {config.out_path}")
    if config.svg_path:
        figures.render_scatter_svg(
            coords, g.node_ids, config.svg_path, meta=meta,
            title="Laplacian embedding",
        )
        print(f"wrote {config.svg_path}")
    return 0


def cmd_slepian(config):
    g, meta = _load_inputs(config)
    sel = _resolve(config, g, meta)
    basis = _basis(g, config.bandwidth)
    c = concentration_matrix(basis, sel)
    c_emb = embedded_matrix(c, basis.values)
    result = slepian_design(basis, sel, config.design)
    mu = cross_eigenvalues(result, c)
    xi = cross_eigenvalues(result, c_emb)
    dataio.write_spectrum_csv(result, mu, xi, config.out_path)
    k = shannon_number(config.bandwidth, sel.n_selected, g.num_nodes)
    print(f"shannon number: K = {k:.6g}")
    if config.design == DESIGN_EMBEDDED:
        defect = selection_orthogonality_defect(result)
        print(f"subset orthogonality defect (off-diagonal G^T S G): {defect:.3e}")
    print(f"wrote {config.out_path}")
    if config.vectors_path:
        dataio.write_vectors_csv(result, g.node_ids, config.vectors_path)
        print(f"wrote {config.vectors_path}")
    return 0


def cmd_summarize(config):
    g, meta = _load_inputs(config)
    sel = _resolve(config, g, meta)
    basis = _basis(g, config.bandwidth)
    result = slepian_design(basis, sel, config.design)
    coords = slepian_summary(result, sel, config.dims)
    weights = ",".join(f"{w:.17g}" for w in coords.axis_weights)
    dataio.write_coords_csv(
        coords, g.node_ids, config.out_path, meta=meta, sel=sel,
        comments=(f"axis_weights={weights}",),
    )
    print(f"axis weights: {weights}")
    print(f"wrote {config.out_path}")
    if config.svg_path:
        figures.render_scatter_svg(
            coords, g.node_ids, config.svg_path, meta=meta, sel=sel,
            title=f"Slepian summary (bandwidth {config.bandwidth})",
        )
        print(f"wrote {config.svg_path}")
    return 0


def cmd_sweep(config):
    g, meta = _load_inputs(config)
    sel = _resolve(config, g, meta)
    if not config.sweep:
        raise DimensionMismatchError("empty bandwidth list")
    basis = _basis(g, max(config.sweep))
    rows = shannon_sweep(basis, sel, config.sweep)
    dataio.write_sweep_csv(rows, config.out_path)
    print(f"wrote {config.out_path}")
    if config.svg_path:
        figures.render_sweep_svg(rows, config.svg_path,
                                 title="Concentration vs. bandwidth")
        print(f"wrote {config.svg_path}")
    return 0


def cmd_fixture(config):
    paths = write_fixture(config.out_path, seed=config.seed)
    for p in paths:
        print(f"wrote {p}")
    return 0


def _int_list(raw):
    try:
        return tuple(int(v) for v in raw.split(",") if v.strip())
    except ValueError:
        raise DimensionMismatchError(f"bad bandwidth list {raw!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slepnet",
        description="Subset-concentrated spectral bases and 2-D network views.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, svg=True):
        p.add_argument("--graph", required=True, help="edge-list file")
        p.add_argument("--meta", help="node metadata CSV")
        p.add_argument("--out", required=True, help="output CSV path")
        if svg:
            p.add_argument("--svg", help="optional figure path (SVG)")

    p = sub.add_parser("embed", help="Laplacian embedding coordinates")
    add_io(p)
    p.add_argument("--dims", type=int, default=2)

    p = sub.add_parser("slepian", help="concentrated-basis eigenvalue spectrum")
    add_io(p, svg=False)
    p.add_argument("--select", required=True, help="tag[,tag...] or @ids.txt")
    p.add_argument("--bandwidth", type=int, required=True)
    p.add_argument("--design", choices=sorted(_DESIGN_FLAG), default="embedded")
    p.add_argument("--vectors", help="optional basis-vector CSV path")

    p = sub.add_parser("summarize", help="subset-aware 2-D coordinates")
    add_io(p)
    p.add_argument("--select", required=True, help="tag[,tag...] or @ids.txt")
    p.add_argument("--bandwidth", type=int, required=True)
    p.add_argument("--design", choices=sorted(_DESIGN_FLAG), default="embedded")
    p.add_argument("--dims", type=int, default=2)

    p = sub.add_parser("sweep", help="concentration totals across bandwidths")
    add_io(p)
    p.add_argument("--select", required=True, help="tag[,tag...] or @ids.txt")
    p.add_argument("--sweep", required=True, help="ascending list, e.g. 5,10,19")

    p = sub.add_parser("fixture", help="write the bundled synthetic network")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--seed", type=int, default=FIXTURE_SEED)
    return parser


def _config_from_args(parser, args):
    if args.command == "fixture":
        return RunConfig(graph_path="", out_path=args.out_dir, seed=args.seed)
    config = RunConfig(
        graph_path=args.graph,
        meta_path=args.meta,
        out_path=args.out,
        svg_path=getattr(args, "svg", None),
        vectors_path=getattr(args, "vectors", None),
        select=getattr(args, "select", None),
        bandwidth=getattr(args, "bandwidth", None),
        design=_DESIGN_FLAG[getattr(args, "design", "embedded")],
        dims=getattr(args, "dims", 2),
        sweep=_int_list(args.sweep) if getattr(args, "sweep", None) else None,
    )
    outputs = config.output_paths()
    if len(set(outputs)) != len(outputs):
        parser.error("output paths must be distinct")
    return config


_COMMANDS = {
    "embed": cmd_embed,
    "slepian": cmd_slepian,
    "summarize": cmd_summarize,
    "sweep": cmd_sweep,
    "fixture": cmd_fixture,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(parser, args)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code) if exc.code is not None else 0
    try:
        return _COMMANDS[args.command](config)
    except (SlepnetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
