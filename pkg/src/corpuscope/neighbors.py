"""Co-occurrence graph construction by mean-scaled reduction.

Two items are neighbours when they share at least one document. The raw
neighbourhood matrix TD = M' * M'^T of a frequency-banded term-document
matrix is far too dense to show structure, so it is thinned by comparing
each entry against a multiple of the per-row mean:

  subtraction branch (binary_flag=1): keep TD[i,k] - beta * vm[i] >= 0
  window branch (binary_flag=0):      keep -beta*vm[i] <= TD[i,k] <= beta*vm[i]

Surviving entries are binarized, all-zero rows pruned, and the average
node degree reported as the mean-links statistic. Two pipeline variants
exist: `fr` bands rows on raw frequency sums and takes row means from the
filtered counts; `drl` bands rows on document presence and takes row
means from the binarized neighbourhood matrix. Both feed the same
force-directed layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import sparse

from .ingest import TermDocumentMatrix

__all__ = [
    "ReductionParams",
    "CooccurrenceGraph",
    "EmptyBandError",
    "EmptyGraphError",
    "band_filter",
    "cooccurrence",
    "mean_vector",
    "reduce_graph",
    "knn_graph",
    "write_edges_tsv",
]


class EmptyBandError(ValueError):
    """No matrix row falls inside the requested frequency band."""


class EmptyGraphError(ValueError):
    """Every node was pruned during reduction."""


@dataclass(frozen=True)
class ReductionParams:
    beta: float = 1.0
    min_freq: int = 1
    max_freq: int | None = None
    binary_flag: int = 1  # 1: subtraction branch, 0: window branch
    variant: str = "fr"   # "fr" | "drl"
    symmetrize: str = "or"  # "or": either row keeps the link, "and": both must
    min_degree: int = 0   # optional display filter, off by default

    def __post_init__(self):
        if self.min_freq < 1:
            raise ValueError("min_freq must be >= 1")
        if self.max_freq is not None and self.max_freq < self.min_freq:
            raise ValueError("max_freq must be >= min_freq")
        if self.beta < 0:
            raise ValueError("beta must be non-negative")
        if self.binary_flag not in (0, 1):
            raise ValueError("binary_flag must be 0 or 1")
        if self.variant not in ("fr", "drl"):
            raise ValueError("variant must be 'fr' or 'drl'")
        if self.symmetrize not in ("or", "and"):
            raise ValueError("symmetrize must be 'or' or 'and'")


@dataclass
class CooccurrenceGraph:
    nodes: list[str]
    adjacency: sparse.csr_matrix  # symmetric, zero diagonal, 0/1 entries
    mean_links: float

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return np.asarray(self.adjacency.sum(axis=1)).ravel()


def band_filter(tdm: TermDocumentMatrix, params: ReductionParams) -> TermDocumentMatrix:
    """Keep rows whose frequency falls inside [min_freq, max_freq].

    The `fr` variant bands on raw row sums (total occurrences); the `drl`
    variant bands on binary row sums (number of containing documents).
    """
    if params.variant == "drl":
        presence = tdm.counts.copy()
        presence.data = np.ones_like(presence.data)
        sums = np.asarray(presence.sum(axis=1)).ravel()
    else:
        sums = tdm.row_sums()
    hi = np.inf if params.max_freq is None else params.max_freq
    mask = (sums >= params.min_freq) & (sums <= hi)
    if not mask.any():
        raise EmptyBandError(
            f"no term has row sum in [{params.min_freq}, {params.max_freq}]")
    idx = np.flatnonzero(mask)
    return TermDocumentMatrix(
        terms=[tdm.terms[i] for i in idx],
        doc_ids=list(tdm.doc_ids),
        counts=tdm.counts[idx].tocsr(),
    )


def cooccurrence(filtered: TermDocumentMatrix, variant: str = "fr") -> sparse.csr_matrix:
    """Raw neighbourhood matrix TD = M' * M'^T; binarized for `drl`."""
    if not filtered.terms:
        raise ValueError("empty filtered matrix")
    m = filtered.counts
    td = (m @ m.T).tocsr()
    if variant == "drl":
        td.data = (td.data > 0).astype(td.data.dtype)
        td.eliminate_zeros()
    return td


def mean_vector(source: sparse.spmatrix, variant: str = "fr") -> np.ndarray:
    """Per-row arithmetic mean of the nonzero entries.

    `fr` computes it from the filtered term-document matrix, `drl` from
    the binarized neighbourhood matrix (where it is identically 1).
    """
    csr = source.tocsr()
    nnz = np.diff(csr.indptr)
    if (nnz == 0).any():
        raise ValueError("all-zero row has no nonzero mean")
    sums = np.asarray(csr.sum(axis=1)).ravel()
    return sums / nnz


def reduce_graph(td: sparse.spmatrix, vm: np.ndarray,
                 params: ReductionParams,
                 node_names: list[str] | None = None) -> CooccurrenceGraph:
    """Threshold the neighbourhood matrix, binarize, prune and score.

    The subtraction branch keeps entries at least beta times the row
    mean, so raising beta prunes monotonically. The window branch keeps
    entries within +/- beta times the row mean, a rule that retains weak
    associations and prunes strong ones. Kept entries become 1, the
    diagonal is dropped, rows are symmetrized (`or`: a link survives if
    either endpoint kept it, `and`: both must), and all-zero rows leave
    the graph.
    """
    td = td.tocsr()
    n = td.shape[0]
    if td.shape[1] != n or len(vm) != n:
        raise ValueError("dimension mismatch between TD and mean vector")
    names = node_names if node_names is not None else [str(i) for i in range(n)]

    coo = td.tocoo()
    thr = np.asarray(vm)[coo.row] * params.beta
    if params.binary_flag == 1:
        keep = (coo.data - thr) >= 0
    else:
        keep = (coo.data >= -thr) & (coo.data <= thr)
    keep &= coo.data > 0        # binarize positives only
    keep &= coo.row != coo.col  # self-links never reported

    mask = sparse.coo_matrix(
        (np.ones(int(keep.sum()), dtype=np.int8),
         (coo.row[keep], coo.col[keep])),
        shape=(n, n),
    ).tocsr()
    if params.symmetrize == "or":
        adj = mask.maximum(mask.T)
    else:
        adj = mask.minimum(mask.T)
    adj = adj.tocsr()
    adj.eliminate_zeros()

    degrees = np.asarray(adj.sum(axis=1)).ravel()
    min_deg = max(1, params.min_degree)
    alive = np.flatnonzero(degrees >= min_deg)
    if alive.size == 0:
        raise EmptyGraphError("reduction removed every node")
    sub = adj[alive][:, alive].tocsr()
    kept_names = [names[i] for i in alive]
    mean_links = float(np.asarray(sub.sum(axis=1)).ravel().mean())
    return CooccurrenceGraph(kept_names, sub, mean_links)


def knn_graph(tdm: TermDocumentMatrix, params: ReductionParams) -> CooccurrenceGraph:
    """Full pipeline: band filter, co-occurrence, mean vector, reduction."""
    filtered = band_filter(tdm, params)
    td = cooccurrence(filtered, params.variant)
    source = td if params.variant == "drl" else filtered.counts
    vm = mean_vector(source, params.variant)
    return reduce_graph(td, vm, params, node_names=filtered.terms)


def write_edges_tsv(graph: CooccurrenceGraph, path: str | Path,
                    params: ReductionParams | None = None) -> Path:
    """Edge list `a <TAB> b` with a < b, plus a trailing stats comment."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    coo = graph.adjacency.tocoo()
    edges = sorted(
        (graph.nodes[i], graph.nodes[j])
        for i, j in zip(coo.row, coo.col) if i < j
    )
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for a, b in edges:
            f.write(f"{a}\t{b}\n")
        stats = (f"# n_nodes={graph.n_nodes}\tn_edges={graph.n_edges}"
                 f"\tmean_links={graph.mean_links:.6g}")
        if params is not None:
            hi = "inf" if params.max_freq is None else params.max_freq
            stats += (f"\tbeta={params.beta:g}\tband=[{params.min_freq}-{hi}]"
                      f"\tvariant={params.variant}")
        f.write(stats + "\n")
    return path
