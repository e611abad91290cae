"""Seeded force-directed 2-D layout and SVG emission.

Classic spring-embedder forces: adjacent vertices attract with d^2/k,
all vertex pairs repel with k^2/d, where k = sqrt(area / n) is the ideal
pairwise distance. Displacement per iteration is capped by a linearly
cooling temperature. The force loop is single-threaded and fully seeded,
so a given (graph, seed, iterations) triple always produces bit-identical
coordinates and therefore bit-identical SVG output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy import sparse

from .neighbors import CooccurrenceGraph

__all__ = [
    "Layout2D",
    "HighlightSet",
    "fruchterman_reingold",
    "layout_energy",
    "emit_svg",
    "write_coords_tsv",
    "read_highlights",
]

_GRID_THRESHOLD = 5000  # exact O(n^2) repulsion up to here, grid beyond


@dataclass
class Layout2D:
    nodes: list[str]
    coords: np.ndarray  # (n, 2), normalized into the unit frame
    seed: int
    iterations: int
    initial_temperature: float

    def as_dict(self) -> dict[str, tuple[float, float]]:
        return {n: (float(x), float(y)) for n, (x, y) in zip(self.nodes, self.coords)}


@dataclass
class HighlightSet:
    terms: set[str] = field(default_factory=set)
    color_tag: str = "highlight"


def _forces(pos: np.ndarray, adj_dense: np.ndarray, k: float) -> np.ndarray:
    """Net force on every node (exact all-pairs repulsion).

    Repulsion k^2/d and attraction d^2/k both act along the pair
    direction, so one signed coefficient per pair suffices:
    coef = k^2/d^2 - a_ij * d/k, force_i = sum_j coef_ij * delta_ij.
    """
    n = pos.shape[0]
    delta = pos[:, None, :] - pos[None, :, :]
    dist2 = np.einsum("ijk,ijk->ij", delta, delta)
    np.fill_diagonal(dist2, 1.0)
    np.maximum(dist2, 1e-18, out=dist2)
    coef = (k * k) / dist2
    if adj_dense is not None:
        coef -= adj_dense * (np.sqrt(dist2) / k)
    np.fill_diagonal(coef, 0.0)
    return np.einsum("ij,ijk->ik", coef, delta)


def _forces_grid(pos: np.ndarray, adj: sparse.csr_matrix, k: float) -> np.ndarray:
    """Grid-approximated repulsion (cell size k, neighbouring cells only)."""
    n = pos.shape[0]
    disp = np.zeros_like(pos)
    cells: dict[tuple[int, int], list[int]] = {}
    keys = np.floor(pos / k).astype(np.int64)
    for i, key in enumerate(map(tuple, keys)):
        cells.setdefault(key, []).append(i)
    for (cx, cy), members in cells.items():
        neigh = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                neigh.extend(cells.get((cx + dx, cy + dy), ()))
        mem = np.array(members)
        oth = np.array(neigh)
        delta = pos[mem][:, None, :] - pos[oth][None, :, :]
        dist = np.sqrt((delta ** 2).sum(-1))
        same = mem[:, None] == oth[None, :]
        dist[same] = 1.0
        dist = np.maximum(dist, 1e-9)
        rep = (k * k / dist)[:, :, None] * (delta / dist[:, :, None])
        rep[same] = 0.0
        disp[mem] += rep.sum(axis=1)
    coo = adj.tocoo()
    delta = pos[coo.row] - pos[coo.col]
    dist = np.maximum(np.sqrt((delta ** 2).sum(-1)), 1e-9)
    pull = (dist / k)[:, None] * delta
    np.add.at(disp, coo.row, -pull)
    return disp


def fruchterman_reingold(graph: CooccurrenceGraph, seed: int = 0,
                         iterations: int = 500,
                         initial_temperature: float | None = None) -> Layout2D:
    """Deterministic seeded layout of the co-occurrence graph."""
    n = graph.n_nodes
    if n == 0:
        raise ValueError("cannot lay out an empty graph")
    rng = np.random.default_rng(seed)
    pos = rng.random((n, 2))
    if n == 1:
        return Layout2D(list(graph.nodes), np.array([[0.5, 0.5]]), seed,
                        iterations, 0.0)
    k = np.sqrt(1.0 / n)
    temp = 0.1 if initial_temperature is None else initial_temperature
    dt = temp / (iterations + 1)
    if n <= _GRID_THRESHOLD:
        adj_dense = graph.adjacency.toarray().astype(np.float64)
        force_fn = lambda p: _forces(p, adj_dense, k)
    else:
        adj_csr = graph.adjacency.tocsr()
        force_fn = lambda p: _forces_grid(p, adj_csr, k)
    for _ in range(iterations):
        disp = force_fn(pos)
        length = np.maximum(np.sqrt((disp ** 2).sum(-1)), 1e-12)
        pos += disp / length[:, None] * np.minimum(length, temp)[:, None]
        temp -= dt
    # normalize into the unit frame, preserving aspect ratio
    span = pos.max(axis=0) - pos.min(axis=0)
    scale = float(span.max())
    if scale <= 0:
        scale = 1.0
    pos = (pos - pos.min(axis=0)) / scale
    return Layout2D(list(graph.nodes), pos, seed, iterations,
                    0.1 if initial_temperature is None else initial_temperature)


def layout_energy(graph: CooccurrenceGraph, pos: np.ndarray) -> float:
    """Sum of squared net-force magnitudes; settles toward zero as the
    layout converges."""
    k = np.sqrt(1.0 / max(graph.n_nodes, 1))
    disp = _forces(pos, graph.adjacency.toarray().astype(np.float64), k)
    return float((disp ** 2).sum())


def fr_energy_trace(graph: CooccurrenceGraph, seed: int, iterations: int,
                    sample_at: tuple[int, ...]) -> dict[int, float]:
    """Energies at selected iteration numbers of one layout run."""
    n = graph.n_nodes
    rng = np.random.default_rng(seed)
    pos = rng.random((n, 2))
    k = np.sqrt(1.0 / n)
    temp = 0.1
    dt = temp / (iterations + 1)
    adj_dense = graph.adjacency.toarray().astype(np.float64)
    out: dict[int, float] = {}
    for it in range(1, iterations + 1):
        disp = _forces(pos, adj_dense, k)
        if it in sample_at:
            out[it] = float((disp ** 2).sum())
        length = np.maximum(np.sqrt((disp ** 2).sum(-1)), 1e-12)
        pos += disp / length[:, None] * np.minimum(length, temp)[:, None]
        temp -= dt
    return out


def emit_svg(layout: Layout2D, highlights: HighlightSet | None = None,
             graph: CooccurrenceGraph | None = None,
             caption: str | None = None,
             width: int = 800, height: int = 800) -> str:
    """Render the layout as an SVG document string.

    One circle per node; highlighted terms are drawn in red. When a graph
    is supplied its links are drawn underneath the nodes. The caption is
    printed verbatim in the top-left corner.
    """
    hl = highlights.terms if highlights is not None else set()
    margin = 30
    sx = lambda x: margin + x * (width - 2 * margin)
    sy = lambda y: margin + y * (height - 2 * margin)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if graph is not None:
        index = {n: i for i, n in enumerate(layout.nodes)}
        coo = graph.adjacency.tocoo()
        for i, j in zip(coo.row, coo.col):
            if i < j:
                a, b = graph.nodes[i], graph.nodes[j]
                if a in index and b in index:
                    x1, y1 = layout.coords[index[a]]
                    x2, y2 = layout.coords[index[b]]
                    parts.append(
                        f'<line x1="{sx(x1):.2f}" y1="{sy(y1):.2f}" '
                        f'x2="{sx(x2):.2f}" y2="{sy(y2):.2f}" '
                        f'stroke="#bbbbbb" stroke-width="0.5"/>')
    for name, (x, y) in zip(layout.nodes, layout.coords):
        color = "red" if name in hl else "black"
        parts.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2.5" '
                     f'fill="{color}"/>')
    if caption:
        parts.append(f'<text x="{margin}" y="20" font-family="monospace" '
                     f'font-size="13">{caption}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def graph_caption(beta: float, min_freq: int, max_freq: int | None,
                  n_nodes: int, mean_links: float | None = None) -> str:
    """Caption text matching the display convention `beta=.. range=[..-..] N=..`."""
    hi = "inf" if max_freq is None else f"{max_freq}"
    text = f"beta={beta:g} range=[{min_freq}-{hi}] N={n_nodes}"
    if mean_links is not None:
        text += f" neighbours={mean_links:g}"
    return text


def write_coords_tsv(layout: Layout2D, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for name, (x, y) in zip(layout.nodes, layout.coords):
            f.write(f"{name}\t{x:.6f}\t{y:.6f}\n")
    return path


def read_highlights(path: str | Path, color_tag: str = "highlight") -> HighlightSet:
    """Highlight file format: one term per line, blanks ignored."""
    terms = {
        line.strip()
        for line in Path(path).read_text(encoding="utf-8").splitlines()
        if line.strip()
    }
    return HighlightSet(terms, color_tag)
