"""Command-line frontend wiring the analysis modules into subcommands.

All tabular output is TSV (UTF-8, LF); graphics are SVG. Randomness flows
from a single --seed flag, with the CT_SEED environment variable as
fallback. Usage errors exit with status 2 (argparse), data errors with 1.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np
from .antonyms import compile_patterns, extract_candidates, write_candidates_tsv
from .ingest import (
    NormalizationRules,
    build_matrix,
    load_corpus,
    write_corpus,
    write_matrix_tsv,
)
from .layout import (
    HighlightSet,
    Layout2D,
    emit_svg,
    fruchterman_reingold,
    graph_caption,
    read_highlights,
    write_coords_tsv,
)
from .neighbors import (
    EmptyBandError,
    EmptyGraphError,
    ReductionParams,
    knn_graph,
    write_edges_tsv,
)
from .ranges import equipartition, partition_invariant, write_partition_tsv
from .stats import (
    corpus_summary,
    hapax_fraction,
    occurrence_histogram,
    term_frequencies,
    write_frequencies_tsv,
    write_summary_tsv,
    write_zipf_svg,
    write_zipf_tsv,
    zipf_profile,
)
from .syngen import GeneratorSpec, gen_uniform_corpus


def _default_seed() -> int:
    return int(os.environ.get("CT_SEED", "0"))


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("corpus", help="corpus path (directory of .txt or a .jsonl file)")
    p.add_argument("--format", choices=["txt-dir", "jsonl"], default=None,
                   help="input format (default: guessed from the path)")
    p.add_argument("--lang", choices=["en", "fr"], default="en")
    p.add_argument("--stem", action="store_true", help="stem tokens")
    p.add_argument("--no-stopwords", action="store_true",
                   help="keep stopwords during normalization")


def _add_knn_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min", type=int, default=2, help="minimum frequency")
    p.add_argument("--max", type=int, default=20, help="maximum frequency")
    p.add_argument("--beta", type=float, default=5.0, help="reduction scaling factor")
    p.add_argument("--binary", type=int, choices=[0, 1], default=1,
                   help="1: subtraction branch (default; sparse, display-like), "
                        "0: window branch (keeps weak associations)")
    p.add_argument("--variant", choices=["fr", "drl"], default="fr")
    p.add_argument("--symmetrize", choices=["or", "and"], default="or")
    p.add_argument("--min-degree", type=int, default=0,
                   help="display filter: drop nodes below this degree")


def _guess_format(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    p = Path(path)
    if p.is_dir():
        return "txt-dir"
    return "jsonl"


def _load(args) -> "Corpus":
    fmt = _guess_format(args.corpus, args.format)
    return load_corpus(args.corpus, fmt, language=args.lang)


def _rules(args) -> NormalizationRules:
    return NormalizationRules(
        stopword_removal=not args.no_stopwords,
        stemming=getattr(args, "stem", False),
    )


def _params(args) -> ReductionParams:
    return ReductionParams(
        beta=args.beta,
        min_freq=args.min,
        max_freq=args.max,
        binary_flag=args.binary,
        variant=args.variant,
        symmetrize=args.symmetrize,
        min_degree=args.min_degree,
    )


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_ingest(args) -> int:
    corpus = _load(args)
    tdm = build_matrix(corpus, _rules(args))
    out = _out_dir(args)
    path = write_matrix_tsv(tdm, out / "matrix.tsv")
    print(f"{len(corpus.documents)} documents, {len(tdm.terms)} terms -> {path}")
    return 0


def cmd_stats(args) -> int:
    corpus = _load(args)
    rules = _rules(args)
    tdm = build_matrix(corpus, rules)
    freqs = term_frequencies(tdm)
    out = _out_dir(args)
    write_frequencies_tsv(freqs, out / "frequencies.tsv")
    summary = corpus_summary(corpus, rules)
    write_summary_tsv(corpus.name, summary, out / "summary.tsv")
    if args.range:
        lo, hi = _parse_range(args.range)
        hist = occurrence_histogram(freqs, lo, hi)
        with open(out / "histogram.tsv", "w", encoding="utf-8", newline="\n") as f:
            for k, n in hist:
                f.write(f"{k}\t{n}\n")
    if args.sf:
        from .stats import frequent_items

        items = frequent_items(tdm, args.sf)
        with open(out / "frequent_items.tsv", "w", encoding="utf-8", newline="\n") as f:
            for term, freq in items:
                f.write(f"{term}\t{freq}\n")
    print(f"hapax_fraction={hapax_fraction(freqs):.4f} "
          f"n_terms={len(freqs)} total={sum(freqs.values())}")
    return 0


def cmd_zipf(args) -> int:
    corpus = _load(args)
    tdm = build_matrix(corpus, _rules(args))
    profile = zipf_profile(term_frequencies(tdm), max_rank=args.max_rank)
    out = _out_dir(args)
    write_zipf_tsv(profile, out / "zipf.tsv")
    write_zipf_svg(profile, out / "zipf.svg")
    print(f"slope={profile.slope:.4f} r2={profile.r2:.4f} "
          f"classification={profile.classification}")
    return 0


def cmd_ranges(args) -> int:
    corpus = _load(args)
    tdm = build_matrix(corpus, _rules(args))
    freqs = term_frequencies(tdm)
    first = _parse_range(args.first or args.range or "2:5")
    second = _parse_range(args.second) if args.second else (first[1] + 1, 2 * first[1] + 2)
    partition = equipartition(freqs, first, second)
    out = _out_dir(args)
    write_partition_tsv(partition, out / "ranges.tsv")
    product, total, rel = partition_invariant(partition)
    print(f"k={partition.k} n_c={partition.n_c:.6g} total={total} rel_error={rel:.3g}")
    return 0


def cmd_knn(args) -> int:
    corpus = _load(args)
    tdm = build_matrix(corpus, _rules(args))
    graph = knn_graph(tdm, _params(args))
    out = _out_dir(args)
    write_edges_tsv(graph, out / "edges.tsv", _params(args))
    print(f"n_nodes={graph.n_nodes} n_edges={graph.n_edges} "
          f"mean_links={graph.mean_links:.4f}")
    return 0


def cmd_layout(args) -> int:
    corpus = _load(args)
    tdm = build_matrix(corpus, _rules(args))
    params = _params(args)
    graph = knn_graph(tdm, params)
    layout = fruchterman_reingold(graph, seed=args.seed, iterations=args.iterations)
    highlights = read_highlights(args.highlight) if args.highlight else HighlightSet()
    caption = graph_caption(params.beta, params.min_freq, params.max_freq,
                            graph.n_nodes, graph.mean_links)
    out = _out_dir(args)
    write_coords_tsv(layout, out / "layout.tsv")
    svg = emit_svg(layout, highlights, graph=graph, caption=caption)
    (out / "graph.svg").write_text(svg, encoding="utf-8", newline="\n")
    print(f"n_nodes={graph.n_nodes} n_edges={graph.n_edges} -> {out / 'graph.svg'}")
    return 0


def cmd_antonyms(args) -> int:
    corpus = _load(args)
    patterns = compile_patterns(args.lang)
    candidates = extract_candidates(corpus, patterns)
    out = _out_dir(args)
    path = write_candidates_tsv(candidates, out / "antonyms.tsv")
    print(f"{len(candidates)} candidate pairs -> {path}")
    return 0


def cmd_gen(args) -> int:
    spec = GeneratorSpec(
        lexicon=args.lexicon_size,
        n_docs=args.docs,
        words_per_doc=args.words,
        seed=args.seed,
    )
    corpus = gen_uniform_corpus(spec, name=f"uniform-{args.lexicon_size}")
    out = Path(args.out)
    if args.format == "txt-dir":
        write_corpus(corpus, out, "txt-dir")
    else:
        out = out if out.suffix else out / "corpus.jsonl"
        write_corpus(corpus, out, "jsonl")
    print(f"{args.docs} documents x {args.words} words -> {out}")
    return 0


def _analyze_for_compare(corpus, rules, params, seed, iterations):
    tdm = build_matrix(corpus, rules)
    freqs = term_frequencies(tdm)
    profile = zipf_profile(freqs)
    summary = corpus_summary(corpus, rules)
    row = {
        "n_documents": summary.n_documents,
        "n_words": summary.unstemmed.n_words,
        "n_words_freq_gt1": summary.unstemmed.n_words_freq_gt1,
        "n_words_freq_eq2": summary.unstemmed.n_words_freq_eq2,
        "n_words_freq_eq3": summary.unstemmed.n_words_freq_eq3,
        "n_stemmed": summary.stemmed.n_words,
        "hapax_fraction": f"{hapax_fraction(freqs):.4f}",
        "zipf_slope": f"{profile.slope:.4f}",
        "zipf_r2": f"{profile.r2:.4f}",
        "zipf_class": profile.classification,
    }
    try:
        partition = equipartition(freqs, (2, 5), (6, 12))
        row["ranges_k"] = partition.k
        row["ranges_n_c"] = f"{partition.n_c:.6g}"
    except ValueError:
        row["ranges_k"] = "n/a"
        row["ranges_n_c"] = "n/a"
    graph = None
    try:
        graph = knn_graph(tdm, params)
        row["graph_nodes"] = graph.n_nodes
        row["graph_edges"] = graph.n_edges
        row["graph_mean_links"] = f"{graph.mean_links:.4f}"
    except (EmptyBandError, EmptyGraphError) as exc:
        row["graph_nodes"] = 0
        row["graph_edges"] = 0
        row["graph_mean_links"] = "n/a"
        row["graph_note"] = str(exc)
    svg_layout = None
    if graph is not None:
        layout = fruchterman_reingold(graph, seed=seed, iterations=iterations)
        caption = graph_caption(params.beta, params.min_freq, params.max_freq,
                                graph.n_nodes, graph.mean_links)
        svg_layout = emit_svg(layout, graph=graph, caption=caption)
    else:
        caption = graph_caption(params.beta, params.min_freq, params.max_freq, 0, None)
        empty = Layout2D([], np.zeros((0, 2)), seed, iterations, 0.1)
        svg_layout = emit_svg(empty, caption=caption + " (empty graph)")
    return row, svg_layout


def cmd_compare(args) -> int:
    rules = NormalizationRules(stopword_removal=not args.no_stopwords,
                               stemming=args.stem)
    params = _params(args)
    fmt_a = _guess_format(args.corpus_a, args.format)
    fmt_b = _guess_format(args.corpus_b, args.format)
    corpus_a = load_corpus(args.corpus_a, fmt_a, language=args.lang)
    corpus_b = load_corpus(args.corpus_b, fmt_b, language=args.lang)
    row_a, svg_a = _analyze_for_compare(corpus_a, rules, params, args.seed,
                                        args.iterations)
    row_b, svg_b = _analyze_for_compare(corpus_b, rules, params, args.seed,
                                        args.iterations)

    out = _out_dir(args)
    name_b = corpus_b.name if corpus_b.name != corpus_a.name else f"{corpus_b.name}_b"
    (out / f"{corpus_a.name}.svg").write_text(svg_a, encoding="utf-8")
    (out / f"{name_b}.svg").write_text(svg_b, encoding="utf-8")

    keys = sorted(set(row_a) | set(row_b))
    verdict = []
    if row_a["zipf_class"] != row_b["zipf_class"]:
        verdict.append(
            f"rank-frequency profiles differ: {corpus_a.name}={row_a['zipf_class']}, "
            f"{corpus_b.name}={row_b['zipf_class']}")
    else:
        verdict.append(f"rank-frequency profiles agree: both {row_a['zipf_class']}")
    ha, hb = float(row_a["hapax_fraction"]), float(row_b["hapax_fraction"])
    verdict.append(f"hapax fractions: {corpus_a.name}={ha:.3f}, {corpus_b.name}={hb:.3f}")
    na, nb = row_a["graph_nodes"], row_b["graph_nodes"]
    verdict.append(f"neighbour graphs at shared parameters: "
                   f"{corpus_a.name}={na} nodes, {corpus_b.name}={nb} nodes")

    report = out / "compare.tsv"
    with open(report, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"metric\t{corpus_a.name}\t{corpus_b.name}\n")
        for key in keys:
            f.write(f"{key}\t{row_a.get(key, '')}\t{row_b.get(key, '')}\n")
        for note in verdict:
            f.write(f"# {note}\n")
    for note in verdict:
        print(note)
    print(f"report -> {report}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corpuscope",
        description="corpus fingerprinting: frequency statistics, "
                    "rank-frequency profiles, neighbour graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_seed(p):
        p.add_argument("--seed", type=int, default=_default_seed(),
                       help="master seed (falls back to CT_SEED)")

    p = sub.add_parser("ingest", help="build and dump the term-document matrix")
    _add_corpus_args(p)
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("stats", help="frequency table, summary, histogram")
    _add_corpus_args(p)
    p.add_argument("--range", default=None, metavar="LO:HI",
                   help="occurrence histogram range")
    p.add_argument("--sf", type=int, default=None,
                   help="frequent-item threshold")
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("zipf", help="rank-frequency profile and classification")
    _add_corpus_args(p)
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_zipf)

    p = sub.add_parser("ranges", help="equal-context partition of the frequency axis")
    _add_corpus_args(p)
    p.add_argument("--first", default=None, metavar="LO:HI",
                   help="first seed range (must start at 2)")
    p.add_argument("--second", default=None, metavar="LO:HI",
                   help="second seed range (contiguous with the first)")
    p.add_argument("--range", default=None, metavar="LO:HI",
                   help="alias for --first")
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_ranges)

    p = sub.add_parser("knn", help="reduced co-occurrence neighbour graph")
    _add_corpus_args(p)
    _add_knn_args(p)
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_knn)

    p = sub.add_parser("layout", help="seeded 2-D layout of the neighbour graph")
    _add_corpus_args(p)
    _add_knn_args(p)
    add_seed(p)
    p.add_argument("--iterations", type=int, default=500)
    p.add_argument("--highlight", default=None, metavar="FILE",
                   help="newline-separated terms to colour red")
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_layout)

    p = sub.add_parser("antonyms", help="antonym candidate pairs from scheme matching")
    _add_corpus_args(p)
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_antonyms)

    p = sub.add_parser("gen", help="generate a uniform random corpus")
    add_seed(p)
    p.add_argument("--lexicon-size", type=int, default=1000)
    p.add_argument("--docs", type=int, default=6000)
    p.add_argument("--words", type=int, default=150)
    p.add_argument("--format", choices=["txt-dir", "jsonl"], default="jsonl")
    p.add_argument("--out", default="out/uniform")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("compare", help="side-by-side structural comparison")
    p.add_argument("corpus_a")
    p.add_argument("corpus_b")
    p.add_argument("--format", choices=["txt-dir", "jsonl"], default=None)
    p.add_argument("--lang", choices=["en", "fr"], default="en")
    p.add_argument("--stem", action="store_true")
    p.add_argument("--no-stopwords", action="store_true")
    _add_knn_args(p)
    add_seed(p)
    p.add_argument("--iterations", type=int, default=500)
    p.add_argument("--out", default="out")
    p.set_defaults(fn=cmd_compare)

    return parser


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from exc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
