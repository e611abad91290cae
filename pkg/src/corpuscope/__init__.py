"""corpuscope: structural fingerprinting of text corpora.

Pipeline: load and normalize a corpus, build its term-document matrix,
profile term frequencies against the rank-frequency law, partition the
frequency axis into equal-context ranges, reduce the co-occurrence
matrix into a nearest-neighbour graph, and render a seeded 2-D layout.
Synthetic uniform corpora and antonym-scheme mining round out the
comparison toolkit.
"""

from .ingest import (
    Corpus,
    Document,
    NormalizationRules,
    TermDocumentMatrix,
    build_matrix,
    load_corpus,
    normalize,
    normalize_corpus,
    write_corpus,
    write_matrix_tsv,
)
from .porter import stem
from .stats import (
    CorpusSummary,
    ZipfProfile,
    corpus_summary,
    frequent_items,
    hapax_fraction,
    occurrence_histogram,
    term_frequencies,
    zipf_profile,
)
from .ranges import (
    RangePartition,
    context_count,
    equipartition,
    partition_invariant,
)
from .neighbors import (
    CooccurrenceGraph,
    EmptyBandError,
    EmptyGraphError,
    ReductionParams,
    band_filter,
    cooccurrence,
    knn_graph,
    mean_vector,
    reduce_graph,
)
from .layout import (
    HighlightSet,
    Layout2D,
    emit_svg,
    fruchterman_reingold,
    graph_caption,
)
from .antonyms import (
    AntonymCandidate,
    AntonymPattern,
    compile_patterns,
    extract_candidates,
    rank_candidates,
)
from .syngen import GeneratorSpec, gen_uniform_corpus
from . import data

__version__ = "0.1.0"
