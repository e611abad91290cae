"""Descriptive statistics of the bundled novel.

Walks the basic pipeline: load, normalize, build the term-document
matrix, then read off the frequency table, the distinct-word summary,
frequent-item lists at increasing thresholds and the hapax share.
"""

from pathlib import Path

from corpuscope import data
from corpuscope.ingest import NormalizationRules, build_matrix
from corpuscope.stats import (
    corpus_summary,
    frequent_items,
    hapax_fraction,
    occurrence_histogram,
    term_frequencies,
    write_frequencies_tsv,
    write_summary_tsv,
)

OUT = Path(__file__).parent / "out"


def main():
    corpus = data.natural_corpus()
    raw_tokens = sum(len(d.raw_text.split()) for d in corpus.documents)
    print(f"corpus: {corpus.name}, {len(corpus.documents)} documents, "
          f"{raw_tokens:,} running words")

    tdm = build_matrix(corpus, NormalizationRules())
    freqs = term_frequencies(tdm)
    print(f"after normalization: {tdm.grand_total():,} tokens, "
          f"{len(freqs):,} distinct terms")

    summary = corpus_summary(corpus)
    u, s = summary.unstemmed, summary.stemmed
    print("\ndistinct-word counts (raw | stemmed):")
    print(f"  words          {u.n_words:>7,} | {s.n_words:>7,}")
    print(f"  frequency > 1  {u.n_words_freq_gt1:>7,} | {s.n_words_freq_gt1:>7,}")
    print(f"  frequency = 2  {u.n_words_freq_eq2:>7,} | {s.n_words_freq_eq2:>7,}")
    print(f"  frequency = 3  {u.n_words_freq_eq3:>7,} | {s.n_words_freq_eq3:>7,}")

    print(f"\nhapax share: {hapax_fraction(freqs):.1%} of distinct terms "
          "occur exactly once")

    print("\nnumber of frequent terms by threshold:")
    for s_f in (2, 100, 1000):
        items = frequent_items(tdm, s_f)
        head = ", ".join(f"{t}:{f}" for t, f in items[:6])
        print(f"  s_f={s_f:>4}: {len(items):>6,} terms   {head}")

    print("\nterms by occurrence count (1..10):")
    for k, n in occurrence_histogram(freqs, 1, 10):
        print(f"  {k:>2} occurrence(s): {n:>6,} terms")

    write_frequencies_tsv(freqs, OUT / "novel_frequencies.tsv")
    write_summary_tsv(corpus.name, summary, OUT / "novel_summary.tsv")
    print(f"\nwrote {OUT / 'novel_frequencies.tsv'} and {OUT / 'novel_summary.tsv'}")


if __name__ == "__main__":
    main()
