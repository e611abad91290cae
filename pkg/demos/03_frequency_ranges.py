"""Equal-context partitions of the frequency axis.

Each lexical occurrence is a context, so an item of frequency f carries
f contexts. Seeded by its first two ranges, the partition cuts the rest
of the frequency axis greedily into ranges of similar context mass; the
number of ranges k then trades off exactly against the average context
mass per range (k * n_c recovers the corpus total).
"""

from pathlib import Path

from corpuscope import data
from corpuscope.ingest import NormalizationRules, build_matrix
from corpuscope.ranges import equipartition, partition_invariant, write_partition_tsv
from corpuscope.stats import term_frequencies

OUT = Path(__file__).parent / "out"

SEED_SERIES = [
    ((2, 2), (3, 3)),
    ((2, 3), (4, 6)),
    ((2, 5), (6, 12)),
    ((2, 9), (10, 25)),
    ((2, 20), (21, 65)),
]


def main():
    corpus = data.natural_corpus()
    freqs = term_frequencies(build_matrix(corpus, NormalizationRules()))
    print(f"{corpus.name}: {len(freqs):,} distinct terms")
    print("\nseed ranges        k    avg contexts   k*n_c == total")
    for first, second in SEED_SERIES:
        p = equipartition(freqs, first, second)
        product, total, rel = partition_invariant(p)
        print(f"  {str(first):<8}{str(second):<10}{p.k:>3}    "
              f"{p.n_c:>12,.1f}   {product:,.0f} == {total:,} "
              f"(rel err {rel:g})")

    p = equipartition(freqs, (2, 5), (6, 12))
    path = write_partition_tsv(p, OUT / "novel_ranges.tsv")
    print(f"\nper-range detail for seeds (2,5)/(6,12) -> {path}")
    for (lo, hi), n_items, ctx in list(zip(p.ranges, p.per_range_items,
                                           p.per_range_contexts))[:8]:
        print(f"  [{lo:>3}-{hi:>3}]  {n_items:>6,} items  {ctx:>7,} contexts")
    if p.k > 8:
        print(f"  ... {p.k - 8} more ranges")


if __name__ == "__main__":
    main()
