"""Antonym-candidate mining with token-template schemes.

Templates such as "neither X nor Y" or "from X to Y" capture pairs of
content words used in contrastive constructions. Pairs matched by
several different schemes are the strongest candidates.
"""

from pathlib import Path

from corpuscope import data
from corpuscope.antonyms import (
    compile_patterns,
    extract_candidates,
    rank_candidates,
    write_candidates_tsv,
)
from corpuscope.ingest import Corpus, Document

OUT = Path(__file__).parent / "out"


def main():
    en = compile_patterns("en")
    fr = compile_patterns("fr")
    print(f"{len(en)} English schemes, {len(fr)} French schemes, e.g.:")
    for p in en[:5]:
        print(f"  {p.id:<28} template {' '.join(p.template)}")

    print("\nmini fixture:")
    fixture = Corpus("fixture", "en", [
        Document("f1", "Both hot and cold currents meet here."),
        Document("f2", "The crew judged it neither black nor white."),
    ])
    for c in extract_candidates(fixture, en):
        print(f"  ({c.x}, {c.y}) via {', '.join(c.pattern_ids)}")

    print("\nmining the bundled novel:")
    corpus = data.natural_corpus()
    candidates = rank_candidates(extract_candidates(corpus, en))
    print(f"  {len(candidates)} candidate pairs; top 15 by scheme diversity:")
    for c in candidates[:15]:
        print(f"  {c.x:<12} {c.y:<12} schemes={c.distinct_patterns} "
              f"count={c.count}")
    path = write_candidates_tsv(candidates, OUT / "novel_antonyms.tsv")
    print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
