"""End-to-end structural comparison of a natural and an artificial corpus.

Runs the compare subcommand exactly as the CLI would: shared band and
beta for both corpora, a TSV report of summary counts, rank-frequency
fit, range partition and neighbour-graph statistics, plus one display
per corpus.
"""

import tempfile
from pathlib import Path

from corpuscope import data
from corpuscope.cli import main as cli_main
from corpuscope.ingest import write_corpus
from corpuscope.syngen import GeneratorSpec, gen_uniform_corpus

OUT = Path(__file__).parent / "out" / "compare"


def main():
    with tempfile.TemporaryDirectory() as tmp:
        natural = Path(tmp) / "natural.jsonl"
        uniform = Path(tmp) / "uniform.jsonl"
        write_corpus(data.natural_corpus(), natural, "jsonl")
        write_corpus(
            gen_uniform_corpus(
                GeneratorSpec(lexicon=1000, n_docs=6000, words_per_doc=150, seed=7),
                name="uniform"),
            uniform, "jsonl")
        rc = cli_main([
            "compare", str(natural), str(uniform),
            "--min", "2", "--max", "20", "--beta", "5",
            "--iterations", "200", "--out", str(OUT),
        ])
        print(f"\nexit status {rc}; artifacts in {OUT}:")
        for p in sorted(OUT.iterdir()):
            print(f"  {p.name}")


if __name__ == "__main__":
    main()
