"""Seeded generation of artificial corpora.

Documents are independent uniform draws from a fixed lexicon, which
produces a corpus with a flat (degenerate) rank-frequency profile and
essentially no rare words, the structural opposite of natural text.
Every document derives its own RNG from (seed, doc index), so generation
is reproducible word-for-word and could be parallelized without changing
the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .data import load_wordlist
from .ingest import Corpus, Document

__all__ = ["GeneratorSpec", "gen_uniform_corpus"]

_LEXICON_STREAM = 1  # RNG substream ids under the master seed
_DOC_STREAM = 2


@dataclass(frozen=True)
class GeneratorSpec:
    lexicon: Sequence[str] | int
    n_docs: int
    words_per_doc: int
    seed: int = 0

    def __post_init__(self):
        if isinstance(self.lexicon, int):
            if self.lexicon < 1:
                raise ValueError("lexicon size must be >= 1")
        elif len(self.lexicon) == 0:
            raise ValueError("lexicon must be non-empty")
        if self.n_docs < 1 or self.words_per_doc < 1:
            raise ValueError("n_docs and words_per_doc must be >= 1")


def _resolve_lexicon(spec: GeneratorSpec) -> list[str]:
    if not isinstance(spec.lexicon, int):
        return list(spec.lexicon)
    words = load_wordlist()
    if spec.lexicon > len(words):
        raise ValueError(
            f"requested lexicon of {spec.lexicon} words, bundled list has {len(words)}")
    rng = np.random.default_rng([spec.seed, _LEXICON_STREAM])
    idx = rng.choice(len(words), size=spec.lexicon, replace=False)
    return [words[i] for i in sorted(idx)]


def gen_uniform_corpus(spec: GeneratorSpec, name: str = "uniform") -> Corpus:
    """Generate `n_docs` documents of `words_per_doc` uniform draws each."""
    lexicon = _resolve_lexicon(spec)
    width = len(str(spec.n_docs))
    docs = []
    for i in range(spec.n_docs):
        rng = np.random.default_rng([spec.seed, _DOC_STREAM, i])
        draws = rng.integers(0, len(lexicon), size=spec.words_per_doc)
        text = " ".join(lexicon[j] for j in draws)
        docs.append(Document(f"doc_{i:0{width}d}", text))
    return Corpus(name, "en", docs)
