"""Corpus loading, token normalization and term-document matrix construction.

A corpus is a named, ordered collection of documents in one language.
Normalization lowercases, splits on non-letter characters, drops short
tokens and (optionally) stopwords, and optionally maps tokens to their
Porter roots. The term-document matrix stores raw occurrence counts with
terms sorted lexicographically so every downstream artifact is
deterministic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
from scipy import sparse

from ._stopwords import STOPWORDS
from .porter import stem

__all__ = [
    "Document",
    "Corpus",
    "NormalizationRules",
    "TermDocumentMatrix",
    "load_corpus",
    "normalize",
    "normalize_corpus",
    "build_matrix",
    "write_corpus",
    "write_matrix_tsv",
]


@dataclass
class Document:
    id: str
    raw_text: str
    tokens: list[str] = field(default_factory=list)


@dataclass
class Corpus:
    name: str
    language: str
    documents: list[Document]

    def __len__(self) -> int:
        return len(self.documents)


@dataclass(frozen=True)
class NormalizationRules:
    min_token_length: int = 3
    drop_punctuation: bool = True
    drop_digits: bool = True
    lowercase: bool = True
    stopword_removal: bool = True
    stemming: bool = False

    def __post_init__(self):
        if self.min_token_length < 1:
            raise ValueError("min_token_length must be >= 1")


@dataclass
class TermDocumentMatrix:
    """Sparse occurrence counts; rows are terms, columns are documents."""

    terms: list[str]
    doc_ids: list[str]
    counts: sparse.csr_matrix

    @property
    def shape(self) -> tuple[int, int]:
        return self.counts.shape

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.counts.sum(axis=1)).ravel()

    def grand_total(self) -> int:
        return int(self.counts.sum())


def _token_pattern(rules: NormalizationRules) -> re.Pattern:
    # Letters only by default; keeping digits widens the character class,
    # keeping punctuation falls back to whitespace-delimited chunks.
    if rules.drop_punctuation:
        core = r"[^\W\d_]" if rules.drop_digits else r"[^\W_]"
        return re.compile(core + r"+", re.UNICODE)
    return re.compile(r"\S+", re.UNICODE)


def normalize(doc: Document, rules: NormalizationRules, language: str = "en") -> Document:
    """Return a copy of `doc` with its token sequence filled in.

    Order of appearance is preserved; an empty result is legal.
    """
    text = doc.raw_text
    if rules.lowercase:
        text = text.lower()
    pattern = _token_pattern(rules)
    tokens = pattern.findall(text)
    if not rules.drop_punctuation and rules.drop_digits:
        tokens = [re.sub(r"\d+", "", t) for t in tokens]
    tokens = [t for t in tokens if len(t) >= rules.min_token_length]
    if rules.stopword_removal:
        stop = STOPWORDS.get(language, frozenset())
        tokens = [t for t in tokens if t not in stop]
    if rules.stemming:
        tokens = [stem(t) for t in tokens]
        tokens = [t for t in tokens if len(t) >= rules.min_token_length]
    return replace(doc, tokens=tokens)


def normalize_corpus(corpus: Corpus, rules: NormalizationRules) -> Corpus:
    docs = [normalize(d, rules, corpus.language) for d in corpus.documents]
    return Corpus(corpus.name, corpus.language, docs)


def load_corpus(path: str | Path, format: str = "txt-dir",
                name: str | None = None, language: str = "en") -> Corpus:
    """Load documents from a directory of .txt files or a JSONL file.

    txt-dir: every *.txt file becomes one document, filename stem as id.
    jsonl: one JSON object per line with fields `id` and `text`.
    Duplicate ids and malformed lines are hard errors.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"corpus path does not exist: {path}")
    docs: list[Document] = []
    seen: set[str] = set()
    if format == "txt-dir":
        if not path.is_dir():
            raise NotADirectoryError(f"expected a directory for txt-dir: {path}")
        for p in sorted(path.glob("*.txt")):
            doc_id = p.stem
            if doc_id in seen:
                raise ValueError(f"duplicate document id: {doc_id!r}")
            seen.add(doc_id)
            docs.append(Document(doc_id, p.read_text(encoding="utf-8")))
    elif format == "jsonl":
        opener = _open_maybe_gzip(path)
        with opener as f:
            for lineno, line in enumerate(f, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    doc_id, text = rec["id"], rec["text"]
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise ValueError(f"malformed jsonl at line {lineno}: {exc}") from exc
                if doc_id in seen:
                    raise ValueError(f"duplicate document id: {doc_id!r} (line {lineno})")
                seen.add(doc_id)
                docs.append(Document(doc_id, text))
    else:
        raise ValueError(f"unknown corpus format: {format!r}")
    return Corpus(name or path.stem, language, docs)


def _open_maybe_gzip(path: Path):
    if path.suffix == ".gz":
        import gzip

        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, encoding="utf-8")


def build_matrix(corpus: Corpus, rules: NormalizationRules | None = None) -> TermDocumentMatrix:
    """Count term occurrences per document.

    Documents are normalized here when `rules` is given; otherwise their
    existing token sequences are used. Terms come out sorted
    lexicographically, columns follow document order.
    """
    if not corpus.documents:
        raise ValueError("cannot build a matrix from an empty corpus")
    if rules is not None:
        corpus = normalize_corpus(corpus, rules)
    vocab: dict[str, int] = {}
    rows: list[int] = []
    cols: list[int] = []
    for j, doc in enumerate(corpus.documents):
        for tok in doc.tokens:
            idx = vocab.setdefault(tok, len(vocab))
            rows.append(idx)
            cols.append(j)
    if not rows:
        raise ValueError("corpus has zero tokens after normalization")
    terms = sorted(vocab)
    remap = np.empty(len(vocab), dtype=np.int64)
    for new_i, t in enumerate(terms):
        remap[vocab[t]] = new_i
    data = np.ones(len(rows), dtype=np.int64)
    counts = sparse.coo_matrix(
        (data, (remap[np.array(rows)], np.array(cols))),
        shape=(len(terms), len(corpus.documents)),
    ).tocsr()
    counts.sum_duplicates()
    doc_ids = [d.id for d in corpus.documents]
    return TermDocumentMatrix(terms, doc_ids, counts)


def write_corpus(corpus: Corpus, path: str | Path, format: str = "jsonl") -> Path:
    """Write raw texts back to disk in one of the loadable formats."""
    path = Path(path)
    if format == "txt-dir":
        path.mkdir(parents=True, exist_ok=True)
        for doc in corpus.documents:
            (path / f"{doc.id}.txt").write_text(doc.raw_text, encoding="utf-8")
        return path
    if format == "jsonl":
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            for doc in corpus.documents:
                f.write(json.dumps({"id": doc.id, "text": doc.raw_text},
                                   ensure_ascii=False) + "\n")
        return path
    raise ValueError(f"unknown corpus format: {format!r}")


def write_matrix_tsv(tdm: TermDocumentMatrix, path: str | Path) -> Path:
    """Dump the matrix as `term <TAB> doc_id <TAB> count` triples, sorted."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    coo = tdm.counts.tocoo()
    triples = sorted(
        (tdm.terms[i], tdm.doc_ids[j], int(v))
        for i, j, v in zip(coo.row, coo.col, coo.data)
    )
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for term, doc_id, count in triples:
            f.write(f"{term}\t{doc_id}\t{count}\n")
    return path


def total_token_count(corpus: Corpus) -> int:
    return sum(len(d.tokens) for d in corpus.documents)
