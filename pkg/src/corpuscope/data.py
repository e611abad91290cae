"""Bundled datasets: a public-domain novel, the Fisher iris measurements
and a large English wordlist.

The novel (Moby-Dick, split into passages of about 180 running words,
one passage per document) serves as the natural reference corpus. The iris table ships as raw centimetre measurements;
`iris_matrix` optionally rescales them (each feature divided by its
column mean, each sample row scaled to unit length), which puts the four
features on a comparable footing so that the neighbour reduction can
threshold sample-to-sample similarities meaningfully.
"""

from __future__ import annotations

import csv
import gzip
import json
from functools import lru_cache
from importlib import resources

import numpy as np
from scipy import sparse

from .ingest import Corpus, Document, TermDocumentMatrix

__all__ = [
    "natural_corpus",
    "load_wordlist",
    "iris_table",
    "iris_matrix",
    "iris_species",
]

_FEATURES = ["sepal_length", "sepal_width", "petal_length", "petal_width"]


def _data_path(name: str):
    return resources.files("corpuscope").joinpath("data", name)


def natural_corpus() -> Corpus:
    """The bundled novel as a corpus of short passage documents."""
    docs = []
    with _data_path("moby_dick.jsonl.gz").open("rb") as raw:
        with gzip.open(raw, "rt", encoding="utf-8") as f:
            for line in f:
                rec = json.loads(line)
                docs.append(Document(rec["id"], rec["text"]))
    return Corpus("moby-dick", "en", docs)


@lru_cache(maxsize=1)
def load_wordlist() -> tuple[str, ...]:
    """Bundled lowercase English words, three letters or more, no stopwords."""
    with _data_path("wordlist.txt.gz").open("rb") as raw:
        with gzip.open(raw, "rt", encoding="utf-8") as f:
            return tuple(f.read().split())


def iris_table() -> tuple[list[str], list[str], np.ndarray, list[str]]:
    """(sample ids, feature names, 150x4 measurements, species labels)."""
    ids: list[str] = []
    rows: list[list[float]] = []
    species: list[str] = []
    with _data_path("iris.csv").open("r", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        for rec in reader:
            ids.append(rec["sample_id"])
            rows.append([float(rec[c]) for c in _FEATURES])
            species.append(rec["species"])
    return ids, list(_FEATURES), np.array(rows), species


def iris_species() -> dict[str, str]:
    ids, _, _, species = iris_table()
    return dict(zip(ids, species))


def iris_matrix(scaled: bool = True) -> TermDocumentMatrix:
    """The iris samples as a 150x4 matrix ready for the neighbour pipeline.

    Rows are the samples (the items to cluster), columns the four
    measurements. With `scaled` (the validated setting) each feature is
    divided by its column mean and each row by its Euclidean norm; with
    `scaled=False` raw centimetres are used.
    """
    ids, features, values, _ = iris_table()
    if scaled:
        values = values / values.mean(axis=0)
        values = values / np.linalg.norm(values, axis=1, keepdims=True)
    return TermDocumentMatrix(
        terms=ids,
        doc_ids=features,
        counts=sparse.csr_matrix(values),
    )
