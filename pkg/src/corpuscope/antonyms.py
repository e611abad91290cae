"""Morpho-syntactic antonym-pair extraction.

Each scheme is a short token template with two single-token slots X and Y
("neither X nor Y", "soit X soit Y", ...). Templates are matched inside
sentences against lowercased letter-run tokens; slot fillers must be
content tokens (three letters or more, not stopwords) and a pair is only
a candidate when the two fillers differ. Candidates aggregate over the
unordered pair, counting total matches and distinct matching schemes.

Parenthesized template words are optional; ADJ marks an adjective wild
card recognized by a crude suffix heuristic (no part-of-speech tagging
here, and the heuristic is easy to swap out).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ._stopwords import STOPWORDS
from .ingest import Corpus, Document

__all__ = [
    "AntonymPattern",
    "AntonymCandidate",
    "compile_patterns",
    "extract_candidates",
    "rank_candidates",
    "write_candidates_tsv",
]

X, Y, ADJ = "<X>", "<Y>", "<ADJ>"

_EN_SCHEMES = [
    "(both) X and Y",
    "X as well as Y",
    "X and Y alike",
    "neither X nor Y",
    "(either) X or Y",
    "X rather than Y",
    "whether X or Y",
    "now X , now Y",
    "from X to Y",
    "how X or Y",
    "more X than Y",
    "X is more ADJ than Y",
    "the difference between X and Y",
    "separating X and Y",
    "a gap between X and Y",
    "turning X into Y",
    "X gives way to Y",
    "X not Y",
    "X instead of Y",
    "X as opposed to Y",
    "the very X and the very Y",
    "either too X or too Y",
    "deeply X and deeply Y",
]

_FR_SCHEMES = [
    "X ou Y",
    "soit X soit Y",
    "à la fois X et Y",
    "de X à Y",
    "depuis X jusqu'à Y",
    "depuis X jusqu'aux Y",
    "ni X ni Y",
    "aussi bien X que Y",
    "aussi bien X qu' Y",
    "X comme Y",
    "plus X que Y",
    "moins X que Y",
    "aussi X que Y",
    "entre X et Y",
    "X plutôt que Y",
]

_ADJ_SUFFIXES = ("er", "ous", "ive", "al", "ic", "ful", "less")

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)
_SENTENCE_RE = re.compile(r"[.!?;]+")


@dataclass(frozen=True)
class AntonymPattern:
    id: str
    language: str
    template: tuple[str, ...]          # literals and slot markers
    optional_positions: tuple[int, ...]  # indexes of optional literals

    def variants(self) -> list[tuple[str, ...]]:
        """Expansions with every combination of optional tokens present/absent."""
        masks: list[frozenset] = [frozenset()]
        for pos in self.optional_positions:
            masks += [m | {pos} for m in masks]
        return [
            tuple(t for i, t in enumerate(self.template) if i not in mask)
            for mask in masks
        ]


@dataclass
class AntonymCandidate:
    x: str
    y: str
    count: int
    distinct_patterns: int
    pattern_ids: tuple[str, ...]
    doc_ids: tuple[str, ...]


def _parse_scheme(scheme: str, language: str) -> AntonymPattern:
    template: list[str] = []
    optional: list[int] = []
    for raw in scheme.split():
        opt = raw.startswith("(") and raw.endswith(")")
        word = raw.strip("()")
        if word == ",":
            continue
        if word == "X":
            template.append(X)
        elif word == "Y":
            template.append(Y)
        elif word == "ADJ":
            template.append(ADJ)
        else:
            # literals tokenize like text, so "jusqu'à" becomes two tokens
            for tok in _WORD_RE.findall(word.lower()):
                if opt:
                    optional.append(len(template))
                template.append(tok)
    slug = re.sub(r"[^a-z0-9à-ÿ]+", "_",
                  scheme.lower().replace("(", "").replace(")", "")).strip("_")
    pattern = AntonymPattern(f"{language}:{slug}", language,
                             tuple(template), tuple(optional))
    n_slots = sum(1 for t in pattern.template if t in (X, Y))
    if n_slots != 2 or pattern.template.index(X) > pattern.template.index(Y):
        raise ValueError(f"malformed scheme: {scheme!r}")
    return pattern


def compile_patterns(language: str) -> list[AntonymPattern]:
    """All templates for a supported language tag (`en` or `fr`)."""
    if language == "en":
        return [_parse_scheme(s, "en") for s in _EN_SCHEMES]
    if language == "fr":
        return [_parse_scheme(s, "fr") for s in _FR_SCHEMES]
    raise ValueError(f"unsupported language: {language!r}")


def _sentences(text: str) -> list[list[str]]:
    return [
        _WORD_RE.findall(chunk.lower())
        for chunk in _SENTENCE_RE.split(text)
        if chunk.strip()
    ]


def _is_content(token: str, stop: frozenset) -> bool:
    return len(token) >= 3 and token not in stop


def _is_adjective(token: str) -> bool:
    return len(token) >= 4 and token.endswith(_ADJ_SUFFIXES)


def _match_variant(tokens: list[str], variant: tuple[str, ...],
                   offset: int, stop: frozenset) -> tuple[str, str, int, int] | None:
    x = y = None
    x_pos = y_pos = -1
    for i, element in enumerate(variant):
        tok = tokens[offset + i]
        if element == X or element == Y:
            if not _is_content(tok, stop):
                return None
            if element == X:
                x, x_pos = tok, offset + i
            else:
                y, y_pos = tok, offset + i
        elif element == ADJ:
            if not _is_adjective(tok):
                return None
        elif tok != element:
            return None
    if x is None or y is None or x == y:
        return None
    return x, y, x_pos, y_pos


def extract_matches(doc: Document, patterns: Iterable[AntonymPattern]) -> list[dict]:
    """Raw template hits in one document (before pair aggregation)."""
    hits: list[dict] = []
    seen: set[tuple] = set()
    sents = _sentences(doc.raw_text)
    for pattern in patterns:
        stop = STOPWORDS.get(pattern.language, frozenset())
        for variant in pattern.variants():
            span = len(variant)
            for tokens in sents:
                for offset in range(len(tokens) - span + 1):
                    m = _match_variant(tokens, variant, offset, stop)
                    if m is None:
                        continue
                    x, y, x_pos, y_pos = m
                    key = (pattern.id, doc.id, x_pos, y_pos)
                    if key in seen:
                        continue  # same hit via another optional-variant
                    seen.add(key)
                    hits.append({"x": x, "y": y, "pattern_id": pattern.id,
                                 "doc_id": doc.id})
    return hits


def aggregate_matches(matches: Iterable[dict]) -> list[AntonymCandidate]:
    pairs: dict[tuple[str, str], dict] = {}
    for m in matches:
        key = tuple(sorted((m["x"], m["y"])))
        entry = pairs.setdefault(key, {"count": 0, "patterns": set(), "docs": set()})
        entry["count"] += 1
        entry["patterns"].add(m["pattern_id"])
        entry["docs"].add(m["doc_id"])
    return [
        AntonymCandidate(x=k[0], y=k[1], count=v["count"],
                         distinct_patterns=len(v["patterns"]),
                         pattern_ids=tuple(sorted(v["patterns"])),
                         doc_ids=tuple(sorted(v["docs"])))
        for k, v in pairs.items()
    ]


def extract_candidates(corpus: Corpus,
                       patterns: Iterable[AntonymPattern]) -> list[AntonymCandidate]:
    """Scan every document and aggregate hits by unordered pair.

    Matching runs on each document's raw text (function words must still
    be present, so this does not use the analysis normalization).
    """
    patterns = list(patterns)
    matches: list[dict] = []
    for doc in corpus.documents:
        matches.extend(extract_matches(doc, patterns))
    return aggregate_matches(matches)


def rank_candidates(candidates: Iterable[AntonymCandidate]) -> list[AntonymCandidate]:
    """Most schemes first, then most matches, then alphabetical."""
    return sorted(candidates,
                  key=lambda c: (-c.distinct_patterns, -c.count, c.x, c.y))


def write_candidates_tsv(candidates: Iterable[AntonymCandidate],
                         path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("x\ty\tcount\tdistinct_patterns\tpattern_ids\n")
        for c in rank_candidates(candidates):
            f.write(f"{c.x}\t{c.y}\t{c.count}\t{c.distinct_patterns}"
                    f"\t{','.join(c.pattern_ids)}\n")
    return path
