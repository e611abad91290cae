"""Frequency tables, rank-frequency (Zipf) profiling and corpus summaries.

The rank-frequency profile of a natural corpus falls close to a straight
line of slope -1 in log-log space; uniformly generated corpora flatten
out. `zipf_profile` fits ordinary least squares on the log-log points and
classifies the profile as natural or degenerate from the fitted slope and
r-squared.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ingest import Corpus, NormalizationRules, TermDocumentMatrix, build_matrix

__all__ = [
    "FrequencyTable",
    "ZipfProfile",
    "VariantCounts",
    "CorpusSummary",
    "term_frequencies",
    "zipf_profile",
    "occurrence_histogram",
    "corpus_summary",
    "frequent_items",
    "hapax_fraction",
    "write_frequencies_tsv",
    "write_zipf_tsv",
    "write_zipf_svg",
    "write_summary_tsv",
]

FrequencyTable = dict[str, int]

# Degenerate-profile cutoffs; overridable per call.
DEGENERATE_SLOPE = 0.3
DEGENERATE_R2 = 0.5


@dataclass
class ZipfProfile:
    points: list[tuple[int, int]]
    slope: float
    intercept: float
    r2: float
    classification: str  # "natural" | "degenerate"


@dataclass
class VariantCounts:
    n_words: int
    n_words_freq_gt1: int
    n_words_freq_eq2: int
    n_words_freq_eq3: int


@dataclass
class CorpusSummary:
    n_documents: int
    unstemmed: VariantCounts
    stemmed: VariantCounts


def term_frequencies(tdm: TermDocumentMatrix) -> FrequencyTable:
    """Corpus-wide frequency of each term (matrix row sums)."""
    if not tdm.terms:
        raise ValueError("empty matrix")
    sums = tdm.row_sums()
    return {t: int(s) for t, s in zip(tdm.terms, sums)}


def _ranked(freqs: FrequencyTable) -> list[tuple[str, int]]:
    # Descending frequency, lexicographic tie-break: deterministic ranks.
    return sorted(freqs.items(), key=lambda kv: (-kv[1], kv[0]))


def zipf_profile(freqs: FrequencyTable,
                 max_rank: int | None = None,
                 slope_cutoff: float = DEGENERATE_SLOPE,
                 r2_cutoff: float = DEGENERATE_R2) -> ZipfProfile:
    """Least-squares log-log fit of the rank-frequency points.

    `max_rank` restricts the fit to the head of the distribution. The
    profile is degenerate when |slope| < slope_cutoff or r2 < r2_cutoff.
    """
    if len(freqs) < 10:
        raise ValueError("need at least 10 distinct terms for a slope fit")
    ranked = _ranked(freqs)
    if max_rank is not None:
        ranked = ranked[:max_rank]
    points = [(r, f) for r, (_, f) in enumerate(ranked, start=1)]
    log_r = np.log([r for r, _ in points])
    log_f = np.log([f for _, f in points])
    slope, intercept = np.polyfit(log_r, log_f, 1)
    pred = slope * log_r + intercept
    ss_res = float(np.sum((log_f - pred) ** 2))
    ss_tot = float(np.sum((log_f - log_f.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    degenerate = abs(slope) < slope_cutoff or r2 < r2_cutoff
    return ZipfProfile(points, float(slope), float(intercept), r2,
                       "degenerate" if degenerate else "natural")


def occurrence_histogram(freqs: FrequencyTable, lo: int, hi: int) -> list[tuple[int, int]]:
    """For each occurrence count k in [lo, hi], the number of terms with frequency k."""
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid occurrence range [{lo}, {hi}]")
    counts = {k: 0 for k in range(lo, hi + 1)}
    for f in freqs.values():
        if lo <= f <= hi:
            counts[f] += 1
    return sorted(counts.items())


def _variant_counts(corpus: Corpus, rules: NormalizationRules) -> VariantCounts:
    freqs = term_frequencies(build_matrix(corpus, rules))
    vals = list(freqs.values())
    return VariantCounts(
        n_words=len(vals),
        n_words_freq_gt1=sum(1 for v in vals if v > 1),
        n_words_freq_eq2=sum(1 for v in vals if v == 2),
        n_words_freq_eq3=sum(1 for v in vals if v == 3),
    )


def corpus_summary(corpus: Corpus,
                   rules: NormalizationRules | None = None) -> CorpusSummary:
    """Distinct-word counts for the raw and the stemmed variant of a corpus."""
    if not corpus.documents:
        raise ValueError("empty corpus")
    base = rules or NormalizationRules()
    from dataclasses import replace

    return CorpusSummary(
        n_documents=len(corpus.documents),
        unstemmed=_variant_counts(corpus, replace(base, stemming=False)),
        stemmed=_variant_counts(corpus, replace(base, stemming=True)),
    )


def frequent_items(tdm: TermDocumentMatrix, s_f: int) -> list[tuple[str, int]]:
    """Terms with corpus frequency >= s_f, most frequent first.

    Occurrences inside the same document all count toward the threshold.
    """
    if s_f < 1:
        raise ValueError("s_f must be >= 1")
    freqs = term_frequencies(tdm)
    return [(t, f) for t, f in _ranked(freqs) if f >= s_f]


def hapax_fraction(freqs: FrequencyTable) -> float:
    """Share of distinct terms occurring exactly once."""
    if not freqs:
        raise ValueError("empty frequency table")
    hapax = sum(1 for f in freqs.values() if f == 1)
    return hapax / len(freqs)


# --- report writers ---------------------------------------------------------

def write_frequencies_tsv(freqs: FrequencyTable, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for term, freq in _ranked(freqs):
            f.write(f"{term}\t{freq}\n")
    return path


def write_zipf_tsv(profile: ZipfProfile, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for rank, freq in profile.points:
            f.write(f"{rank}\t{freq}\n")
    return path


def write_summary_tsv(name: str, summary: CorpusSummary, path: str | Path) -> Path:
    """One corpus per row, raw counts first, stemmed counts after."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    u, s = summary.unstemmed, summary.stemmed
    header = ("corpus\tn_documents\tn_words\tn_words_freq_gt1\tn_words_freq_eq2"
              "\tn_words_freq_eq3\tn_stemmed\tn_stemmed_freq_gt1"
              "\tn_stemmed_freq_eq2\tn_stemmed_freq_eq3\n")
    row = (f"{name}\t{summary.n_documents}\t{u.n_words}\t{u.n_words_freq_gt1}"
           f"\t{u.n_words_freq_eq2}\t{u.n_words_freq_eq3}\t{s.n_words}"
           f"\t{s.n_words_freq_gt1}\t{s.n_words_freq_eq2}\t{s.n_words_freq_eq3}\n")
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(header)
        f.write(row)
    return path


def write_zipf_svg(profile: ZipfProfile, path: str | Path,
                   width: int = 640, height: int = 480) -> Path:
    """Log-log scatter of the rank-frequency points with the fitted line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    margin = 50
    xs = np.log10([r for r, _ in profile.points])
    ys = np.log10([max(f, 1) for _, f in profile.points])
    x_max = float(xs.max()) or 1.0
    y_max = float(ys.max()) or 1.0

    def sx(x):
        return margin + (x / x_max) * (width - 2 * margin)

    def sy(y):
        return height - margin - (y / y_max) * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
    ]
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2" '
                     f'fill="steelblue"/>')
    # fitted line in natural-log space mapped to log10 axes
    ln10 = np.log(10.0)
    y0 = (profile.intercept + profile.slope * 0.0) / ln10
    y1 = (profile.intercept + profile.slope * x_max * ln10) / ln10
    parts.append(f'<line x1="{sx(0):.2f}" y1="{sy(y0):.2f}" '
                 f'x2="{sx(x_max):.2f}" y2="{sy(y1):.2f}" '
                 f'stroke="crimson" stroke-dasharray="4 3"/>')
    parts.append(
        f'<text x="{margin}" y="{margin - 16}" font-family="monospace" '
        f'font-size="13">slope={profile.slope:.3f} r2={profile.r2:.3f} '
        f'{profile.classification}</text>'
    )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(parts) + "\n")
    return path
