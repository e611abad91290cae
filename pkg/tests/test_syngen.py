import json

import pytest

from corpuscope.ingest import NormalizationRules, build_matrix
from corpuscope.stats import term_frequencies, zipf_profile
from corpuscope.syngen import GeneratorSpec, gen_uniform_corpus


class TestGeneratorSpec:
    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            GeneratorSpec(lexicon=[], n_docs=1, words_per_doc=1)
        with pytest.raises(ValueError):
            GeneratorSpec(lexicon=10, n_docs=0, words_per_doc=1)
        with pytest.raises(ValueError):
            GeneratorSpec(lexicon=10, n_docs=1, words_per_doc=0)

    def test_oversized_lexicon_request(self):
        with pytest.raises(ValueError):
            gen_uniform_corpus(GeneratorSpec(lexicon=10**9, n_docs=1, words_per_doc=1))


class TestGeneration:
    def test_singleton_lexicon(self):
        spec = GeneratorSpec(lexicon=["aaa"], n_docs=1, words_per_doc=3)
        corpus = gen_uniform_corpus(spec)
        assert corpus.documents[0].raw_text == "aaa aaa aaa"

    def test_seed_reproducibility(self):
        spec = GeneratorSpec(lexicon=500, n_docs=40, words_per_doc=30, seed=123)
        a = gen_uniform_corpus(spec)
        b = gen_uniform_corpus(spec)
        assert json.dumps([(d.id, d.raw_text) for d in a.documents]) == \
               json.dumps([(d.id, d.raw_text) for d in b.documents])

    def test_seed_changes_output(self):
        base = dict(lexicon=500, n_docs=10, words_per_doc=30)
        a = gen_uniform_corpus(GeneratorSpec(seed=1, **base))
        b = gen_uniform_corpus(GeneratorSpec(seed=2, **base))
        assert [d.raw_text for d in a.documents] != [d.raw_text for d in b.documents]

    def test_documents_use_only_lexicon_words(self):
        lexicon = ["alpha", "bravo", "charlie"]
        corpus = gen_uniform_corpus(GeneratorSpec(lexicon=lexicon, n_docs=5,
                                                  words_per_doc=20, seed=3))
        for doc in corpus.documents:
            assert set(doc.raw_text.split()) <= set(lexicon)

    def test_per_word_frequency_near_uniform(self):
        # expected occurrences per word: 2000 * 50 / 200 = 500
        spec = GeneratorSpec(lexicon=200, n_docs=2000, words_per_doc=50, seed=11)
        corpus = gen_uniform_corpus(spec)
        freqs = term_frequencies(build_matrix(corpus, NormalizationRules()))
        expected = spec.n_docs * spec.words_per_doc / 200
        within = sum(1 for f in freqs.values() if abs(f - expected) <= 0.2 * expected)
        assert len(freqs) == 200
        assert within >= 0.99 * 200

    def test_uniform_corpus_classifies_degenerate(self):
        # >= 100 expected occurrences per word
        spec = GeneratorSpec(lexicon=150, n_docs=1000, words_per_doc=20, seed=5)
        corpus = gen_uniform_corpus(spec)
        profile = zipf_profile(term_frequencies(build_matrix(corpus,
                                                             NormalizationRules())))
        assert profile.classification == "degenerate"
        assert abs(profile.slope) < 0.3
