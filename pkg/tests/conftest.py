import pytest

from corpuscope import data
from corpuscope.ingest import NormalizationRules, build_matrix
from corpuscope.stats import term_frequencies
from corpuscope.syngen import GeneratorSpec, gen_uniform_corpus


@pytest.fixture(scope="session")
def moby():
    return data.natural_corpus()


@pytest.fixture(scope="session")
def moby_tdm(moby):
    return build_matrix(moby, NormalizationRules())


@pytest.fixture(scope="session")
def moby_freqs(moby_tdm):
    return term_frequencies(moby_tdm)


@pytest.fixture(scope="session")
def sl_corpus():
    """Uniform corpus analogous to a 1000-word-lexicon generated corpus."""
    spec = GeneratorSpec(lexicon=1000, n_docs=6000, words_per_doc=150, seed=7)
    return gen_uniform_corpus(spec, name="uniform-1000")


@pytest.fixture(scope="session")
def sl_freqs(sl_corpus):
    return term_frequencies(build_matrix(sl_corpus, NormalizationRules()))
