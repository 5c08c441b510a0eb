"""Shared session fixtures.

The default corpus and the full law-suite run both cost real time, so
they are built once per session and shared by every test that wants
them.  ``suite`` carries its own wall-clock (corpus build included) so
the acceptance tests can check the time budget without re-running it.
"""

import time

import pytest

from ringlab import harness


@pytest.fixture(scope="session")
def corpus_timed():
    t0 = time.perf_counter()
    corpus = harness.build_corpus()
    return corpus, time.perf_counter() - t0


@pytest.fixture(scope="session")
def corpus(corpus_timed):
    return corpus_timed[0]


@pytest.fixture(scope="session")
def suite(corpus_timed):
    corpus, build_s = corpus_timed
    t0 = time.perf_counter()
    reports = harness.verify_properties(corpus)
    return reports, build_s + (time.perf_counter() - t0)
