"""Shared fixture matrix: every covering fixture the suite sweeps over."""
import pytest

from lincat import fixtures as fx


def build_covering_matrix():
    return [
        fx.cover_f0(),
        fx.cover_f1(),
        fx.cover_f2(),
        fx.identity_cover(),
        fx.cyclic_cover(2),
        fx.cyclic_cover(3),
        fx.cyclic_cover(4),
        fx.square_cover(),
    ]


GALOIS_NAMES = {"F0", "F1", "identity-cover", "cyclic-cover-2",
                "cyclic-cover-3", "cyclic-cover-4", "square-cover"}


@pytest.fixture(scope="session")
def covering_matrix():
    return build_covering_matrix()


@pytest.fixture(scope="session")
def galois_matrix(covering_matrix):
    return [f for f in covering_matrix if f.name in GALOIS_NAMES]
