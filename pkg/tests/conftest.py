import sys
from pathlib import Path as FsPath

import pytest

sys.path.insert(0, str(FsPath(__file__).parent))

from gentle import BoundQuiver  # noqa: E402

DATA = FsPath(__file__).parent / "data"


def make_e1():
    return BoundQuiver.build(
        ["1", "2"],
        [("alpha1", "1", "2"), ("beta", "2", "1"), ("gamma", "2", "1")],
        [("alpha1", "beta"), ("gamma", "alpha1")],
    )


def _e2_arrows():
    return [("alpha2", "b", "m"), ("alpha1", "m", "c"), ("beta", "c", "b"), ("gamma", "c", "b")]


def make_e2():
    return BoundQuiver.build(["b", "m", "c"], _e2_arrows(), [("alpha2", "beta"), ("gamma", "alpha1")])


def make_e3():
    return BoundQuiver.build(
        ["b", "m", "c"], _e2_arrows(), [("alpha2", "beta"), ("alpha1", "alpha2"), ("gamma", "alpha1")]
    )


def make_k():
    return BoundQuiver.build(["a", "b"], [("alpha", "a", "b"), ("beta", "b", "a")],
                             [("alpha", "beta"), ("beta", "alpha")])


@pytest.fixture
def e1():
    return make_e1()


@pytest.fixture
def e2():
    return make_e2()


@pytest.fixture
def e3():
    return make_e3()


@pytest.fixture
def k():
    return make_k()


def path(bq, text):
    """``path(bq, "beta alpha1 gamma")``; a single vertex name gives ``1_x``."""
    if text.startswith("1_"):
        return bq.trivial(text[2:])
    return bq.path(*text.split())
