import numpy as np
import pytest

from qil.auto_printer import set_verbose


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("QIL_THREADS", "1")
    set_verbose(False)


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
