import numpy as np
import pytest

from tools.lilstat_tool import LilTrace


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def make_trace():
    """Build a LilTrace straight from S_lil values (ones/s_star are not used by the evaluator)."""

    def build(values, checkpoints):
        return LilTrace(tuple((n, n // 2, 0.0, float(v)) for n, v in zip(checkpoints, values)))

    return build
