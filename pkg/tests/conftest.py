import itertools

import numpy as np
import pytest

from eshelby2d.algebra import GroupElement, random_eshelby


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


def loop_act(Q, T):
    """Order-4 group action by plain nested loops (no einsum, no numba)."""
    out = np.zeros((2, 2, 2, 2))
    idx = list(itertools.product(range(2), repeat=4))
    for i, j, k, l in idx:
        s = 0.0
        for a, b, c, d in idx:
            s += Q[i, a] * Q[j, b] * Q[k, c] * Q[l, d] * T[a, b, c, d]
        out[i, j, k, l] = s
    return out


def random_tensors(n, start=1000):
    return [random_eshelby(start + s) for s in range(n)]


def random_elements(rng, n, reflect=None):
    out = []
    for _ in range(n):
        r = bool(rng.integers(2)) if reflect is None else reflect
        out.append(GroupElement(rng.uniform(0, 2 * np.pi), r))
    return out
