import math

import numpy as np
import pytest


def bisect_oracle(f, lo, hi, tol=1e-14):
    """Plain interval halving; the reference root finder for tests."""
    flo, fhi = f(lo), f(hi)
    assert flo * fhi < 0, "oracle bracket must change sign"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if flo * fm <= 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def adjacent_root_oracle(n):
    return bisect_oracle(lambda s: math.tanh(s) - math.tan(s),
                         n * math.pi + 1e-9, n * math.pi + math.pi / 2 - 1e-9)


def linear_root_oracle(n, c):
    def f(s):
        th = math.tanh(s)
        return th / (1.0 + c * s * th) - math.tan(s)
    return bisect_oracle(f, n * math.pi + 1e-9, n * math.pi + math.pi / 2 - 1e-9)


@pytest.fixture(scope="session")
def random_quads():
    """The shared random-sample plan: 1000 draws of (l, rho, lam, E)."""
    rng = np.random.default_rng(20260808)
    return [(rng.uniform(1e-3, 1.0), rng.uniform(0.0, 1.0),
             rng.uniform(0.1, 30.0), rng.uniform(0.1, 10.0))
            for _ in range(1000)]
