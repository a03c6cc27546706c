import random
from math import gcd

import pytest


def random_curves(seed: int, count: int, d_max: int, k_max: int = 6,
                  d_min: int = 4) -> list[tuple[int, ...]]:
    """Deterministic corpus of distinct valid exponent sequences."""
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    while len(out) < count:
        d = rng.randint(d_min, d_max)
        k = rng.randint(2, min(k_max, d))
        inner = sorted(rng.sample(range(1, d), k - 1))
        a = tuple(inner) + (d,)
        g = 0
        for x in a:
            g = gcd(g, x)
        if g != 1 or a in seen:
            continue
        seen.add(a)
        out.append(a)
    return out


@pytest.fixture(scope="session")
def small_corpus() -> list[tuple[int, ...]]:
    """Shared corpus of 60 curves with d <= 40 for module-level checks."""
    return random_curves(seed=11, count=60, d_max=40)
