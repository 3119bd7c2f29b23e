import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gbrauer.generators import GeneratorSet  # noqa: E402

# the parameter values hitting every special residue branch: an odd integer,
# zero, a negative odd integer, an even integer and a non-integer
DELTA_SET = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


@pytest.fixture(scope="session")
def genset_cache():
    cache: dict = {}

    def get(n, delta) -> GeneratorSet:
        key = (n, Fraction(delta))
        if key not in cache:
            cache[key] = GeneratorSet(n, Fraction(delta))
        return cache[key]

    return get
