import random
from fractions import Fraction

import pytest

from cubetile.generators import (
    gen_lattice,
    gen_random_slides,
    gen_shifted_columns,
    gen_unitriangular_lattice,
    remove_one,
)
from cubetile.tiling import enumerate_tilings


def shifted_columns_suite(count=20, seed=7):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        d = 2 if i % 2 == 0 else 3
        period = [rng.randint(1, 3) for _ in range(d)]
        n_cols = 1
        for p in period[:-1]:
            n_cols *= p
        shifts = [Fraction(rng.randrange(0, q), q) for q in (rng.choice((2, 3, 4, 6)) for _ in range(n_cols))]
        out.append(gen_shifted_columns(d, period, shifts))
    return out


def tiling_suite():
    sets = [gen_lattice(d) for d in (1, 2, 3)]
    sets += shifted_columns_suite(10)
    sets += [gen_random_slides(seed, 2 + seed % 2, 6) for seed in range(20)]
    sets += [gen_unitriangular_lattice(seed, 2 + seed % 2) for seed in range(5)]
    sets += list(enumerate_tilings(2, [2, 2], 2))
    return sets


def orthogonal_nontiling_suite():
    out = []
    for i, s in enumerate(tiling_suite()):
        if len(s.offsets) > 1:
            out.append(remove_one(s, i))
    return out


@pytest.fixture(scope="session")
def tilings():
    return tiling_suite()


@pytest.fixture(scope="session")
def holey():
    return orthogonal_nontiling_suite()
