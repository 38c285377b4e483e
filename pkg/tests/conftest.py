import random
from itertools import product

import pytest

from sgres import (
    NumericalSemigroup,
    SemigroupClass,
    classify,
    from_bresinsky,
    from_komeda,
)
from sgres.errors import InvalidParameters, SgresError

SEED = 20240817


def _herzog_instances(count=500, max_gen=200):
    rng = random.Random(SEED)
    seen = set()
    out = []
    while len(out) < count:
        t = tuple(sorted(rng.sample(range(3, max_gen + 1), 3)))
        if t in seen:
            continue
        seen.add(t)
        try:
            S = NumericalSemigroup(t)
        except SgresError:
            continue
        c = classify(S)
        if c.tag is not SemigroupClass.THREE_GEN_NON_SYMMETRIC:
            continue
        out.append((S, c))
    return out


def _bresinsky_instances(count=500):
    seen = set()
    out = []
    for params in product(range(1, 4), repeat=8):
        try:
            S = from_bresinsky(params)
        except InvalidParameters:
            continue
        if S.generators in seen:
            continue
        seen.add(S.generators)
        out.append((S, classify(S)))
        if len(out) >= count:
            break
    return out


def _komeda_instances(count=500):
    seen = set()
    out = []
    for a1 in range(2, 10):
        for a2 in range(2, 6):
            for a3 in range(2, 6):
                for a4 in range(2, 6):
                    for a21 in range(1, a1):
                        try:
                            S = from_komeda(a1, a2, a3, a4, a21)
                        except InvalidParameters:
                            continue
                        if S.generators in seen:
                            continue
                        seen.add(S.generators)
                        out.append((S, classify(S)))
                        if len(out) >= count:
                            return out
    return out


@pytest.fixture(scope="session")
def herzog_batch():
    return _herzog_instances()


@pytest.fixture(scope="session")
def bresinsky_batch():
    return _bresinsky_instances()


@pytest.fixture(scope="session")
def komeda_batch():
    return _komeda_instances()
