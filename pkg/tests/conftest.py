import random

import pytest

from weyldiag import CartanType, Word, build_root_system
from weyldiag.roots import _identity_matrix, _right_mul

CENSUS_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2),
]


def system_of(family, rank):
    return build_root_system(CartanType(family, rank))


def random_reduced_word(system, rng, max_len):
    """Seeded random ascent walk; the result is reduced by construction."""
    target = rng.randint(0, min(max_len, system.num_positive_roots))
    m = _identity_matrix(system.rank)
    letters = []
    while len(letters) < target:
        ascents = [i0 for i0 in range(system.rank) if sum(m[i0]) > 0]
        if not ascents:
            break
        i0 = rng.choice(ascents)
        letters.append(i0 + 1)
        m = _right_mul(m, i0, system.cartan)
    return Word(system, tuple(letters))


def random_reduced_words(system, count, max_len, seed):
    rng = random.Random(seed)
    return [random_reduced_word(system, rng, max_len) for _ in range(count)]


@pytest.fixture(scope="session")
def a2():
    return system_of("A", 2)


@pytest.fixture(scope="session")
def a3():
    return system_of("A", 3)
