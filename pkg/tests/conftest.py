import random

import pytest

from linecensus import make_field, random_smooth_surface


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F5():
    return make_field(5)


@pytest.fixture(scope="session")
def F7():
    return make_field(7)


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 2)


# (q, degree, seed) keys for the shared pool of smooth surfaces.
CORPUS_KEYS = [(3, d, s) for d in (2, 3, 4) for s in (1, 2, 3)]
CORPUS_KEYS += [(5, d, s) for d in (2, 3, 4) for s in (1, 2, 3)]
CORPUS_KEYS += [(3, 4, 4), (5, 3, 4)]


@pytest.fixture(scope="session")
def smooth_corpus():
    fields = {3: make_field(3), 5: make_field(5)}
    pool = {}
    for q, d, seed in CORPUS_KEYS:
        pool[(q, d, seed)] = random_smooth_surface(fields[q], d, seed=seed)
    return pool


def rank4(field, rows):
    """Rank of a matrix over the field by Gaussian elimination."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if m[r][col].i != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inverse()
        m[rank] = [x * inv for x in m[rank]]
        for r in range(nr):
            if r != rank and m[r][col].i != 0:
                c = m[r][col]
                m[r] = [a - c * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def random_gl4(field, rng: random.Random):
    """Random invertible 4x4 matrix over the field."""
    elems = list(field.elements())
    while True:
        m = [[elems[rng.randrange(field.q)] for _ in range(4)]
             for _ in range(4)]
        if rank4(field, m) == 4:
            return m
