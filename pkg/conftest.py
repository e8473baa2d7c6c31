"""
Shared fixtures. The testing configuration disables the persistent cache;
tier-3 computations run only with KH_RUN_TIER3=1.
"""
import os
import random

os.environ.setdefault('KH_ENV', 'testing')

import pytest

from config import use_config, override
from diagrams import parse_pd
from generators import torus_knot, braid_closure

RIGHT_TREFOIL = 'X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)'
LEFT_TREFOIL = 'X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)'
FIGURE_EIGHT = 'X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)'
POSITIVE_KINK = 'X(1,1,2,2)'


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: tier-2 computations taking minutes')
    config.addinivalue_line('markers', 'tier3: hour-scale computations, opt in with KH_RUN_TIER3=1')


def pytest_collection_modifyitems(config, items):
    if os.environ.get('KH_RUN_TIER3') == '1':
        return
    skip = pytest.mark.skip(reason='set KH_RUN_TIER3=1 to run tier-3 computations')
    for item in items:
        if 'tier3' in item.keywords:
            item.add_marker(skip)


@pytest.fixture(autouse=True)
def testing_config():
    use_config('testing')
    yield
    use_config('testing')


@pytest.fixture
def cache_dir(tmp_path):
    """A private cache directory with caching switched on"""
    directory = tmp_path / 'kh-cache'
    override(KH_CACHE_DIR=str(directory), KH_CACHE_ENABLED=True)
    return directory


@pytest.fixture
def right_trefoil():
    return parse_pd(RIGHT_TREFOIL, name='3_1')


@pytest.fixture
def left_trefoil():
    return parse_pd(LEFT_TREFOIL, name='mirror 3_1')


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT, name='4_1')


def random_braid_diagrams(count, seed=20240611):
    """Closures of seeded random 3- and 4-strand braid words, at most 10 crossings"""
    rng = random.Random(seed)
    diagrams = []
    while len(diagrams) < count:
        strands = rng.choice((3, 4))
        length = rng.randint(2, 10)
        word = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
        diagrams.append(braid_closure(strands, word, name=f'braid {word}'))
    return diagrams


def oracle_corpus():
    corpus = [torus_knot(2, q) for q in (3, 5, 7, 9, 11)]
    corpus += [torus_knot(3, 4), parse_pd(FIGURE_EIGHT, name='4_1'), parse_pd(POSITIVE_KINK, name='kink')]
    corpus += random_braid_diagrams(50)
    return corpus
