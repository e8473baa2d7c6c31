"""
Bigraded ranks, their summaries and the public entry point kh_ranks.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import sympy as sp

from config import get_setting
from models.homology import KhRanks
from models.polynomial import LaurentPoly
from models.errors import ComplexError
from diagrams.operations import diagram_digest
from khovanov.gf2 import rank_of_pairs

logger = logging.getLogger(__name__)

ENGINES = ('auto', 'scan', 'cube')


def _block_table(complex_, j, by_degree):
    ranks = {}
    for i, ks in by_degree.items():
        following = by_degree.get(i + 1)
        if following is None or not len(following):
            ranks[i] = 0
            continue
        position = np.full(len(complex_.gradings[i + 1]), -1, dtype=np.int64)
        position[following] = np.arange(len(following), dtype=np.int64)
        row_ids, targets = complex_.gather(i, ks)
        cols = position[targets]
        kept = cols >= 0
        ranks[i] = rank_of_pairs(row_ids[kept], cols[kept], len(ks), len(following))
    table = {}
    for i, ks in by_degree.items():
        value = len(ks) - ranks[i] - ranks.get(i - 1, 0)
        if value < 0:
            raise ComplexError(f'Negative homology rank at ({i},{j})')
        if value:
            table[(i, j)] = value
    return table


def homology_ranks(complex_, flavor='reduced', digest=None, threads=None):
    """dim ker - dim im per (i, j); quantum gradings are independent blocks"""
    complex_.check_d_squared()
    threads = threads or get_setting('KH_THREADS')
    blocks = sorted(complex_.blocks().items())
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda item: _block_table(complex_, *item), blocks))
    else:
        parts = [_block_table(complex_, j, by_degree) for j, by_degree in blocks]
    table = {}
    for part in parts:
        table.update(part)
    return KhRanks(table=table, flavor=flavor, diagram=digest)


def total_rank(ranks):
    return sum(ranks.table.values())


def graded_euler(ranks):
    """Sum of (-1)^i rank(i, j) q^j"""
    terms = {}
    for (i, j), r in ranks.table.items():
        terms[j] = terms.get(j, 0) + (-1) ** (i % 2) * r
    return LaurentPoly(terms)


def poincare_polynomial(ranks):
    """Two-variable Poincare polynomial sum rank(i, j) t^i q^j as a sympy expression"""
    t, q = sp.symbols('t q')
    return sp.Add(*[r * t ** i * q ** j for (i, j), r in ranks.table.items()])


def format_table(ranks):
    """Aligned text: one row per homological degree, one column per quantum grading"""
    if not ranks.table:
        return f'(empty)\ntotal: {ranks.total}'
    degrees = sorted({i for i, _ in ranks.table})
    gradings = sorted({j for _, j in ranks.table})
    width = max(3, max(len(str(v)) for v in gradings + degrees) + 1)
    lines = ['j\\i'.rjust(width) + ''.join(str(i).rjust(width) for i in degrees)]
    for j in reversed(gradings):
        cells = [str(ranks.rank(i, j) or '.').rjust(width) for i in degrees]
        lines.append(str(j).rjust(width) + ''.join(cells))
    lines.append(f'total: {ranks.total}')
    return '\n'.join(lines)


def kh_ranks(diagram, reduced=True, engine='auto', max_generators=None, use_cache=None):
    """
    Khovanov ranks of a diagram through the cache, then the chosen engine.

    engine 'auto' and 'scan' scan crossing by crossing; 'cube' builds the full
    cube of resolutions and is refused above KH_ORACLE_MAX_CROSSINGS.
    """
    if engine not in ENGINES:
        raise ValueError(f'Unknown engine {engine!r}; choose from {ENGINES}')
    from khovanov.cube import cube_complex
    from khovanov.scanner import scan_ranks
    from utils.cache import cache_get, cache_put

    flavor = 'reduced' if reduced else 'unreduced'
    digest = diagram_digest(diagram)
    if use_cache is None:
        use_cache = get_setting('KH_CACHE_ENABLED')

    if use_cache:
        entry = cache_get(digest, flavor)
        if entry is not None:
            logger.debug(f'Cache hit for {digest[:12]} ({flavor})')
            return entry.ranks

    started = time.perf_counter()
    if engine == 'cube':
        ranks = homology_ranks(cube_complex(diagram, reduced), flavor, digest)
    else:
        ranks = scan_ranks(diagram, reduced, max_generators=max_generators)
        ranks = KhRanks(table=ranks.table, flavor=flavor, diagram=digest)
    elapsed = time.perf_counter() - started
    logger.info(f'Kh {flavor} of {diagram.name or digest[:12]}: total {ranks.total} in {elapsed:.2f}s')

    if use_cache:
        cache_put(digest, flavor, ranks, elapsed)
    return ranks
