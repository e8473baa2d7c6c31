"""
Khovanov ranks: scanning engine against the cube oracle, structural
properties, the rank cache and the branch-set values.
"""
import os
import random

import pytest
import sympy as sp

from conftest import oracle_corpus, FIGURE_EIGHT, POSITIVE_KINK
from config import override
from models.homology import GradedComplex, KhRanks
from models.errors import ComplexError, CrossingLimitError, ResourceLimitError
from diagrams import parse_pd, mirror, component_count, diagram_digest, oriented
from generators import braid_closure, torus_knot, tau
from invariants import jones_polynomial
from khovanov import (
    cube_complex, scan_ranks, homology_ranks, kh_ranks, graded_euler, format_table, total_rank,
    poincare_polynomial,
)
from khovanov.cube import resolution_circles
from khovanov.gf2 import rank_of_rows, rank_of_pairs, bitset_rank
from utils.cache import cache_get, cache_put

CORPUS = oracle_corpus()


def _oracle(diagram, reduced):
    return homology_ranks(cube_complex(diagram, reduced)).table


# ==================== GF(2) ranks ====================

def test_gf2_rank():
    rows = [{0, 1}, {1, 2}, {0, 2}]
    assert rank_of_rows(rows, 3) == 2
    assert bitset_rank(rows) == 2
    assert rank_of_rows([set(), set()], 4) == 0
    assert rank_of_rows([{k} for k in range(70)], 70) == 70


def test_gf2_sparse_fallback_agrees_with_packed():
    rng = random.Random(5)
    for _ in range(20):
        n_rows, n_cols = rng.randint(1, 40), rng.randint(1, 90)
        rows = [{c for c in range(n_cols) if rng.random() < 0.2} for _ in range(n_rows)]
        assert rank_of_rows(rows, n_cols, dense_limit=0) == rank_of_rows(rows, n_cols)
    assert rank_of_rows([{0, 1}, {1, 2}, {0, 2}], 3, dense_limit=0) == 2


def test_rank_of_pairs_agrees_with_rows():
    rng = random.Random(11)
    for _ in range(20):
        n_rows, n_cols = rng.randint(1, 30), rng.randint(1, 70)
        entries = [(r, c) for r in range(n_rows) for c in range(n_cols) if rng.random() < 0.15]
        rows = [{c for r2, c in entries if r2 == r} for r in range(n_rows)]
        row_ids = [r for r, _ in entries]
        cols = [c for _, c in entries]
        expected = rank_of_rows(rows, n_cols)
        assert rank_of_pairs(row_ids, cols, n_rows, n_cols) == expected
        assert rank_of_pairs(row_ids, cols, n_rows, n_cols, dense_limit=0) == expected
    # a repeated entry cancels
    assert rank_of_pairs([0, 0, 1], [2, 2, 1], 2, 3) == 1
    assert rank_of_pairs([], [], 4, 4) == 0


# ==================== Known tables ====================

def test_right_trefoil_reduced(right_trefoil):
    ranks = scan_ranks(right_trefoil)
    assert ranks.table == {(0, 2): 1, (2, 6): 1, (3, 8): 1}
    assert ranks.total == 3


def test_right_trefoil_unreduced(right_trefoil):
    ranks = scan_ranks(right_trefoil, reduced=False)
    assert ranks.table == {(0, 1): 1, (0, 3): 1, (2, 5): 1, (2, 7): 1, (3, 7): 1, (3, 9): 1}


def test_poincare_polynomial(right_trefoil):
    t, q = sp.symbols('t q')
    poly = poincare_polynomial(scan_ranks(right_trefoil))
    assert sp.expand(poly - (q**2 + t**2 * q**6 + t**3 * q**8)) == 0


def test_torus_trefoil_is_right_handed(right_trefoil):
    assert scan_ranks(torus_knot(2, 3)).table == scan_ranks(right_trefoil).table


def test_left_trefoil_is_mirrored(left_trefoil, right_trefoil):
    assert scan_ranks(left_trefoil).table == scan_ranks(right_trefoil).mirrored().table


def test_figure_eight(figure_eight):
    ranks = scan_ranks(figure_eight)
    assert ranks.table == {(-2, -4): 1, (-1, -2): 1, (0, 0): 1, (1, 2): 1, (2, 4): 1}


@pytest.mark.parametrize('text', ['loops=1', POSITIVE_KINK])
def test_unknot_diagrams(text):
    diagram = parse_pd(text)
    assert scan_ranks(diagram).table == {(0, 0): 1}
    assert scan_ranks(diagram, reduced=False).table == {(0, 1): 1, (0, -1): 1}


def test_split_unknot_doubles_rank(right_trefoil):
    with_loop = parse_pd('X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) loops=1')
    assert scan_ranks(with_loop).total == 2 * scan_ranks(right_trefoil).total


# ==================== Oracle equivalence ====================

@pytest.mark.parametrize('diagram', CORPUS, ids=lambda d: d.name)
@pytest.mark.parametrize('reduced', [True, False], ids=['reduced', 'unreduced'])
def test_scan_matches_cube(diagram, reduced):
    assert scan_ranks(diagram, reduced).table == _oracle(diagram, reduced)


@pytest.mark.slow
def test_scan_matches_cube_on_tau_zero():
    diagram = tau('0')
    assert scan_ranks(diagram).table == _oracle(diagram, True)


def test_cube_differential_squares_to_zero(figure_eight):
    for reduced in (True, False):
        cube_complex(figure_eight, reduced).check_d_squared()


def test_cube_guard():
    with pytest.raises(CrossingLimitError):
        cube_complex(torus_knot(2, 17))


def test_threaded_blocks_agree():
    complex_ = cube_complex(torus_knot(3, 4), reduced=False)
    assert homology_ranks(complex_, threads=3).table == homology_ranks(complex_, threads=1).table


def test_threaded_unreduced_scan_agrees():
    diagram = torus_knot(3, 5)
    single = scan_ranks(diagram, reduced=False, threads=1).table
    assert scan_ranks(diagram, reduced=False, threads=4).table == single
    override(KH_THREADS=3)
    assert scan_ranks(diagram, reduced=False).table == single


def test_complex_entries_cancel_in_pairs():
    complex_ = GradedComplex.from_pairs({0: [1, 1], 1: [1]}, {0: ([0, 0, 1], [0, 0, 0])})
    assert complex_.targets(0, 0).tolist() == []
    assert complex_.targets(0, 1).tolist() == [0]
    assert complex_.entry_count() == 1


def test_check_d_squared_rejects_broken_complexes():
    squares = GradedComplex.from_pairs({0: [1], 1: [1], 2: [1]}, {0: ([0], [0]), 1: ([0], [0])})
    with pytest.raises(ComplexError):
        squares.check_d_squared()
    shifted = GradedComplex.from_pairs({0: [1], 1: [3]}, {0: ([0], [0])})
    with pytest.raises(ComplexError):
        shifted.check_d_squared()


@pytest.mark.parametrize('reduced', [True, False], ids=['reduced', 'unreduced'])
def test_cube_generators_are_numbered_per_resolution(figure_eight, reduced):
    tuples = oriented(figure_eight).pd_tuples()
    sizes = [resolution_circles(tuples, state)[1] for state in range(1 << len(tuples))]
    expected = sum(2 ** (c - 1 if reduced else c) for c in sizes)
    complex_ = cube_complex(figure_eight, reduced)
    assert complex_.generator_count() == expected
    for i, grades in complex_.gradings.items():
        if i in complex_.differentials:
            indptr, _ = complex_.differentials[i]
            assert len(indptr) == len(grades) + 1


# ==================== Properties ====================

KNOTS = [d for d in CORPUS if component_count(d) == 1]


@pytest.mark.parametrize('diagram', KNOTS, ids=lambda d: d.name)
def test_unreduced_is_twice_reduced(diagram):
    assert scan_ranks(diagram, reduced=False).total == 2 * scan_ranks(diagram).total


def _edges(diagram):
    return sorted({e for t in diagram.pd_tuples() for e in t})


@pytest.mark.parametrize('diagram', [d for d in CORPUS if d.crossing_count <= 12], ids=lambda d: d.name)
def test_basepoint_independence(diagram):
    expected = scan_ranks(diagram).table
    for edge in _edges(diagram):
        assert scan_ranks(diagram.with_basepoint(edge)).table == expected


@pytest.mark.parametrize('diagram', [
    parse_pd(FIGURE_EIGHT, name='4_1'), torus_knot(3, 4), braid_closure(3, [1, 1, 2, 2, 1, 1], name='3-chain'),
], ids=lambda d: d.name)
def test_cube_basepoint_independence(diagram):
    edges = _edges(diagram)
    first = _oracle(diagram.with_basepoint(edges[0]), True)
    assert _oracle(diagram.with_basepoint(edges[-1]), True) == first
    assert scan_ranks(diagram.with_basepoint(edges[-1])).table == first


@pytest.mark.parametrize('diagram', CORPUS, ids=lambda d: d.name)
def test_mirror_reflects_gradings(diagram):
    assert scan_ranks(mirror(diagram)).table == scan_ranks(diagram).mirrored().table


REIDEMEISTER_PAIRS = [
    # stabilising with a new strand adds one kink
    ('R1 positive', (2, [1, 1, 1]), (3, [1, 1, 1, 2])),
    ('R1 negative', (3, [1, -2, 1, -2]), (4, [1, -2, 1, -2, -3])),
    # s s^-1 pushes one strand across another
    ('R2', (3, [1, -2, 1, -2]), (3, [1, 2, -2, -2, 1, -2])),
    ('R2 unlink', (2, []), (2, [1, -1])),
    # s1 s2 s1 = s2 s1 s2 slides a strand across a crossing
    ('R3', (3, [1, 2, 1, 2, 2]), (3, [2, 1, 2, 2, 2])),
    ('R3 negative', (3, [-1, -2, -1, 1]), (3, [-2, -1, -2, 1])),
    ('R3 four strands', (4, [1, 2, 1, 3, -2]), (4, [2, 1, 2, 3, -2])),
]


@pytest.mark.parametrize('move,before,after', REIDEMEISTER_PAIRS, ids=[p[0] for p in REIDEMEISTER_PAIRS])
def test_reidemeister_moves_keep_ranks(move, before, after):
    left, right = braid_closure(*before), braid_closure(*after)
    assert diagram_digest(left) != diagram_digest(right)
    assert component_count(left) == component_count(right)
    for reduced in (True, False):
        assert scan_ranks(left, reduced).table == scan_ranks(right, reduced).table
    assert jones_polynomial(left) == jones_polynomial(right)


def test_hand_built_kink_on_trefoil(right_trefoil):
    # edge 6 of the trefoil runs through a curl on edges 6, 7 and 8
    kinked = parse_pd('X(1,5,2,4) X(3,1,4,8) X(5,3,6,2) X(7,7,8,6)')
    assert kinked.crossing_count == 4
    for reduced in (True, False):
        assert scan_ranks(kinked, reduced).table == scan_ranks(right_trefoil, reduced).table
    assert _oracle(kinked, True) == scan_ranks(right_trefoil).table
    assert jones_polynomial(kinked) == jones_polynomial(right_trefoil)


@pytest.mark.parametrize('diagram', KNOTS[:8], ids=lambda d: d.name)
def test_euler_characteristic_is_jones(diagram):
    assert graded_euler(scan_ranks(diagram)) == jones_polynomial(diagram)


def test_generator_ceiling():
    with pytest.raises(ResourceLimitError):
        scan_ranks(torus_knot(3, 7), max_generators=4)


# ==================== Rendering and serialization ====================

def test_format_table(right_trefoil):
    text = format_table(scan_ranks(right_trefoil))
    assert text.splitlines()[-1] == 'total: 3'


def test_ranks_json_round_trip(right_trefoil):
    ranks = kh_ranks(right_trefoil)
    restored = KhRanks.from_json(ranks.to_json())
    assert restored == ranks
    assert restored.to_dict()['table'] == [[0, 2, 1], [2, 6, 1], [3, 8, 1]]
    assert restored.diagram == diagram_digest(right_trefoil)


def test_from_dict_rejects_inconsistent_total():
    with pytest.raises(ValueError):
        KhRanks.from_dict({'table': [[0, 0, 1]], 'total': 2})


def test_unknown_engine(right_trefoil):
    with pytest.raises(ValueError):
        kh_ranks(right_trefoil, engine='magic')


def test_cube_engine(right_trefoil):
    assert kh_ranks(right_trefoil, engine='cube').table == kh_ranks(right_trefoil, engine='scan').table
    assert total_rank(kh_ranks(right_trefoil, engine='cube')) == 3


# ==================== Cache ====================

def test_cache_round_trip(cache_dir, right_trefoil):
    first = kh_ranks(right_trefoil)
    digest = diagram_digest(right_trefoil)
    assert (cache_dir / f'{digest}-reduced.json').exists()
    entry = cache_get(digest, 'reduced')
    assert entry.ranks == first
    assert kh_ranks(right_trefoil) == first


def test_cache_miss_after_version_bump(cache_dir, right_trefoil):
    kh_ranks(right_trefoil)
    override(ENGINE_VERSION='next')
    assert cache_get(diagram_digest(right_trefoil), 'reduced') is None


def test_cache_agrees_with_fresh_computation(cache_dir):
    for diagram in CORPUS[:10]:
        cached = kh_ranks(diagram)
        assert kh_ranks(diagram).table == kh_ranks(diagram, use_cache=False).table == cached.table


def test_repeated_put_keeps_a_valid_entry(cache_dir, right_trefoil):
    ranks = scan_ranks(right_trefoil)
    digest = diagram_digest(right_trefoil)
    cache_put(digest, 'reduced', ranks)
    cache_put(digest, 'reduced', ranks)
    assert cache_get(digest, 'reduced').ranks.table == ranks.table
    assert [p for p in os.listdir(cache_dir) if p.startswith('.tmp-')] == []


def test_unusable_cache_degrades(tmp_path, right_trefoil):
    blocker = tmp_path / 'not-a-directory'
    blocker.write_text('x')
    override(KH_CACHE_DIR=str(blocker / 'cache'), KH_CACHE_ENABLED=True)
    assert kh_ranks(right_trefoil).total == 3
    assert cache_put('abc', 'reduced', scan_ranks(right_trefoil)) is None


# ==================== Branch-set values ====================

@pytest.mark.parametrize('slope,total', [('0', 16), ('1', 15), ('-1', 17), ('1/0', 1)])
def test_tau_ranks(slope, total):
    assert kh_ranks(tau(slope)).total == total


def test_tau_zero_unreduced_doubles():
    assert kh_ranks(tau('0'), reduced=False).total == 32


@pytest.mark.slow
@pytest.mark.parametrize('slope,total', [('1/2', 31), ('-1/2', 33)])
def test_tau_half_ranks(slope, total):
    assert kh_ranks(tau(slope)).total == total


@pytest.mark.slow
@pytest.mark.parametrize('q,total', [(9, 57), (11, 73)])
def test_torus_five_ranks(q, total):
    assert kh_ranks(torus_knot(5, q)).total == total


@pytest.mark.tier3
@pytest.mark.parametrize('q,total', [(19, 241), (21, 273)])
def test_torus_five_tier3_ranks(q, total):
    assert kh_ranks(torus_knot(5, q)).total == total
