"""
PD parsing, validation, rendering and elementary diagram operations.
"""
import random

import pytest

from conftest import RIGHT_TREFOIL, LEFT_TREFOIL, FIGURE_EIGHT
from models.diagram import Diagram
from models.errors import PDParseError, DiagramValidationError
from diagrams import (
    parse_pd, render, validate, mirror, writhe, component_count, diagram_digest, signed_counts,
    from_unoriented,
)
from generators import braid_closure, torus_knot


def test_parse_right_trefoil(right_trefoil):
    assert right_trefoil.crossing_count == 3
    assert right_trefoil.edge_count == 6
    assert [c.sign for c in right_trefoil.crossings] == [1, 1, 1]
    assert writhe(right_trefoil) == 3


def test_parse_left_trefoil(left_trefoil):
    assert signed_counts(left_trefoil) == (0, 3)


def test_wrapped_and_bracket_forms_agree():
    wrapped = parse_pd('PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]')
    assert wrapped == parse_pd(RIGHT_TREFOIL)


@pytest.mark.parametrize('text', [
    RIGHT_TREFOIL,
    FIGURE_EIGHT,
    RIGHT_TREFOIL + ' bp=4',
    RIGHT_TREFOIL + ' loops=2',
    'loops=1',
    'loops=3',
    'X(1,1,2,2)',
])
def test_render_parses_back(text):
    diagram = parse_pd(text)
    assert parse_pd(render(diagram)) == diagram


@pytest.mark.parametrize('text', ['', '   ', 'X(1,2,3)', 'X(1,2,3,x)', 'X(0,1,1,2)', 'hello'])
def test_malformed_text_is_a_parse_error(text):
    with pytest.raises(PDParseError):
        parse_pd(text)


def test_edge_seen_once_fails_validation():
    with pytest.raises(DiagramValidationError) as info:
        parse_pd('X(1,2,3,4)')
    assert info.value.problems


def test_basepoint_must_be_an_edge():
    with pytest.raises(DiagramValidationError):
        parse_pd(RIGHT_TREFOIL + ' bp=9')


def test_validate_reports_crossingless_unlink():
    report = validate(parse_pd('loops=2'))
    assert report.passed
    assert 'crossingless' in report.notes[0]


def test_crossingless_unknot():
    unknot = parse_pd('loops=1')
    assert unknot.is_crossingless
    assert unknot.loop_count == 1
    assert component_count(unknot) == 1


def test_mirror_is_an_involution(right_trefoil, figure_eight):
    for diagram in (right_trefoil, figure_eight):
        assert mirror(mirror(diagram)) == diagram
        assert writhe(mirror(diagram)) == -writhe(diagram)


def test_figure_eight_has_zero_writhe(figure_eight):
    assert writhe(figure_eight) == 0


def test_component_count():
    assert component_count(torus_knot(2, 5)) == 1
    assert component_count(braid_closure(2, [1, 1])) == 2
    assert component_count(parse_pd(RIGHT_TREFOIL + ' loops=1')) == 2


def test_digest_ignores_edge_labels():
    shifted = 'X(2,6,3,5) X(4,2,5,1) X(6,4,1,3)'
    assert diagram_digest(parse_pd(shifted)) == diagram_digest(parse_pd(RIGHT_TREFOIL))


def test_digest_sees_basepoint_and_loops(right_trefoil):
    plain = diagram_digest(right_trefoil)
    assert diagram_digest(right_trefoil.with_basepoint(1)) != plain
    assert diagram_digest(parse_pd(RIGHT_TREFOIL + ' loops=1')) != plain


def test_digest_distinguishes_chirality():
    assert diagram_digest(parse_pd(RIGHT_TREFOIL)) != diagram_digest(parse_pd(LEFT_TREFOIL))


def _reordered(diagram, order):
    return Diagram(tuple(diagram.crossings[i] for i in order), diagram.edge_count, diagram.basepoint,
                   diagram.name, diagram.free_loops)


@pytest.mark.parametrize('word', [[1, 2, 2, 1, 1, 2, 2, 1], [1, 1, 2, 2, 3, 3, 1, 1], [1, 1, 2, 2, 3, 3]])
def test_digest_ignores_crossing_order_of_links(word):
    link = braid_closure(max(word) + 1, word)
    assert component_count(link) >= 3
    expected = diagram_digest(link)
    rng = random.Random(11)
    for _ in range(25):
        order = list(range(link.crossing_count))
        rng.shuffle(order)
        assert diagram_digest(_reordered(link, order)) == expected, order


def test_digest_of_split_diagram_ignores_piece_order():
    other = 'X(7,11,8,10) X(9,7,10,12) X(11,9,12,8)'
    first = parse_pd(f'{RIGHT_TREFOIL} {other}')
    second = parse_pd(f'{other} {RIGHT_TREFOIL}')
    assert diagram_digest(first) == diagram_digest(second)
    assert diagram_digest(first.with_basepoint(1)) == diagram_digest(second.with_basepoint(1))
    assert diagram_digest(first.with_basepoint(1)) == diagram_digest(first.with_basepoint(7))


def test_from_unoriented_recovers_trefoil():
    # each tuple starts at the outgoing under-strand
    diagram, relabel = from_unoriented([(2, 4, 1, 5), (4, 6, 3, 1), (6, 2, 5, 3)])
    assert diagram.crossing_count == 3
    assert component_count(diagram) == 1
    assert writhe(diagram) == 3
    assert sorted(relabel) == [1, 2, 3, 4, 5, 6]
