"""
Diagram families: rational tangles, torus knots and the cinqfoil template.
"""
from math import gcd

import pytest

from models.tangle import Slope, TwistWord
from models.errors import GeneratorError, SlopeError
from diagrams import component_count, writhe, diagram_digest
from generators import (
    continued_fraction, evaluate_twist_word, rational_tangle, rational_knot,
    torus_knot, braid_closure, cinqfoil_template, tau, seifert_branch_set,
    generate_family, crossing_tangle, tangle_sum, numerator_closure, denominator_closure,
    attach_rational,
)
from generators.templates import numerator_closure_of, denominator_closure_of
from invariants import determinant

SLOPES = [(r, s) for r in range(-9, 10) for s in range(1, 8) if gcd(r, s) == 1]


@pytest.mark.parametrize('r,s', SLOPES)
def test_twist_word_evaluates_back(r, s):
    assert evaluate_twist_word(continued_fraction(Slope(r, s))) == Slope(r, s)


def test_twist_words_round_trip_up_to_one_hundred():
    for r in range(-100, 101):
        for s in range(1, 101):
            if gcd(r, s) == 1:
                assert evaluate_twist_word(continued_fraction(Slope(r, s))) == Slope(r, s)


def test_infinity_has_empty_word():
    assert len(continued_fraction(Slope(1, 0))) == 0
    assert evaluate_twist_word(TwistWord(())) == Slope(1, 0)


def test_slope_parsing():
    assert Slope.parse('-2/4') == Slope(-1, 2)
    assert Slope.parse('inf').is_infinite
    assert str(Slope.parse('3')) == '3'
    with pytest.raises(SlopeError):
        Slope.parse('a/b')
    with pytest.raises(SlopeError):
        Slope(0, 0)


@pytest.mark.parametrize('r,s', [(r, s) for r, s in SLOPES if abs(r) <= 7 and s <= 5])
def test_two_bridge_determinant(r, s):
    assert determinant(rational_knot(Slope(r, s))) == abs(r)


@pytest.mark.parametrize('s', range(1, 21))
def test_rational_closure_determinants(s):
    for r in range(-20, 21):
        if gcd(r, s) != 1:
            continue
        assert determinant(rational_knot(Slope(r, s))) == abs(r)
        assert determinant(rational_knot(Slope(r, s), 'denominator')) == s


def test_rational_closures_of_trivial_tangles():
    assert determinant(rational_knot('0')) == 0
    assert component_count(rational_knot('0')) == 2
    assert determinant(rational_knot('1/0')) == 1
    assert component_count(rational_knot('1/0', 'denominator')) == 2


def test_integer_tangle_closes_to_torus_link():
    three = rational_knot('3')
    assert three.crossing_count == 3
    assert abs(writhe(three)) == 3
    assert determinant(three) == 3


def test_tangle_sum_adds_twists():
    two = tangle_sum(crossing_tangle(1), crossing_tangle(1))
    assert numerator_closure(two).crossing_count == 2
    assert component_count(numerator_closure(two)) == 2


def test_denominator_closure_of_twists_is_unknotted():
    two = tangle_sum(crossing_tangle(1), crossing_tangle(1))
    closed = denominator_closure(two)
    assert component_count(closed) == 1
    assert determinant(closed) == 1


@pytest.mark.parametrize('p,q', [(2, 3), (2, 5), (3, 4), (3, 5), (5, 9), (5, 11)])
def test_torus_knot_crossings(p, q):
    knot = torus_knot(p, q)
    assert knot.crossing_count == q * (p - 1)
    assert writhe(knot) == q * (p - 1)
    assert component_count(knot) == 1


@pytest.mark.parametrize('p', range(2, 21))
def test_torus_link_components_are_gcd(p):
    for q in range(p + 1, 22):
        link = braid_closure(p, list(range(1, p)) * q)
        assert component_count(link) == gcd(p, q)


@pytest.mark.parametrize('p,q', [(4, 6), (3, 2), (1, 3), (3, 3), (2.0, 5)])
def test_torus_knot_rejects_bad_parameters(p, q):
    with pytest.raises(GeneratorError):
        torus_knot(p, q)


def test_braid_closure_keeps_untouched_strands_as_loops():
    diagram = braid_closure(3, [1, 1, 1])
    assert diagram.free_loops == 1
    assert component_count(diagram) == 2


def test_braid_word_must_fit_strands():
    with pytest.raises(GeneratorError):
        braid_closure(2, [2])


def test_cinqfoil_template_size():
    assert cinqfoil_template().crossing_count == 16


@pytest.mark.parametrize('slope,crossings', [('0', 16), ('1', 17), ('-1', 17), ('1/2', 18), ('-1/2', 18)])
def test_tau_crossing_counts(slope, crossings):
    assert tau(slope).crossing_count == crossings


def test_tau_closures():
    assert determinant(tau('0')) == 0
    assert determinant(tau('1/0')) == 1
    assert numerator_closure_of(cinqfoil_template()).crossing_count == 16
    assert determinant(denominator_closure_of(cinqfoil_template())) == 1


def test_attach_rational_fills_the_slot():
    filled = attach_rational(cinqfoil_template(), Slope(2, 1))
    assert filled.name == 'cinqfoil(2)'
    assert diagram_digest(filled) == diagram_digest(tau('2'))
    assert determinant(filled) == 2


@pytest.mark.parametrize('r,s', [(r, s) for r in range(-10, 11) for s in range(1, 11) if gcd(r, s) == 1])
def test_tau_determinant_is_numerator(r, s):
    assert determinant(tau(Slope(r, s))) == abs(r)


@pytest.mark.parametrize('q', [3, 5, 7])
@pytest.mark.parametrize('n', [1, 2])
@pytest.mark.parametrize('sign', ['+', '-'])
def test_seifert_branch_sets_cover_homology_spheres(q, n, sign):
    knot = seifert_branch_set(q, n, sign)
    expected = 2 * q * n - (1 if sign == '+' else -1)
    assert knot.name == f'T({q},{expected})'
    assert determinant(knot) == 1


def test_seifert_branch_set_rejects_even_q():
    with pytest.raises(GeneratorError):
        seifert_branch_set(4, 1, '+')


def test_generate_family():
    assert generate_family('torus', '5', '9').crossing_count == 36
    assert generate_family('tau', '-1').crossing_count == 17
    assert generate_family('seifert-branch', '5', '1', '-').name == 'T(5,11)'
    assert generate_family('rational', '5/2').crossing_count == 4
    with pytest.raises(GeneratorError):
        generate_family('pretzel', '1')
    with pytest.raises(GeneratorError):
        generate_family('torus', '5')
