"""
Claim reproduction, the inductive rank bound and the growth probe.
"""
import pytest

from models.records import ClaimRecord, ClaimStatus, ClaimRelation
from verify import reproduce_paper, claims_exit_code, les_bound_check, skein_triple, growth_probe


def test_claim_status_follows_values():
    assert ClaimRecord(description='x', expected=3, computed=3, tier=1).status == ClaimStatus.PASS
    assert ClaimRecord(description='x', expected=3, computed=4, tier=1).status == ClaimStatus.FAIL
    skipped = ClaimRecord(description='x', expected=3, tier=3, status=ClaimStatus.SKIPPED, note='budget')
    assert skipped.status == ClaimStatus.SKIPPED
    assert skipped.line().startswith('SKIPPED')


def test_claim_tier_is_bounded():
    with pytest.raises(ValueError):
        ClaimRecord(description='x', expected=1, computed=1, tier=4)


def test_exit_code():
    passed = ClaimRecord(description='a', expected=1, computed=1, tier=1)
    failed = ClaimRecord(description='b', expected=1, computed=2, tier=1)
    skipped = ClaimRecord(description='c', expected=1, tier=3, status=ClaimStatus.SKIPPED)
    assert claims_exit_code([passed]) == 0
    assert claims_exit_code([passed, failed]) == 1
    assert claims_exit_code([passed, skipped]) == 0
    assert claims_exit_code([passed, skipped], strict=True) == 1


def test_tier_one_claims():
    claims = reproduce_paper(1)
    assert len(claims) == 5
    assert all(c.passed for c in claims), [c.line() for c in claims]
    computed = {c.description: c.computed for c in claims}
    assert computed['rk Kh~(tau(0))'] == 16
    assert computed['rk Kh~(tau(+1/1))'] == 15
    assert computed['rk Kh~(tau(-1/1))'] == 17
    assert computed['det(tau(0))'] == 0
    assert computed['rk Kh~(tau(1/0))'] == 1


def test_budget_exhaustion_skips_claims():
    claims = reproduce_paper(1, max_generators=8)
    statuses = {c.description: c.status for c in claims}
    assert statuses['rk Kh~(tau(0))'] == ClaimStatus.SKIPPED
    assert statuses['det(tau(0))'] == ClaimStatus.PASS
    assert claims_exit_code(claims) == 0
    assert claims_exit_code(claims, strict=True) == 1


def test_invalid_tier():
    with pytest.raises(ValueError):
        reproduce_paper(4)


@pytest.mark.slow
def test_tier_two_claims():
    claims = reproduce_paper(2)
    assert all(c.passed for c in claims), [c.line() for c in claims]
    distinct = [c for c in claims if c.relation == ClaimRelation.DISTINCT]
    assert len(distinct) == 2
    assert any('T(5,9)' in c.description and 'S2(2,5,9)' in c.description for c in distinct)


@pytest.mark.tier3
def test_tier_three_claims():
    claims = reproduce_paper(3)
    assert claims_exit_code(claims, strict=True) == 0


def test_rank_bound_anchor():
    report = les_bound_check(1)
    assert report.passed
    rows = {(r.sign, r.n): r for r in report.rows}
    assert rows[(1, 1)].rank == 15 and rows[(1, 1)].closed_bound == 15
    assert rows[(-1, 1)].rank == 17 and rows[(-1, 1)].closed_bound == 17
    assert all(r.anchor and r.equality for r in report.rows)
    assert report.to_dict()['rows'][0]['recursiveBound'] is None


@pytest.mark.slow
def test_rank_bound_second_step():
    report = les_bound_check(2)
    assert report.passed
    second = {r.sign: r for r in report.rows if r.n == 2}
    assert second[1].rank == 31 and second[1].recursive_bound == 31
    assert second[-1].rank == 33 and second[-1].recursive_bound == 33


@pytest.mark.parametrize('n', [1, 2, 3])
def test_reciprocal_skein_triples(n):
    triple = skein_triple(n)
    assert triple.holds
    assert triple.determinants == [1, 1, 0]


@pytest.mark.parametrize('n', [-3, 0, 1, 4])
def test_integer_skein_triples(n):
    triple = skein_triple(n, kind='integer')
    assert triple.holds
    assert triple.determinants == [abs(n), abs(n - 1), 1]


def test_growth_probe_records_budget_failures():
    report = growth_probe([3, 4, 7], p=2, max_generators=1000)
    ranks = [pt.rank for pt in report.points]
    assert ranks[0] == 3
    assert ranks[1] is None and 'link' in report.points[1].note
    assert ranks[2] == 7
    assert report.differences == [{'from': 3, 'to': 7, 'delta': 4}]


@pytest.mark.slow
def test_growth_of_five_strand_torus_knots():
    report = growth_probe([9, 11])
    assert [pt.rank for pt in report.points] == [57, 73]
    assert report.differences[0]['delta'] == 16
