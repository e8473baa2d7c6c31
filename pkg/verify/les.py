"""
Rank bounds for tau(+-1/n) from the unoriented skein exact triangle.

Resolving one crossing of the vertical twist region of tau(+-1/n) gives
tau(+-1/(n-1)) and tau(0), so
    rk tau(+-1/n) <= rk tau(+-1/(n-1)) + rk tau(0)
and by induction from tau(+-1) the rank is at most 16n -+ 1.
"""
import logging

from models.records import LesBoundRow, LesReport, SkeinTriple
from generators.templates import tau
from invariants.goeritz import determinant
from khovanov.ranks import kh_ranks

logger = logging.getLogger(__name__)


def _rank(slope, max_generators):
    return kh_ranks(tau(slope), reduced=True, max_generators=max_generators).total


def les_bound_check(n_max=2, max_generators=None):
    if n_max < 1:
        raise ValueError(f'n_max must be at least 1, got {n_max}')
    zero = _rank('0', max_generators)
    report = LesReport()
    for sign in (1, -1):
        previous = None
        for n in range(1, n_max + 1):
            rank = _rank(f'{sign}/{n}', max_generators)
            row = LesBoundRow(
                n=n,
                sign=sign,
                rank=rank,
                previous_rank=previous,
                tau_zero_rank=zero,
                recursive_bound=None if previous is None else previous + zero,
                closed_bound=zero * n - sign,
                anchor=previous is None,
            )
            if not (row.recursive_holds and row.closed_holds):
                logger.error(f'Rank bound violated for tau({sign}/{n}): {row.to_dict()}')
            else:
                logger.info(f'tau({sign}/{n}): rank {rank} <= {row.closed_bound}'
                            f'{" (equality)" if row.equality else ""}')
            report.rows.append(row)
            previous = rank
    return report


def skein_triple(n, kind='reciprocal'):
    """
    Determinants of a tau closure and its two resolutions at a twist crossing.

    kind='reciprocal': tau(1/n) resolves to tau(1/(n-1)) and tau(0).
    kind='integer': tau(n) resolves to tau(n-1) and tau(1/0).
    """
    if kind == 'reciprocal':
        slopes = (f'1/{n}', f'1/{n - 1}', '0')
    elif kind == 'integer':
        slopes = (str(n), str(n - 1), '1/0')
    else:
        raise ValueError(f'kind must be reciprocal or integer, got {kind!r}')
    dets = [determinant(tau(s)) for s in slopes]
    triple = SkeinTriple(
        diagram=f'tau({slopes[0]})',
        zero_resolution=f'tau({slopes[1]})',
        one_resolution=f'tau({slopes[2]})',
        determinants=dets,
    )
    logger.debug(f'skein triple {triple.to_dict()}')
    return triple
