import logging
import time

from models.records import GrowthPoint, GrowthReport
from models.errors import KnotError
from generators.torus import torus_knot
from khovanov.ranks import kh_ranks

logger = logging.getLogger(__name__)


def growth_probe(q_list, p=5, max_generators=None):
    """Reduced ranks of T(p, q) for each q; entries over budget carry a note instead"""
    report = GrowthReport(p=p)
    for q in q_list:
        started = time.perf_counter()
        point = GrowthPoint(q=q)
        try:
            point.rank = kh_ranks(torus_knot(p, q), reduced=True, max_generators=max_generators).total
        except KnotError as e:
            logger.warning(f'T({p},{q}) skipped: {e}')
            point.note = str(e)
        point.seconds = time.perf_counter() - started
        report.points.append(point)
    return report
