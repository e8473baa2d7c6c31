from khovanov.cube import cube_complex
from khovanov.scanner import scan_ranks
from khovanov.ranks import (
    homology_ranks, total_rank, graded_euler, poincare_polynomial, format_table, kh_ranks
)

__all__ = [
    'cube_complex', 'scan_ranks', 'homology_ranks', 'total_rank', 'graded_euler',
    'poincare_polynomial', 'format_table', 'kh_ranks',
]
