# Models package
# Value types shared by every layer
from models.diagram import Crossing, Diagram, ValidationReport
from models.tangle import Slope, TwistWord, Tangle, TangleTemplate
from models.homology import GradedComplex, KhRanks
from models.polynomial import LaurentPoly, GoeritzMatrix
from models.surgery import SurgerySlope, FibreSlope, OrbifoldBase, CorrespondenceRow
from models.records import (
    ClaimRecord, ClaimStatus, ClaimRelation, CacheEntry,
    LesBoundRow, LesReport, SkeinTriple, GrowthPoint, GrowthReport
)

__all__ = [
    'Crossing', 'Diagram', 'ValidationReport',
    'Slope', 'TwistWord', 'Tangle', 'TangleTemplate',
    'GradedComplex', 'KhRanks',
    'LaurentPoly', 'GoeritzMatrix',
    'SurgerySlope', 'FibreSlope', 'OrbifoldBase', 'CorrespondenceRow',
    'ClaimRecord', 'ClaimStatus', 'ClaimRelation', 'CacheEntry',
    'LesBoundRow', 'LesReport', 'SkeinTriple', 'GrowthPoint', 'GrowthReport',
]
