"""
Diagram core: PD parsing, validation and elementary operations
"""
from diagrams.pd import parse_pd, render, validate
from diagrams.operations import (
    mirror, writhe, component_count, diagram_digest, signed_counts, oriented, canonical_form
)
from diagrams.orientation import from_unoriented, trace_components

__all__ = [
    'parse_pd', 'render', 'validate', 'mirror', 'writhe', 'component_count',
    'diagram_digest', 'signed_counts', 'oriented', 'canonical_form',
    'from_unoriented', 'trace_components'
]
