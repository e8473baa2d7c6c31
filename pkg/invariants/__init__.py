from invariants.goeritz import goeritz_matrix, determinant, is_split_diagram, trace_faces
from invariants.bracket import kauffman_bracket, jones_polynomial, jones_determinant

__all__ = [
    'goeritz_matrix', 'determinant', 'is_split_diagram', 'trace_faces',
    'kauffman_bracket', 'jones_polynomial', 'jones_determinant',
]
