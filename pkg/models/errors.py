"""
Exception hierarchy shared by every package.
Callers at the edges (CLI, HTTP routes) translate these into exit codes
and error envelopes; library code raises and never prints.
"""


class KnotError(Exception):
    """Base class for all workbench errors"""


class PDParseError(KnotError):
    """Malformed PD text"""


class DiagramValidationError(KnotError):
    """A diagram violates one of its structural invariants"""

    def __init__(self, message, problems=None):
        super().__init__(message)
        self.problems = list(problems or [])


class OrientationError(KnotError):
    """Orientations cannot be traced consistently through the PD tuples"""


class SlopeError(KnotError):
    """Invalid slope or invalid surgery parameters"""


class GeneratorError(KnotError):
    """Invalid parameters for a diagram family"""


class TemplateError(KnotError):
    """Tangle template ends do not line up with the attached tangle"""


class CrossingLimitError(KnotError):
    """Exponential-time path refused a diagram above its crossing guard"""

    def __init__(self, crossings, limit, what='computation'):
        super().__init__(f'{what} is limited to {limit} crossings, diagram has {crossings}')
        self.crossings = crossings
        self.limit = limit


class ResourceLimitError(KnotError):
    """Scanning exceeded the configured generator ceiling"""

    def __init__(self, generators, limit):
        super().__init__(f'generator count {generators} exceeds ceiling {limit}')
        self.generators = generators
        self.limit = limit


class ComplexError(KnotError):
    """A constructed chain complex failed d∘d = 0"""
