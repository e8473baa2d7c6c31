"""
Named diagram families, addressed the same way from the command line and the API.
"""
from models.errors import GeneratorError
from generators.torus import torus_knot
from generators.rational import rational_knot
from generators.templates import tau, seifert_branch_set

FAMILY_ARGUMENTS = {
    'torus': ('p', 'q'),
    'tau': ('slope',),
    'seifert-branch': ('q', 'n', 'sign'),
    'rational': ('slope',),
}


def _integer(value, name):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise GeneratorError(f'{name} must be an integer, got {value!r}')


def generate_family(family, *args):
    """
    Build a diagram from a family name and its positional arguments:
    torus p q | tau r/s | seifert-branch q n sign | rational r/s [numerator|denominator]
    """
    if family not in FAMILY_ARGUMENTS:
        raise GeneratorError(f'Unknown family {family!r}; choose from {sorted(FAMILY_ARGUMENTS)}')
    expected = FAMILY_ARGUMENTS[family]
    extra = 1 if family == 'rational' else 0
    if not len(expected) <= len(args) <= len(expected) + extra:
        raise GeneratorError(f'{family} takes arguments: {" ".join(expected)}')

    if family == 'torus':
        return torus_knot(_integer(args[0], 'p'), _integer(args[1], 'q'))
    if family == 'tau':
        return tau(str(args[0]))
    if family == 'seifert-branch':
        return seifert_branch_set(_integer(args[0], 'q'), _integer(args[1], 'n'), args[2])
    closure = args[1] if len(args) > 1 else 'numerator'
    if closure not in ('numerator', 'denominator'):
        raise GeneratorError(f'closure must be numerator or denominator, got {closure!r}')
    return rational_knot(str(args[0]), closure)
