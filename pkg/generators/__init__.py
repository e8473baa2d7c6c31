from generators.tangles import (
    crossing_tangle, zero_tangle, infinity_tangle, tangle_sum, tangle_product,
    rotate, mirror_tangle, twist_horizontal, twist_vertical,
    numerator_closure, denominator_closure, attach
)
from generators.rational import continued_fraction, evaluate_twist_word, rational_tangle, rational_knot
from generators.torus import torus_knot, braid_closure
from generators.templates import (
    cinqfoil_template, attach_rational, tau, seifert_branch_set, template_by_name
)
from generators.families import generate_family, FAMILY_ARGUMENTS

__all__ = [
    'crossing_tangle', 'zero_tangle', 'infinity_tangle', 'tangle_sum', 'tangle_product',
    'rotate', 'mirror_tangle', 'twist_horizontal', 'twist_vertical',
    'numerator_closure', 'denominator_closure', 'attach',
    'continued_fraction', 'evaluate_twist_word', 'rational_tangle', 'rational_knot',
    'torus_knot', 'braid_closure',
    'cinqfoil_template', 'attach_rational', 'tau', 'seifert_branch_set', 'template_by_name',
    'generate_family', 'FAMILY_ARGUMENTS',
]
