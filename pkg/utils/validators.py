import re
from math import gcd

from models.errors import KnotError
from models.tangle import Slope

TORUS_FAMILIES = ('torus', 'tau', 'seifert-branch', 'rational')


def validate_pd(text):
    """
    Validate PD text before parsing
    Returns: (is_valid, error_message)
    """
    if text is None or not str(text).strip():
        return False, 'PD text is required'

    if not re.search(r'X|loops\s*=', str(text)):
        return False, 'PD text must contain X(a,b,c,d) tuples or a loops=<k> suffix'

    return True, None


def validate_slope(text):
    """
    Validate a slope written r/s, r or inf
    Returns: (is_valid, error_message)
    """
    if text is None or not str(text).strip():
        return False, 'Slope is required'
    try:
        Slope.parse(text)
    except KnotError as e:
        return False, str(e)
    return True, None


def validate_tier(tier):
    """
    Validate a verification tier ceiling: 1, 2 or 3
    Returns: (is_valid, error_message)
    """
    try:
        tier = int(tier)
    except (TypeError, ValueError):
        return False, 'Tier must be an integer'
    if tier not in (1, 2, 3):
        return False, 'Tier must be 1, 2 or 3'
    return True, None


def validate_positive_int(value, name):
    """
    Returns: (is_valid, error_message)
    """
    if isinstance(value, bool) or isinstance(value, float):
        return False, f'{name} must be an integer'
    try:
        number = int(value)
    except (TypeError, ValueError):
        return False, f'{name} must be an integer'
    if number <= 0:
        return False, f'{name} must be positive'
    return True, None


def validate_torus_params(p, q):
    """
    Validate torus knot parameters
    Requirements:
    - integers with 2 <= p < q
    - p and q coprime

    Returns: (is_valid, error_message)
    """
    for value, name in ((p, 'p'), (q, 'q')):
        is_valid, message = validate_positive_int(value, name)
        if not is_valid:
            return False, message
    p, q = int(p), int(q)
    if p < 2:
        return False, 'p must be at least 2'
    if q <= p:
        return False, 'q must be greater than p'
    if gcd(p, q) != 1:
        return False, f'p and q must be coprime, gcd is {gcd(p, q)}'
    return True, None


def validate_odd_q(q):
    """
    Validate the torus parameter of T(2,q) for surgery rows
    Returns: (is_valid, error_message)
    """
    is_valid, message = validate_positive_int(q, 'q')
    if not is_valid:
        return False, message
    if int(q) < 3 or int(q) % 2 == 0:
        return False, 'q must be an odd integer greater than 1'
    return True, None


def validate_sign(sign):
    if sign in (1, -1, '+', '-', '+1', '-1', 'plus', 'minus'):
        return True, None
    return False, 'Sign must be + or -'


def validate_flavor(flavor):
    if flavor in ('reduced', 'unreduced'):
        return True, None
    return False, 'Flavor must be reduced or unreduced'


def validate_family(family):
    if family in TORUS_FAMILIES:
        return True, None
    return False, f'Family must be one of: {", ".join(TORUS_FAMILIES)}'
