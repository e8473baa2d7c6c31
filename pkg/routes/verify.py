from flask import Blueprint, request
import logging
import traceback

from config import get_setting
from verify import reproduce_paper, les_bound_check
from utils.responses import success_response, error_response
from utils.validators import validate_tier, validate_positive_int

verify_bp = Blueprint('verify', __name__)
logger = logging.getLogger(__name__)


@verify_bp.route('/claims', methods=['GET'])
def claims():
    """Run the rank claims up to a tier; tier 3 over HTTP is refused"""
    try:
        tier = request.args.get('tier', '1')
        is_valid, message = validate_tier(tier)
        if not is_valid:
            return error_response(message, 'INVALID_TIER', 400)
        if int(tier) == 3:
            return error_response('Tier 3 runs only from the command line', 'TIER_NOT_ALLOWED', 400)

        records = reproduce_paper(int(tier))
        return success_response({
            'claims': [c.to_dict() for c in records],
            'passed': sum(c.passed for c in records),
            'total': len(records),
        })

    except Exception as e:
        logger.error(f'Claims error: {e}\n{traceback.format_exc()}')
        return error_response('Failed to verify claims', 'SERVER_ERROR', 500)


@verify_bp.route('/les', methods=['GET'])
def les():
    try:
        n_max = request.args.get('nMax', '1')
        is_valid, message = validate_positive_int(n_max, 'nMax')
        if not is_valid:
            return error_response(message, 'INVALID_N', 400)
        cap = get_setting('LES_HTTP_MAX_N')
        if int(n_max) > cap:
            return error_response(f'nMax above {cap} runs only from the command line', 'N_TOO_LARGE', 400)
        return success_response(les_bound_check(int(n_max)).to_dict())

    except Exception as e:
        logger.error(f'Rank bound error: {e}\n{traceback.format_exc()}')
        return error_response('Failed to check rank bound', 'SERVER_ERROR', 500)
