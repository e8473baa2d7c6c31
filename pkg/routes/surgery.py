from flask import Blueprint, request
import logging
import traceback

from models.errors import KnotError
from surgery import surgery_table
from utils.responses import success_response, error_response
from utils.validators import validate_odd_q, validate_positive_int

surgery_bp = Blueprint('surgery', __name__)
logger = logging.getLogger(__name__)


@surgery_bp.route('/table', methods=['GET'])
def table():
    """Correspondence rows for +-1/n surgery on T(2,q)"""
    try:
        q = request.args.get('q', '5')
        n_max = request.args.get('nMax', '2')
        is_valid, message = validate_odd_q(q)
        if not is_valid:
            return error_response(message, 'INVALID_Q', 400)
        is_valid, message = validate_positive_int(n_max, 'nMax')
        if not is_valid:
            return error_response(message, 'INVALID_N', 400)

        rows = surgery_table(int(q), int(n_max))
        return success_response({'rows': [row.to_dict() for row in rows], 'count': len(rows)})

    except KnotError as e:
        return error_response(str(e), 'INVALID_PARAMETERS', 400)
    except Exception as e:
        logger.error(f'Surgery table error: {e}\n{traceback.format_exc()}')
        return error_response('Failed to build surgery table', 'SERVER_ERROR', 500)
