from flask import Blueprint, request
import logging
import traceback

from models.errors import KnotError, ResourceLimitError, CrossingLimitError
from diagrams import parse_pd
from khovanov import kh_ranks, graded_euler
from khovanov.ranks import ENGINES
from invariants import determinant, jones_polynomial, jones_determinant
from utils.responses import success_response, error_response
from utils.validators import validate_pd

invariants_bp = Blueprint('invariants', __name__)
logger = logging.getLogger(__name__)


def _diagram_from_request():
    """Returns (diagram, None) or (None, error response)"""
    data = request.get_json(silent=True)
    if not data:
        return None, error_response('Request body is required', 'INVALID_REQUEST', 400)
    text = data.get('pd')
    is_valid, message = validate_pd(text)
    if not is_valid:
        return None, error_response(message, 'INVALID_PD', 400)
    return parse_pd(text, name=data.get('name')), None


@invariants_bp.route('/kh', methods=['POST'])
def khovanov():
    """Khovanov rank table of a PD diagram"""
    try:
        diagram, failure = _diagram_from_request()
        if failure:
            return failure
        data = request.get_json(silent=True)
        reduced = bool(data.get('reduced', True))
        engine = data.get('engine', 'auto')
        if engine not in ENGINES:
            return error_response(f'engine must be one of: {", ".join(ENGINES)}', 'INVALID_ENGINE', 400)
        ranks = kh_ranks(diagram, reduced=reduced, engine=engine)
        result = ranks.to_dict()
        result['eulerCharacteristic'] = graded_euler(ranks).coefficients()
        return success_response(result)

    except (ResourceLimitError, CrossingLimitError) as e:
        logger.warning(f'Khovanov computation over budget: {e}')
        return error_response(str(e), 'RESOURCE_LIMIT', 422)
    except KnotError as e:
        logger.warning(f'Khovanov request rejected: {e}')
        return error_response(str(e), 'INVALID_DIAGRAM', 400)
    except Exception as e:
        logger.error(f'Khovanov error: {e}\n{traceback.format_exc()}')
        return error_response('Failed to compute Khovanov homology', 'SERVER_ERROR', 500)


@invariants_bp.route('/det', methods=['POST'])
def det():
    try:
        diagram, failure = _diagram_from_request()
        if failure:
            return failure
        return success_response({'determinant': determinant(diagram), 'crossings': diagram.crossing_count})

    except KnotError as e:
        return error_response(str(e), 'INVALID_DIAGRAM', 400)
    except Exception as e:
        logger.error(f'Determinant error: {e}\n{traceback.format_exc()}')
        return error_response('Failed to compute determinant', 'SERVER_ERROR', 500)


@invariants_bp.route('/jones', methods=['POST'])
def jones():
    """Jones polynomial in q (t = q^2) and the determinant it implies"""
    try:
        diagram, failure = _diagram_from_request()
        if failure:
            return failure
        poly = jones_polynomial(diagram)
        return success_response({
            'coefficients': poly.coefficients(),
            'polynomial': poly.format('q'),
            'determinant': jones_determinant(diagram),
        })

    except CrossingLimitError as e:
        return error_response(str(e), 'RESOURCE_LIMIT', 422)
    except KnotError as e:
        return error_response(str(e), 'INVALID_DIAGRAM', 400)
    except Exception as e:
        logger.error(f'Jones error: {e}\n{traceback.format_exc()}')
        return error_response('Failed to compute Jones polynomial', 'SERVER_ERROR', 500)
