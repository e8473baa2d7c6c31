from flask import Blueprint, request
import logging
import traceback

from models.errors import KnotError
from generators.families import generate_family
from utils.formatting import diagram_summary
from utils.responses import success_response, error_response
from utils.validators import validate_family

diagrams_bp = Blueprint('diagrams', __name__)
logger = logging.getLogger(__name__)


@diagrams_bp.route('/generate', methods=['POST'])
def generate():
    """Generate a diagram of a named family"""
    try:
        data = request.get_json(silent=True)
        if not data:
            return error_response('Request body is required', 'INVALID_REQUEST', 400)

        family = data.get('family')
        is_valid, message = validate_family(family)
        if not is_valid:
            return error_response(message, 'INVALID_FAMILY', 400)

        if family == 'torus':
            args = [data.get('p'), data.get('q')]
        elif family == 'seifert-branch':
            args = [data.get('q'), data.get('n'), data.get('sign', '+')]
        else:
            args = [data.get('slope')]
            if family == 'rational' and data.get('closure'):
                args.append(data['closure'])
        if any(a is None for a in args):
            return error_response(f'Missing parameters for family {family}', 'MISSING_FIELDS', 400)

        diagram = generate_family(family, *args)
        logger.info(f'Generated {diagram.name}: {diagram.crossing_count} crossings')
        return success_response(diagram_summary(diagram))

    except KnotError as e:
        logger.warning(f'Generation rejected: {e}')
        return error_response(str(e), 'INVALID_PARAMETERS', 400)
    except Exception as e:
        logger.error(f'Generation error: {e}\n{traceback.format_exc()}')
        return error_response('Failed to generate diagram', 'SERVER_ERROR', 500)
