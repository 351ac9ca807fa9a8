from flask import Blueprint, request, jsonify, current_app
from models.verify import run_verification
from routes.count_routes import _int_arg

verify_bp = Blueprint('verify', __name__)

# Keeps a request from tying up a worker on a huge sweep
MAX_SWEEP = {'nmax': 30, 'kmax': 10, 'bmax': 8}


@verify_bp.route('', methods=['GET'])
def get_verification():
    """Run the brute-force sweep, e.g. /api/verify?nmax=8&kmax=4&bmax=3"""
    try:
        bounds = {'nmax': 12, 'kmax': 6, 'bmax': 5}
        for name in bounds:
            value = _int_arg(request.args, name)
            if value is None:
                continue
            if not 0 <= value <= MAX_SWEEP[name]:
                return jsonify({'error': f'{name} must be between 0 and {MAX_SWEEP[name]}'}), 400
            bounds[name] = value

        report = run_verification(**bounds)
        if not report.passed:
            current_app.logger.error(f"❌ Verification failed: {report.failure}")

        return jsonify({'report': report.to_dict(), 'summary': report.summary()}), 200

    except ValueError as e:
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        current_app.logger.exception("verification crashed")
        return jsonify({'error': str(e)}), 500
