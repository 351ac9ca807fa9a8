from flask import Blueprint, request, jsonify, current_app
from models.errors import QueryError
from models.query import CompositionQuery, parse_value_list

count_bp = Blueprint('count', __name__)


def _int_arg(args, name):
    raw = args.get(name)
    if raw is None or raw == '':
        return None
    if isinstance(raw, bool):
        raise QueryError(f"{name} must be an integer, got {raw!r}")
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise QueryError(f"{name} must be an integer, got {raw!r}")


def query_from_args(args):
    """Build a CompositionQuery from query-string or JSON parameters.

    Names match the CLI flags: n, k, kmin, kmax, min, max, set, objects,
    method, algo. ``set`` may be "1,3,4" or a JSON list.
    """
    values = args.get('set')
    if isinstance(values, list):
        values = ','.join(str(v) for v in values)
    return CompositionQuery(
        n=_int_arg(args, 'n'),
        k=_int_arg(args, 'k'),
        kmin=_int_arg(args, 'kmin'),
        kmax=_int_arg(args, 'kmax'),
        a=_int_arg(args, 'min'),
        b=_int_arg(args, 'max'),
        values=parse_value_list(values) if values else None,
        objects=args.get('objects') or 'compositions',
        method=args.get('method') or None,
        algo=args.get('algo') or None
    )


# ==================== COUNTING ====================

@count_bp.route('', methods=['GET'])
def get_count():
    """Count compositions or partitions, e.g. /api/count?n=6&k=5&min=1&max=3"""
    try:
        query = query_from_args(request.args)
        total = query.count()

        return jsonify({
            'count': str(total),
            'objects': query.objects,
            'n': query.n,
            'domain': str(query.domain())
        }), 200

    except ValueError as e:
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        current_app.logger.exception("count failed")
        return jsonify({'error': str(e)}), 500
