from flask import Blueprint, request, jsonify, current_app
from models.errors import QueryError
from models.generation import first_composition, successor
from routes.count_routes import query_from_args, _int_arg

generate_bp = Blueprint('generate', __name__)


def _limit(args):
    cap = current_app.config['GENERATE_MAX_LIMIT']
    limit = _int_arg(args, 'limit')
    if limit is None:
        return cap
    if limit < 0:
        raise QueryError(f"limit must be nonnegative, got {limit}")
    if limit > cap:
        raise QueryError(f"limit {limit} exceeds the server cap of {cap}")
    return limit


# ==================== STREAMED ENUMERATION ====================

@generate_bp.route('', methods=['GET'])
def get_generated():
    """Enumerate up to `limit` objects; `truncated` says whether more exist"""
    try:
        query = query_from_args(request.args)
        limit = _limit(request.args)
        generations = query.generations()

        items = []
        for generation in generations:
            if len(items) == limit:
                break
            stream = iter(generation)
            try:
                for parts in stream:
                    items.append(list(parts))
                    if len(items) == limit:
                        break
            finally:
                stream.close()  # finalizes the stats of a cut-short stream
        truncated = len(items) == limit and query.count() > limit

        return jsonify({
            'objects': query.objects,
            'algorithm': query.generator_name(query.domain()),
            'items': items,
            'returned': len(items),
            'truncated': truncated,
            'stats': [
                {'k': g.spec.k, **g.stats.to_dict()} for g in generations
            ]
        }), 200

    except ValueError as e:
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        current_app.logger.exception("generate failed")
        return jsonify({'error': str(e)}), 500


# ==================== LEXICOGRAPHIC STEPPING ====================

@generate_bp.route('/first', methods=['GET'])
def get_first():
    """Lexicographically least composition of a single (n, k, A)"""
    try:
        spec = query_from_args(request.args).spec()
        first = first_composition(spec)

        return jsonify({
            'composition': list(first) if first is not None else None,
            'exists': first is not None
        }), 200

    except ValueError as e:
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        current_app.logger.exception("first composition failed")
        return jsonify({'error': str(e)}), 500


@generate_bp.route('/successor', methods=['POST'])
def post_successor():
    """Next composition after `current` (JSON body: n, k, min/max or set, current)"""
    try:
        data = request.get_json(silent=True)
        if not isinstance(data, dict):
            return jsonify({'error': 'JSON body required'}), 400

        current = data.get('current')
        if not isinstance(current, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in current):
            return jsonify({'error': 'current must be a list of integers'}), 400

        spec = query_from_args(data).spec()
        following = successor(current, spec)

        return jsonify({
            'composition': list(following) if following is not None else None,
            'last': following is None
        }), 200

    except ValueError as e:
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        current_app.logger.exception("successor failed")
        return jsonify({'error': str(e)}), 500
