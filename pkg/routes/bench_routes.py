import io
import math

from flask import Blueprint, Response, request, jsonify, current_app
from app import db
from models.bench import (ExperimentConfig, environment_description, run_experiment, summarize_ratio,
                          write_csv)
from models.bench_record import BenchRun, BenchResult
from models.errors import BenchBusyError
from models.generation import GeneratorKind

bench_bp = Blueprint('bench', __name__)


def _config_from_body(data):
    preset = data.get('preset', 'custom')
    timeout = data.get('cell_timeout', current_app.config['BENCH_CELL_TIMEOUT'])
    if preset == 'custom':
        return ExperimentConfig(**{**data, 'cell_timeout': timeout})
    return ExperimentConfig.preset_config(
        preset,
        repetitions=data.get('repetitions'),
        warmup=data.get('warmup'),
        algorithms=data.get('algorithms'),
        cell_timeout=timeout
    )


# ==================== RUNS ====================

@bench_bp.route('/runs', methods=['POST'])
def create_run():
    """Run a benchmark synchronously and store its rows"""
    try:
        data = request.get_json(silent=True)
        if not isinstance(data, dict):
            return jsonify({'error': 'JSON body required'}), 400

        config = _config_from_body(data)
        cap = current_app.config['BENCH_MAX_REPETITIONS']
        if config.repetitions > cap:
            return jsonify({'error': f'repetitions {config.repetitions} exceeds the server cap of {cap}'}), 400

        current_app.logger.info(f"🚀 Bench run started: preset={config.preset}, reps={config.repetitions}")
        rows = run_experiment(config)

        run = BenchRun(
            preset=config.preset,
            a=config.a,
            b=config.b,
            repetitions=config.repetitions,
            warmup=config.warmup,
            environment=environment_description()[:255]
        )
        for row in rows:
            run.results.append(BenchResult.from_row(row))
        db.session.add(run)
        db.session.commit()

        current_app.logger.info(f"✅ Bench run {run.runId} stored with {len(rows)} rows")
        return jsonify({
            'message': 'Benchmark completed',
            'run': run.to_dict(include_rows=True)
        }), 201

    except BenchBusyError as e:
        return jsonify({'error': str(e)}), 409
    except ValueError as e:
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        db.session.rollback()
        current_app.logger.exception("bench run failed")
        return jsonify({'error': str(e)}), 500


@bench_bp.route('/runs', methods=['GET'])
def list_runs():
    """All stored runs, newest first (rows omitted)"""
    try:
        runs = BenchRun.query.order_by(BenchRun.runId.desc()).all()

        return jsonify({
            'runs': [run.to_dict() for run in runs],
            'count': len(runs)
        }), 200

    except Exception as e:
        return jsonify({'error': str(e)}), 500


@bench_bp.route('/runs/<int:run_id>', methods=['GET'])
def get_run(run_id):
    try:
        run = db.session.get(BenchRun, run_id)

        if not run:
            return jsonify({'error': 'Bench run not found'}), 404

        return jsonify({'run': run.to_dict(include_rows=True)}), 200

    except Exception as e:
        return jsonify({'error': str(e)}), 500


@bench_bp.route('/runs/<int:run_id>/ratio', methods=['GET'])
def get_ratio(run_id):
    """Mean-time ratio per k, default interval over successor"""
    try:
        run = db.session.get(BenchRun, run_id)

        if not run:
            return jsonify({'error': 'Bench run not found'}), 404

        numerator = GeneratorKind(request.args.get('numerator', GeneratorKind.INTERVAL_RECURSION.value))
        denominator = GeneratorKind(request.args.get('denominator', GeneratorKind.SUCCESSOR.value))
        ratios = summarize_ratio(run.rows(), numerator, denominator)

        return jsonify({
            'runId': run.runId,
            'numerator': numerator.value,
            'denominator': denominator.value,
            # JSON has no infinity; null marks a zero or timed-out denominator
            'ratios': [{'k': k, 'ratio': None if math.isinf(r) else r} for k, r in ratios]
        }), 200

    except ValueError as e:
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        return jsonify({'error': str(e)}), 500


@bench_bp.route('/runs/<int:run_id>/csv', methods=['GET'])
def get_run_csv(run_id):
    try:
        run = db.session.get(BenchRun, run_id)

        if not run:
            return jsonify({'error': 'Bench run not found'}), 404

        out = io.StringIO()
        write_csv(run.rows(), out, environment=run.environment)

        return Response(
            out.getvalue(),
            mimetype='text/csv',
            headers={'Content-Disposition': f'attachment; filename=bench_run_{run.runId}.csv'}
        )

    except Exception as e:
        return jsonify({'error': str(e)}), 500
