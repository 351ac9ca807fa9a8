from flask import Flask
from flask_sqlalchemy import SQLAlchemy
from flask_cors import CORS
from dotenv import load_dotenv
import os

# Initialize extensions
db = SQLAlchemy()


def create_app(overrides=None):
    load_dotenv()
    app = Flask(__name__)

    # ===== DATABASE CONFIGURATION =====
    # Relative sqlite paths land in the Flask instance folder
    app.config['SQLALCHEMY_DATABASE_URI'] = os.environ.get('DATABASE_URL', 'sqlite:///compositions.db')
    app.config['SQLALCHEMY_TRACK_MODIFICATIONS'] = False

    # ===== BENCHMARK / GENERATION LIMITS =====
    app.config['BENCH_CELL_TIMEOUT'] = float(os.environ.get('BENCH_CELL_TIMEOUT', '120'))
    app.config['BENCH_MAX_REPETITIONS'] = int(os.environ.get('BENCH_MAX_REPETITIONS', '50'))
    app.config['GENERATE_MAX_LIMIT'] = int(os.environ.get('GENERATE_MAX_LIMIT', '10000'))
    app.config['LOG_LEVEL'] = os.environ.get('LOG_LEVEL', 'INFO')

    if overrides:
        app.config.update(overrides)

    app.logger.setLevel(app.config['LOG_LEVEL'])

    # Initialize extensions with app
    db.init_app(app)
    CORS(app,
         resources={r"/api/*": {"origins": "*"}},
         allow_headers=["Content-Type"],
         methods=["GET", "POST", "OPTIONS"])

    # Register blueprints
    from routes.count_routes import count_bp
    from routes.generate_routes import generate_bp
    from routes.verify_routes import verify_bp
    from routes.bench_routes import bench_bp

    app.register_blueprint(count_bp, url_prefix='/api/count')
    app.register_blueprint(generate_bp, url_prefix='/api/generate')
    app.register_blueprint(verify_bp, url_prefix='/api/verify')
    app.register_blueprint(bench_bp, url_prefix='/api/bench')

    # Create tables
    with app.app_context():
        from models import bench_record  # noqa: F401 -- registers the tables on db
        try:
            db.create_all()
            app.logger.info("✅ Benchmark tables ready")
        except Exception as e:
            app.logger.error(f"❌ Error creating tables: {str(e)}")

    @app.route('/')
    def index():
        return {
            'message': 'Restricted integer compositions & partitions API',
            'status': 'running',
            'algorithms': ['naive', 'binomial', 'interval', 'successor'],
            'features': ['count', 'generate', 'verify', 'bench']
        }

    @app.route('/api/health')
    def health_check():
        """Health check endpoint to verify the results database"""
        try:
            from sqlalchemy import text
            db.session.execute(text('SELECT 1'))
            return {'status': 'healthy', 'database': 'connected'}, 200
        except Exception as e:
            return {
                'status': 'unhealthy',
                'database': 'disconnected',
                'error': str(e)
            }, 500

    return app


if __name__ == '__main__':
    # Routes import db from the `app` module, not from __main__
    import app as service
    port = int(os.environ.get('PORT', 5000))
    service.create_app().run(host='0.0.0.0', port=port, debug=False)
