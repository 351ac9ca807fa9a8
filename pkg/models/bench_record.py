from app import db
from datetime import datetime, timezone

from models.bench import ExperimentRow, TIMEOUT_SENTINEL


def _utcnow():
    return datetime.now(timezone.utc)


class BenchRun(db.Model):
    __tablename__ = 'bench_run'

    runId = db.Column(db.Integer, primary_key=True)
    preset = db.Column(db.String(20), nullable=False)
    a = db.Column(db.Integer, nullable=False)
    b = db.Column(db.Integer, nullable=False)
    repetitions = db.Column(db.Integer, nullable=False)
    warmup = db.Column(db.Integer, nullable=False)
    environment = db.Column(db.String(255))
    createdAt = db.Column(db.DateTime, default=_utcnow)

    # Relationships
    results = db.relationship('BenchResult', backref='run', lazy=True, cascade='all, delete-orphan',
                              order_by='BenchResult.resultId')

    def rows(self):
        return [result.to_row() for result in self.results]

    def to_dict(self, include_rows=False):
        data = {
            'runId': self.runId,
            'preset': self.preset,
            'a': self.a,
            'b': self.b,
            'repetitions': self.repetitions,
            'warmup': self.warmup,
            'environment': self.environment,
            'createdAt': self.createdAt.isoformat() if self.createdAt else None,
            'rowCount': len(self.results)
        }
        if include_rows:
            data['rows'] = [result.to_dict() for result in self.results]
        return data


class BenchResult(db.Model):
    __tablename__ = 'bench_result'

    resultId = db.Column(db.Integer, primary_key=True)
    runId = db.Column(db.Integer, db.ForeignKey('bench_run.runId'), nullable=False)
    algorithm = db.Column(db.String(20), nullable=False)
    n = db.Column(db.Integer, nullable=False)
    k = db.Column(db.Integer, nullable=False)
    a = db.Column(db.Integer, nullable=False)
    b = db.Column(db.Integer, nullable=False)
    count = db.Column(db.Text, nullable=False)  # decimal string, counts outgrow 64 bits
    nodeExpansions = db.Column(db.BigInteger, nullable=False)
    secondsMean = db.Column(db.Float)  # NULL when the cell timed out
    secondsStddev = db.Column(db.Float, default=0.0)
    timedOut = db.Column(db.Boolean, default=False)

    @classmethod
    def from_row(cls, row: ExperimentRow):
        return cls(
            algorithm=row.algorithm,
            n=row.n,
            k=row.k,
            a=row.a,
            b=row.b,
            count=str(row.count),
            nodeExpansions=row.node_expansions,
            secondsMean=None if row.timed_out else row.seconds,
            secondsStddev=row.seconds_stddev,
            timedOut=row.timed_out
        )

    def to_row(self) -> ExperimentRow:
        return ExperimentRow(
            algorithm=self.algorithm,
            n=self.n,
            k=self.k,
            a=self.a,
            b=self.b,
            count=int(self.count),
            node_expansions=self.nodeExpansions,
            seconds=TIMEOUT_SENTINEL if self.timedOut else self.secondsMean,
            seconds_stddev=self.secondsStddev or 0.0,
            timed_out=bool(self.timedOut)
        )

    def to_dict(self):
        return {
            'resultId': self.resultId,
            'runId': self.runId,
            'algorithm': self.algorithm,
            'n': self.n,
            'k': self.k,
            'a': self.a,
            'b': self.b,
            'count': self.count,
            'nodeExpansions': self.nodeExpansions,
            'secondsMean': self.secondsMean,
            'secondsStddev': self.secondsStddev,
            'timedOut': self.timedOut
        }
