"""
Report store for persisted secrecy analyses.
"""

import logging
import math
import os

import pandas as pd
from sqlalchemy import create_engine
from sqlalchemy.engine import make_url
from sqlalchemy.orm import sessionmaker

from listsource.config import DEFAULT_DATABASE_URL
from listsource.models.analysis_record import AnalysisRecord, Base

logger = logging.getLogger(__name__)


def _ensure_sqlite_directory(database_url):
    url = make_url(database_url)
    if url.get_backend_name() == 'sqlite' and url.database and url.database != ':memory:':
        directory = os.path.dirname(url.database)
        if directory:
            os.makedirs(directory, exist_ok=True)


class ReportStore:
    """Service for saving and querying analysis records."""

    def __init__(self, database_url=DEFAULT_DATABASE_URL):
        self.database_url = database_url
        _ensure_sqlite_directory(database_url)
        self.engine = create_engine(database_url)
        Session = sessionmaker(bind=self.engine)
        self.session = Session()

    def create_tables(self):
        Base.metadata.create_all(self.engine)

    def save_report(self, report, run_label=None):
        """Store a SecrecyReport and return the new record."""
        record = AnalysisRecord.from_report(report, run_label)
        self.session.add(record)
        self.session.commit()
        logger.info("stored analysis %d for %s", record.id, record.code_id)
        return record

    def get_reports(self, page=1, per_page=20, code_id=None):
        """Get records with pagination, optionally for one code."""
        query = self.session.query(AnalysisRecord)
        if code_id:
            query = query.filter(AnalysisRecord.code_id == code_id)

        total = query.count()
        offset = (page - 1) * per_page
        records = query.order_by(AnalysisRecord.id).offset(offset).limit(per_page).all()

        return {
            'items': records,
            'total': total,
            'pages': math.ceil(total / per_page)
        }

    def get_report_by_id(self, record_id):
        return self.session.query(AnalysisRecord).filter(AnalysisRecord.id == record_id).first()

    def get_violations(self):
        """Records whose measured values break a bound."""
        return self.session.query(AnalysisRecord).filter(
            AnalysisRecord.bounds_hold == False  # noqa: E712
        ).order_by(AnalysisRecord.id).all()

    def summary_frame(self, run_label=None):
        """All records as a DataFrame, one row per analysis."""
        query = self.session.query(AnalysisRecord)
        if run_label:
            query = query.filter(AnalysisRecord.run_label == run_label)
        rows = [r.to_dict() for r in query.order_by(AnalysisRecord.id).all()]
        return pd.DataFrame(rows)

    def close(self):
        """Close database session."""
        self.session.close()
        self.engine.dispose()
