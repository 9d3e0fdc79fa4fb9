# Stages Package
"""Command stages of the LIL audit toolkit."""

from stages.run_config import RunConfig
from stages.tables_stage import run_tables
from stages.generate_stage import run_generate
from stages.analyze_stage import run_analyze
from stages.evaluate_stage import run_evaluate
from stages.audit_pipeline import audit_pipeline

__all__ = ["RunConfig", "run_tables", "run_generate", "run_analyze", "run_evaluate", "audit_pipeline"]
