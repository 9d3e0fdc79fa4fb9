"""
Audit Pipeline for the LIL audit toolkit.

Chains the corpus stages in order: Generate -> Analyze -> Evaluate.
A stage that reports "error" stops the chain; "partial" analysis continues
with the traces that could be computed.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from stages.analyze_stage import run_analyze
from stages.evaluate_stage import run_evaluate
from stages.generate_stage import run_generate
from stages.run_config import RunConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AuditPipeline:
    name: str
    description: str
    stages: Tuple[Tuple[str, Callable[[RunConfig], dict]], ...]

    def run(self, config: RunConfig, on_stage: Optional[Callable[[str, dict], None]] = None) -> dict:
        results: List[dict] = []
        for stage_name, stage in self.stages:
            logger.info("%s: starting %s", self.name, stage_name)
            result = stage(config.with_command(stage_name))
            result["stage"] = stage_name
            results.append(result)
            if on_stage:
                on_stage(stage_name, result)
            if result["status"] == "error":
                logger.error("%s: %s failed: %s", self.name, stage_name, result.get("error"))
                return {"status": "error", "stages": results}
        final = results[-1]
        return {"status": final["status"], "verdict": final.get("verdict"), "stages": results}


audit_pipeline = AuditPipeline(
    name="LilAuditPipeline",
    description="Generate a corpus, analyze its LIL traces and evaluate them against theory.",
    stages=(
        ("generate", run_generate),
        ("analyze", run_analyze),
        ("evaluate", run_evaluate),
    ),
)
