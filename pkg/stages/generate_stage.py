"""
Generate stage: materialise a corpus of m sequences plus its manifest.

Reruns resume from the manifest; only missing or damaged files are rebuilt.
"""

import logging
from typing import Callable, Optional

from stages.run_config import RunConfig
from tools.errors import CorpusError
from tools.generator_tool import write_corpus

logger = logging.getLogger(__name__)


def run_generate(config: RunConfig, progress: Optional[Callable[[dict], None]] = None) -> dict:
    """
    Write the configured corpus into ``config.corpus_path``.

    Args:
        config (RunConfig): Generator, m, sequence length and workers.
        progress: Optional per-file callback (receives the worker status dict).

    Returns:
        dict: A dictionary containing:
            - status: "success" or "error"
            - corpus_dir: Directory holding the sequence files
            - manifest: The manifest written next to them
            - error: Message when status is "error"
    """
    spec = config.generator_spec()
    logger.info(
        "Generating %d x %d-bit sequences with %s/%s into %s",
        config.m, config.sequence_bits, spec.kind, spec.hash, config.corpus_path,
    )
    try:
        manifest = write_corpus(
            spec,
            config.m,
            config.sequence_bits,
            config.corpus_path,
            workers=config.workers,
            progress=progress,
        )
    except CorpusError as e:
        logger.error("Corpus generation stopped: %s", e)
        return {"status": "error", "corpus_dir": str(config.corpus_path), "error": str(e), "index": e.index}
    return {"status": "success", "corpus_dir": str(config.corpus_path), "manifest": manifest}
