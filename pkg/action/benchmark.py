import logging
import time
from typing import Callable, List, Optional

from app.schemas.report_schema import BenchReport
from config.settings import settings
from core.unigraph import find_dist_unigraph
from graphs.generators import random_threshold_sequence

logger = logging.getLogger(__name__)


class BenchmarkRunner:
    def __init__(self, seed: Optional[int] = None, repeats: Optional[int] = None,
                 progress: Optional[Callable[[str], None]] = None):
        self.seed = settings.default_seed if seed is None else seed
        self.repeats = settings.bench_repeats if repeats is None else repeats
        self.progress = progress

    def run(self, sizes: Optional[List[int]] = None) -> List[BenchReport]:
        """
        Times the full pipeline on random threshold sequences, one per size.
        Returns the best wall time out of `repeats` runs for every size.
        """
        reports = []
        for n in sizes or settings.bench_sizes:
            seq = random_threshold_sequence(self.seed, n)
            best = None
            dist = 0
            for _ in range(max(1, self.repeats)):
                start = time.perf_counter()
                dist = find_dist_unigraph(seq).dist_number
                elapsed = time.perf_counter() - start
                best = elapsed if best is None else min(best, elapsed)
            reports.append(BenchReport(n=n, seconds=best, dist=dist))
            logger.info("bench n=%d: %.3fs", n, best)
            if self.progress:
                self.progress(f"✓ n={n}  {best:.3f}s")
        return reports
