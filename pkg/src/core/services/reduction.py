"""Index-range reductions with an optional thread pool."""

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, TypeVar

from tqdm import tqdm

from ...config import get_config
from ...infrastructure.logging import get_logger
from ..exceptions import BudgetExceeded

T = TypeVar("T")

logger = get_logger("reduction")


@dataclass(frozen=True)
class ReductionPlan:
    """
    How an index range is cut up and processed.

    Attributes:
        total: Number of indices, processed as 0..total-1
        workers: Thread count; 1 runs inline
        chunk_size: Indices per task
        progress: Show a tqdm bar
    """

    total: int
    workers: int = 1
    chunk_size: int = 4096
    progress: bool = False

    @classmethod
    def from_config(
        cls,
        total: int,
        workers: Optional[int] = None,
        chunk_size: Optional[int] = None,
    ) -> "ReductionPlan":
        cfg = get_config().enumeration
        return cls(
            total=total,
            workers=max(1, workers if workers is not None else cfg.workers),
            chunk_size=max(1, chunk_size if chunk_size is not None else cfg.chunk_size),
            progress=cfg.progress,
        )

    def chunks(self) -> List[Tuple[int, int]]:
        return [
            (start, min(start + self.chunk_size, self.total))
            for start in range(0, self.total, self.chunk_size)
        ]


def reduce_range(
    what: str,
    plan: ReductionPlan,
    work: Callable[[int, int], T],
    combine: Callable[[T, T], T],
    initial: T,
) -> T:
    """
    Fold ``work(start, stop)`` over consecutive chunks of ``range(plan.total)``.

    Partial results are combined in chunk order whatever order the workers
    finish in, so the answer does not depend on ``plan.workers``.

    Args:
        what: Name used in log events
        plan: Range, chunking and parallelism
        work: Computes the partial result of one half-open index range
        combine: Associative merge of two partial results
        initial: Identity element of ``combine``

    Returns:
        The combined result
    """
    chunks = plan.chunks()
    logger.enumeration_start(what, plan.total, workers=plan.workers)
    started = time.perf_counter()
    bar = tqdm(total=plan.total, desc=what, disable=not plan.progress, leave=False)

    partials: Dict[int, T] = {}
    try:
        if plan.workers == 1 or len(chunks) <= 1:
            for i, (start, stop) in enumerate(chunks):
                partials[i] = work(start, stop)
                bar.update(stop - start)
        else:
            with ThreadPoolExecutor(max_workers=plan.workers) as executor:
                future_to_chunk = {
                    executor.submit(work, start, stop): i for i, (start, stop) in enumerate(chunks)
                }
                for future in as_completed(future_to_chunk):
                    i = future_to_chunk[future]
                    partials[i] = future.result()
                    start, stop = chunks[i]
                    bar.update(stop - start)
    finally:
        bar.close()

    result = initial
    for i in range(len(chunks)):
        result = combine(result, partials[i])
    logger.enumeration_end(what, plan.total, time.perf_counter() - started, workers=plan.workers)
    return result


def require_within(what: str, required: int, limit: int) -> None:
    """Log and raise BudgetExceeded when ``required`` exceeds ``limit``."""
    if required > limit:
        logger.budget_exceeded(what, required, limit)
        raise BudgetExceeded(f"{what} needs {required}, cap is {limit}", limit=limit, required=required)


def require_transversal_budget(what: str, n: int, max_vertices: Optional[int] = None) -> None:
    """Refuse to enumerate 3^n transversals above the configured vertex count."""
    limit = max_vertices if max_vertices is not None else get_config().enumeration.max_transversal_vertices
    if n > limit:
        logger.budget_exceeded(what, n, limit)
        raise BudgetExceeded(
            f"{what} enumerates 3^{n} transversals, cap is {limit} vertices",
            limit=limit,
            required=n,
        )
