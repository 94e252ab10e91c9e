from concurrent.futures import Future, ThreadPoolExecutor, wait, FIRST_EXCEPTION
from typing import Callable, Dict, List, Optional, Sequence, TypeVar

from rich.console import Console
from rich.progress import Progress, SpinnerColumn, BarColumn, TextColumn, TimeElapsedColumn

from .base import BaseRunner

T = TypeVar("T")
R = TypeVar("R")

console = Console(stderr=True)


class ThreadPoolRunner(BaseRunner):
    """Evaluates sweep cells on a thread pool.

    Results are buffered and returned in input order regardless of completion
    order. The first failing cell cancels the remaining work and its exception
    is re-raised.
    """

    def __init__(self, threads: int = 1, show_progress: bool = True):
        if threads < 1:
            raise ValueError(f"threads must be >= 1, got {threads}")
        self.threads = threads
        self.show_progress = show_progress

    def map(self, func: Callable[[T], R], items: Sequence[T], description: str = "Evaluating") -> List[R]:
        items = list(items)
        if not items:
            return []

        progress_columns = (
            SpinnerColumn(),
            "[progress.description]{task.description}",
            BarColumn(),
            "[progress.percentage]{task.percentage:>3.0f}%",
            TextColumn("Cells: [progress.completed]{task.completed} / [progress.total]{task.total}"),
            TimeElapsedColumn(),
        )
        results: Dict[int, R] = {}
        with Progress(*progress_columns, console=console, transient=True, disable=not self.show_progress) as progress:
            task_id = progress.add_task(description, total=len(items))
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                futures: Dict[Future, int] = {executor.submit(func, item): i for i, item in enumerate(items)}
                pending = set(futures)
                while pending:
                    done, pending = wait(pending, return_when=FIRST_EXCEPTION)
                    for future in done:
                        error: Optional[BaseException] = future.exception()
                        if error is not None:
                            for other in pending:
                                other.cancel()
                            raise error
                        results[futures[future]] = future.result()
                        progress.update(task_id, advance=1)
        return [results[i] for i in range(len(items))]
