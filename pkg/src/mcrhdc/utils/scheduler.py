import traceback
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Hashable, List, Optional

from mcrhdc.utils.logger import logger
from mcrhdc.utils.progress import create_sweep_progress_bar


class SweepTask:
    """One independent cell of a sweep, e.g. ``(model, d, codebook)``."""

    def __init__(self, id: Hashable, payload: Any = None):
        self.id = id
        self.payload = payload
        self.status: str = "pending"
        self.error_count: int = 0
        self.error_infos: list[str] = []
        self.result: Any = None

    def add_error(self, error_info: str):
        self.error_count += 1
        self.error_infos.append(error_info)

    def __repr__(self) -> str:
        return f"SweepTask({self.id!r}, {self.status})"


class SweepExecutor:
    """
    Fans sweep tasks out over a thread pool.

    numpy releases the GIL inside its kernels, so threads scale for these
    workloads. Results come back in task-list order whatever the completion
    order; every task draws from its own seeded stream, so the output does
    not depend on ``max_workers``.
    """

    def __init__(self, name: str, max_workers: int = 1, show_progress: Optional[bool] = None):
        self.name = name
        self.max_workers = max(1, max_workers)
        self.show_progress = show_progress

    def run(self, tasks: List[SweepTask], fn: Callable[[SweepTask], Any]) -> List[Any]:
        disable = None if self.show_progress is None else not self.show_progress
        first_error: Optional[BaseException] = None
        with create_sweep_progress_bar(len(tasks), self.name, disable=disable) as bar:
            if self.max_workers == 1:
                for task in tasks:
                    first_error = first_error or self._run_one(task, fn)
                    bar.update(1)
            else:
                with ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix=self.name) as pool:
                    futures = {pool.submit(self._run_one, task, fn): task for task in tasks}
                    for future in as_completed(futures):
                        error = future.result()
                        first_error = first_error or error
                        bar.update(1)
        failed = [t for t in tasks if t.status == "failed"]
        if failed:
            logger.error(f"[{self.name}] {len(failed)}/{len(tasks)} tasks failed, first: {failed[0].id!r}")
            raise first_error
        return [t.result for t in tasks]

    @staticmethod
    def _run_one(task: SweepTask, fn: Callable[[SweepTask], Any]) -> Optional[BaseException]:
        task.status = "running"
        try:
            task.result = fn(task)
            task.status = "finished"
            return None
        except Exception as e:
            task.add_error(traceback.format_exc())
            task.status = "failed"
            logger.warning(f"[{task.id!r}] task failed: {e}")
            return e
