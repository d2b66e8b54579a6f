"""Progress bars and completion messages for the experiment harnesses."""

import sys

import tqdm

from mcrhdc.utils.logger import logger

# ANSI color codes for terminal output
BLUE = "\033[94m"
GREEN = "\033[92m"
CYAN = "\033[96m"
BOLD = "\033[1m"
RESET = "\033[0m"


def create_sweep_progress_bar(
    total: int, harness: str, disable: bool | None = None
) -> tqdm.tqdm:
  """Create a styled progress bar for a sweep.

  Args:
    total: Number of tasks in the sweep.
    harness: Harness name shown in the bar ("capacity", "classify", ...).
    disable: Force-disable the bar. Defaults to disabling when stderr is not a TTY.

  Returns:
    A configured tqdm progress bar.
  """
  if disable is None:
    disable = not sys.stderr.isatty()
  return tqdm.tqdm(
      total=total,
      desc=f"{BLUE}{BOLD}MCRHDC{RESET}: {GREEN}{harness}{RESET}",
      bar_format="{desc}: {percentage:3.0f}%|{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}]",
      disable=disable,
      dynamic_ncols=True,
  )


def print_sweep_summary(harness: str, rows: int, elapsed_time: float, output: str | None) -> None:
  """Log a styled sweep completion message.

  Args:
    harness: Harness name.
    rows: Number of result rows produced.
    elapsed_time: Elapsed wall time in seconds.
    output: Output path, or None when results went to stdout.
  """
  target = output if output else "stdout"
  logger.info(
      f"{GREEN}✓{RESET} {harness}: {BOLD}{rows}{RESET} rows in "
      f"{BOLD}{elapsed_time:.2f}s{RESET} → {CYAN}{target}{RESET}"
  )
