import logging
import threading
from typing import Optional

from mcrhdc.config import MCRHDC_LOG_LEVEL


# Custom formatter to include the worker thread name
class WorkerFormatter(logging.Formatter):
    """
    Custom formatter that prefixes log messages with the worker thread name.

    Sweeps fan out over a thread pool, so the thread name identifies which
    (model, codebook) or (dataset, seed) task produced a line.
    """

    def format(self, record: logging.LogRecord) -> str:
        """
        Format log record with worker information.

        Args:
            record (logging.LogRecord): The log record to format.

        Returns:
            str: Formatted log message with the worker name.
        """
        thread_name = threading.current_thread().name
        worker = "main" if thread_name == "MainThread" else thread_name

        formatted = super().format(record)
        message = record.getMessage()
        return formatted.replace(message, f"[{worker}] {message}")


# Create logger
logger = logging.getLogger("mcrhdc")

formatter = WorkerFormatter(
    fmt='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

# Create console handler with custom formatter
console_handler = logging.StreamHandler()
console_handler.setFormatter(formatter)

logger.addHandler(console_handler)
logger.setLevel(MCRHDC_LOG_LEVEL)
logger.propagate = False

# Remove any existing handlers to avoid duplication
for handler in logger.handlers[:]:
    if isinstance(handler, logging.StreamHandler) and handler != console_handler:
        logger.removeHandler(handler)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger instance with the specified name.

    Children propagate to the package logger, so they share its handler
    and level.

    Args:
        name (Optional[str]): Logger name. If None, returns the main mcrhdc logger.

    Returns:
        logging.Logger: Logger instance.
    """
    if name is None:
        return logger
    return logging.getLogger(f"mcrhdc.{name}")


def set_log_level(level: str) -> None:
    """Change the package log level at runtime (used by the CLI ``--log-level`` flag)."""
    logger.setLevel(level.upper())
