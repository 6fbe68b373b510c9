"""
Run logs for verification stages.

log() always echoes to stderr; stdout carries only the rendered report. A run
may attach a log file to the calling thread, either directly with
set_log_file() / close_log_file() or through the run_log() context manager,
which also writes the banner header. Worker threads of run_parallel start
without a log file, so only the orchestrating thread writes to it.

    with run_log("verify.log", ["Bounds: max_delta=6"]):
        log("[VERIFY] stage 1/9: two-component degree identities")
"""

import sys
import threading
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Iterable, Iterator, Optional, TextIO, Union

BANNER_WIDTH = 80
RUN_LOG_TITLE = "SPIN MODULI VERIFICATION LOG"

_state = threading.local()


def get_log_file() -> Optional[TextIO]:
    """Log file attached to the current thread, or None."""
    return getattr(_state, "log_file", None)


def set_log_file(log_file: Optional[TextIO]) -> None:
    """Attach log_file to the current thread; None detaches."""
    _state.log_file = log_file


def log(message: str) -> None:
    """
    Echo message to stderr and append it to the thread's log file.

    Example:
        >>> log("[SUPPORTS] 4 valid supports")
    """
    print(message, file=sys.stderr)
    target = get_log_file()
    if target is None:
        return
    try:
        target.write(message + "\n")
        target.flush()
    except (OSError, ValueError):
        # closed or unwritable file; keep the run going
        pass


def close_log_file() -> None:
    """Detach and close the thread's log file. Idempotent."""
    target = get_log_file()
    set_log_file(None)
    if target is not None:
        try:
            target.close()
        except OSError:
            pass


def write_header(target: TextIO, lines: Iterable[str] = ()) -> None:
    """Banner with title, timestamp and one line per entry of lines."""
    rule = "=" * BANNER_WIDTH
    target.write(f"{rule}\n{RUN_LOG_TITLE}\n")
    target.write(f"Timestamp: {datetime.now().isoformat()}\n")
    for line in lines:
        target.write(f"{line}\n")
    target.write(f"{rule}\n\n")


@contextmanager
def run_log(path: Optional[Union[str, Path]], header: Iterable[str] = ()) -> Iterator[Optional[TextIO]]:
    """
    Open path as the thread's log file for the duration of the block.

    Yields None and logs to stderr only when path is None. The file is
    detached and closed even if the block raises.

    Raises:
        ValueError: If the log file cannot be opened
    """
    if path is None:
        yield None
        return
    try:
        target = open(path, "w", encoding="utf-8")
    except OSError as e:
        raise ValueError(f"cannot open log file {path}: {e.strerror or e}") from e
    write_header(target, header)
    set_log_file(target)
    try:
        yield target
    finally:
        close_log_file()
