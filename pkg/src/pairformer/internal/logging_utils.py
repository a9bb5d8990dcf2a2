# Copyright 2026 The pairformer authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You
# may not use this file except in compliance with the License. A copy of
# the License is located at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is
# distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF
# ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.
"""Logging setup for the command line and stage timing."""
import logging
import time
from contextlib import contextmanager
from typing import Dict, Iterator, Optional, Tuple

from pairformer.identifiers import LOGGER_NAME

__all__ = ("setup_logger", "log_duration")
_LOGGER = logging.getLogger(LOGGER_NAME)
_LOGGING_LEVELS: Dict[int, int] = {0: logging.CRITICAL, 1: logging.INFO, 2: logging.DEBUG}
_MAX_LOGGING_LEVEL: int = 2
_FORMAT_STRING: str = "%(asctime)s - %(processName)s - %(name)s - %(levelname)s - %(message)s"


class _BlacklistFilter(logging.Filter):  # pylint: disable=too-few-public-methods
    """Drop records from the named loggers.

    :param *args: logger names to drop
    """

    def __init__(self, *args: str):
        super(_BlacklistFilter, self).__init__()
        self.__blacklist = args

    def filter(self, record: logging.LogRecord) -> bool:
        """Keep records whose logger is not blacklisted."""
        return record.name not in self.__blacklist


def _logging_levels(verbosity: Optional[int], quiet: bool) -> Tuple[int, int]:
    """Map the ``-v`` count and ``-q`` onto levels for the pairformer logger and the root logger.

    The first two ``-v`` raise the pairformer logger to INFO then DEBUG; further ones do the same for the
    root logger.

    :returns: local and root logging levels
    """
    if quiet:
        return logging.CRITICAL, logging.CRITICAL

    if verbosity is None or verbosity <= 0:
        return logging.WARNING, logging.CRITICAL

    normalized_local = min(verbosity, _MAX_LOGGING_LEVEL)
    normalized_root = min(verbosity - normalized_local, _MAX_LOGGING_LEVEL)
    return _LOGGING_LEVELS[normalized_local], _LOGGING_LEVELS[normalized_root]


def setup_logger(verbosity: Optional[int], quiet: bool):
    """Attach stderr handlers to the pairformer and root loggers.

    :param verbosity: Number of ``-v`` flags
    :param quiet: Suppress everything below CRITICAL
    """
    local_logging_level, root_logging_level = _logging_levels(verbosity, quiet)

    formatter = logging.Formatter(_FORMAT_STRING)

    local_handler = logging.StreamHandler()
    local_handler.setFormatter(formatter)

    local_logger = logging.getLogger(LOGGER_NAME)
    local_logger.setLevel(local_logging_level)
    local_logger.addHandler(local_handler)

    root_handler = logging.StreamHandler()
    root_handler.setFormatter(formatter)
    root_handler.addFilter(_BlacklistFilter(LOGGER_NAME))

    root_logger = logging.getLogger()
    root_logger.setLevel(root_logging_level)
    root_logger.addHandler(root_handler)


@contextmanager
def log_duration(label: str) -> Iterator[None]:
    """Log the wall time spent in a block at INFO."""
    start = time.perf_counter()
    try:
        yield
    finally:
        _LOGGER.info("%s took %.3f s", label, time.perf_counter() - start)
