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
"""pairformer."""
from typing import Iterator, Optional

from .commands import run
from .identifiers import __version__
from .internal.arg_parsing import parse_args
from .internal.logging_utils import setup_logger

__all__ = ("__version__", "cli")


def cli(raw_args: Optional[Iterator[str]] = None) -> int:
    """CLI entry point.  Processes arguments, sets up logging, and runs the requested command.

    :returns: Execution return value intended for ``sys.exit()``
    """
    args = parse_args(raw_args)

    setup_logger(args.verbosity, args.quiet)

    return run(args)
