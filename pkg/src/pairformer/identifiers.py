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
"""Unique identifiers and fixed limits used by pairformer."""
from typing import Tuple

__all__ = (
    "__version__",
    "LOGGER_NAME",
    "MAX_GROUP_ORDER",
    "MAX_GRAPH_VERTICES",
    "AUX_TYPE_PREFIX",
    "DOT_PALETTE",
)
__version__ = "0.1.0"
LOGGER_NAME = "pairformer"
MAX_GROUP_ORDER: int = 5040
MAX_GRAPH_VERTICES: int = 10 ** 6
AUX_TYPE_PREFIX: str = "aux"
DOT_PALETTE: Tuple[str, ...] = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
    "#393b79",
    "#637939",
    "#8c6d31",
    "#843c39",
    "#7b4173",
    "#000000",
)
