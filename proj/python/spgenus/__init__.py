"""Exact genus distributions of series-parallel and treewidth-2 graphs.

Graphs are edge-list documents: one edge per line, two whitespace-separated
vertex labels, ``#`` comments allowed.  Counts are exact Python integers.
"""

from ._core import (
    __version__,
    compute_report,
    generate,
    genus_distribution,
    genus_distribution_oracle,
)

__all__ = [
    "__version__",
    "compute_report",
    "generate",
    "genus_distribution",
    "genus_distribution_oracle",
]
