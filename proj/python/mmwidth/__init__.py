"""Exact mm-width and friends for small graphs.

Graphs may be passed as ``Graph`` objects or as ``{"n": ..., "edges": [...]}``
dicts; results come back as plain dicts in the same JSON layout the ``mmw``
command prints.
"""

from ._core import (
    Contradiction,
    Graph,
    InvalidInput,
    MmwError,
    ResourceLimit,
    branchwidth,
    build_tree_representation,
    certify,
    check_symmetric_submodular,
    complete_graph,
    cycle_graph,
    inequality_chain,
    lemma3_check,
    mm_cut,
    mmw,
    partition2,
    partition3,
    path_graph,
    reduce_partition3_to_splitgraph,
    reduce_partition_to_partition3,
    sweep,
    treewidth,
    validate_tree_representation,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
