"""Magnitude and magnitude homology of finite graphs."""

from ._core import (
    ConsistencyError,
    Error,
    GeneratorCapExceeded,
    Graph,
    HomologyGroup,
    HomologyTable,
    InvalidGraph,
    PreconditionError,
    UsageError,
    chain_euler,
    diagonal_check,
    homology,
    is_block_graph,
    is_geodetic,
    is_pawful,
    is_ptolemaic,
    is_tree,
    magnitude_series,
    rule_names,
    speyer_magnitude,
    t_even,
    t_odd,
    unmatched,
    validate_rule,
)

__version__ = "0.1.0"


def graph(spec):
    """Parse a graph spec such as ``"cycle(5)"`` or ``"join(path(2),path(3))"``."""
    return Graph.parse(spec)
