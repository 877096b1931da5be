"""Exception types shared across the package.

Plain argument mistakes (bad vertex index, malformed file, overlapping
partition blocks) raise ValueError.  The classes below mark the three
outcomes that callers are expected to branch on.
"""


class SizeCapError(Exception):
    """An exact/brute-force routine was asked to exceed its size cap.

    Raised instead of silently approximating.  Most caps can be lifted
    explicitly via a ``max_n`` style argument; doing so is slow.
    """


class InfeasibleError(Exception):
    """The requested object cannot exist for this instance.

    Examples: a red-blue instance where some red vertex is not dominated
    by any blue vertex, or a strongly connected dominating set of a graph
    that is not strongly connected.
    """


class InternalInvariantError(Exception):
    """A postcondition that the algorithm guarantees failed to hold.

    This always indicates a bug, never bad input.
    """
