"""Cube groups presented by decorated graphs.

Words are lists of generator names in application order: ``["b", "a"]``
applies ``b`` first and then ``a``.
"""

from ._cubegroup import (
    CubeError,
    CubeGroup,
    DecoratedGraph,
    NotADecomposition,
    ParseError,
    SweepReport,
    involution_count,
    sweep,
)

__all__ = [
    "CubeError",
    "CubeGroup",
    "DecoratedGraph",
    "NotADecomposition",
    "ParseError",
    "SweepReport",
    "involution_count",
    "load",
    "sweep",
]


def load(path):
    """Read a decorated graph file."""
    with open(path, encoding="utf-8") as handle:
        return DecoratedGraph.parse(handle.read())
