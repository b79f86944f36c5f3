"""Exact Weingarten integration over easy quantum groups and their homogeneous spaces.

Exact values come back as ``fractions.Fraction``. Groups are written ``"O+:4"``,
spaces use the command-line syntax (``"free-real-sphere:5"``, ``"S:4/I=1,2"``,
``"O:3xO:4/J=1,2"``), and words are strings over ``o`` (white) and ``b`` (black).
"""

from ._core import (
    PreconditionError,
    bp_compare,
    char_asymptotic,
    char_exact,
    gram,
    group_moment,
    haar_mc,
    limit_moments,
    partitions,
    run_cli,
    sn_moment,
    verify,
    weingarten,
)
from ._core import space_moment as _space_moment

__all__ = [
    "PreconditionError",
    "bp_compare",
    "char_asymptotic",
    "char_exact",
    "gram",
    "group_moment",
    "haar_mc",
    "limit_moments",
    "partitions",
    "run_cli",
    "sn_moment",
    "space_moment",
    "verify",
    "weingarten",
]


def space_moment(space, word, indices):
    """Rescaled moment of the space coordinates.

    Each index is an int for single-factor spaces, or a tuple with one entry
    per factor (``(1, 2)``) or a string such as ``"1.2"`` for products.
    """
    coords = []
    for i in indices:
        if isinstance(i, str):
            coords.append([int(part) for part in i.split(".")])
        elif isinstance(i, int):
            coords.append([i])
        else:
            coords.append([int(part) for part in i])
    return _space_moment(space, word, coords)
