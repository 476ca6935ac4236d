"""Shared fixed matrices used across the tests.

The two 9x9 banded extremal pairs are hand-checked reference values
(multiplying each matrix by its stated inverse gives the identity); tests
treat them as ground truth.
"""

BANDED_9_L2 = [
    [1, 0, 1, 0, 1, 0, 1, 0, 0],
    [0, 1, 1, 0, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]

BANDED_9_L2_INVERSE = [
    [1, 0, -1, 1, -2, 3, -5, 8, 8],
    [0, 1, -1, 1, -2, 3, -5, 8, 8],
    [0, 0, 1, -1, 1, -2, 3, -5, -5],
    [0, 0, 0, 1, -1, 1, -2, 3, 3],
    [0, 0, 0, 0, 1, -1, 1, -2, -2],
    [0, 0, 0, 0, 0, 1, -1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]

BANDED_9_L3 = [
    [1, 0, 1, 0, 1, 0, 1, 1, 1],
    [0, 1, 1, 0, 1, 0, 1, 1, 1],
    [0, 0, 1, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]

BANDED_9_L3_INVERSE = [
    [1, 0, -1, 1, -2, 3, -5, -5, -5],
    [0, 1, -1, 1, -2, 3, -5, -5, -5],
    [0, 0, 1, -1, 1, -2, 3, 3, 3],
    [0, 0, 0, 1, -1, 1, -2, -2, -2],
    [0, 0, 0, 0, 1, -1, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]
