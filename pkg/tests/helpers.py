"""Shared test data and an independent brute-force solver.

``TABLE1`` holds the known Sprague-Grundy values of f-wythoff under
normal play for piles up to 9, typed in by hand; the fast engine must
reproduce it bit for bit.  ``naive_table`` recomputes values with a plain
mex recursion over ``legal_moves``, giving a second route that shares no
code with the compiled kernel.
"""

import numpy as np

from fwythoff import Convention, canonicalize, is_terminal, legal_moves, mex

TABLE1 = np.array(
    [
        [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
        [1, 0, 3, 2, 5, 4, 7, 6, 9, 8],
        [2, 3, 1, 0, 6, 7, 4, 5, 10, 11],
        [3, 2, 0, 4, 1, 6, 5, 8, 7, 10],
        [4, 5, 6, 1, 2, 3, 0, 9, 11, 12],
        [5, 4, 7, 6, 3, 8, 2, 1, 0, 13],
        [6, 7, 4, 5, 0, 2, 3, 10, 12, 1],
        [7, 6, 5, 8, 9, 1, 10, 11, 4, 2],
        [8, 9, 10, 7, 11, 0, 12, 4, 5, 6],
        [9, 8, 11, 10, 12, 13, 1, 2, 6, 7],
    ],
    dtype=np.int64,
)


def naive_table(variant, convention, a_max, b_max):
    """Grundy values as a dict, via mex recursion over ``legal_moves``."""
    cells = [(a, b) for a in range(a_max + 1) for b in range(a, b_max + 1)]
    cells.sort(key=lambda cell: cell[0] + cell[1])
    values = {}
    for a, b in cells:
        p = canonicalize(a, b)
        if is_terminal(p):
            values[p] = 1 if convention is Convention.MISERE else 0
        else:
            values[p] = mex(values[q] for _, q in legal_moves(variant, p))
    return values
