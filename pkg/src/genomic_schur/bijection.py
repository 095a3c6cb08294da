"""Pechenik's bijection between two-row gapless tableaux and standard tableaux."""
from bisect import insort
from typing import NamedTuple

from .combinatorics import par_candidates, two_row
from .tableaux import Tableau, enumerate_syt, repeated_values


class PhiTrace(NamedTuple):
    A: frozenset
    B: frozenset
    input: Tableau
    output: Tableau


def phi(T):
    """Run the forward map on a two-row increasing gapless tableau.

    Repeated values are dropped from the first row, the second-row entries
    just right of a repeated value leave the second row, and those entries
    are merged into the first column.
    """
    if len(T.rows) != 2:
        raise ValueError(f"expected a two-row tableau, got shape {T.shape}")
    top, bottom = T.rows
    A = frozenset(repeated_values(T))
    B = frozenset(bottom[j + 1] for j in range(len(bottom) - 1) if bottom[j] in A)

    row1 = [v for v in top if v not in A]
    row2 = [v for v in bottom if v not in B]
    column = [row1[0], row2[0]] + sorted(B)
    column.sort()
    row1[0], row2[0] = column[0], column[1]
    rows = [row1, row2] + [[v] for v in column[2:]]
    return PhiTrace(A, B, T, Tableau(tuple(r) for r in rows))


def phi_inverse(S, lam, m):
    """Invert :func:`phi` for a standard tableau whose shape lies in ``Par(lam; m)``."""
    lam = two_row(lam)
    if S.shape not in par_candidates(lam, m):
        raise ValueError(f"shape {S.shape} is not in Par({tuple(lam)}; {m})")
    row1, row2 = list(S.rows[0]), list(S.rows[1])
    B = [r[0] for r in S.rows[2:]]
    for b in B:
        insort(row2, b)
    B = set(B)
    A = {row2[j - 1] for j in range(1, len(row2)) if row2[j] in B}
    if len(A) < lam.n - m:
        A.add(row2[-1])
    for a in A:
        insort(row1, a)
    return Tableau((tuple(row1), tuple(row2)))


def psi_image_index(T):
    """Position of ``phi(T)`` in the enumerated standard basis of its shape."""
    S = phi(T).output
    return S.shape, _syt_index(S.shape)[S]


_SYT_INDEX = {}


def _syt_index(shape):
    if shape not in _SYT_INDEX:
        _SYT_INDEX[shape] = {S: k for k, S in enumerate(enumerate_syt(shape))}
    return _SYT_INDEX[shape]
