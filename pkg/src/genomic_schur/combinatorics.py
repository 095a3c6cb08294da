"""Compositions, partitions and the two-row shape bookkeeping.

Compositions and partitions are plain tuples of positive integers.  The
empty tuple is the empty composition.
"""
from itertools import accumulate
from typing import NamedTuple


class Box(NamedTuple):
    row: int
    col: int


class TwoRowPartition(NamedTuple):
    lambda1: int
    lambda2: int

    @property
    def n(self):
        return self.lambda1 + self.lambda2


def is_composition(parts):
    return all(isinstance(p, int) and p >= 1 for p in parts)


def is_partition(parts):
    return is_composition(parts) and all(
        a >= b for a, b in zip(parts, parts[1:]))


def parse_parts(text):
    """Parse ``"3,2"`` into ``(3, 2)``; the empty string gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated list of integers: {text!r}")
    if not is_composition(parts):
        raise ValueError(f"parts must be positive integers: {text!r}")
    return parts


def two_row(shape):
    """Validate ``shape`` as a two-row partition and return it as a TwoRowPartition."""
    shape = tuple(shape)
    if len(shape) != 2 or not is_partition(shape):
        raise ValueError(f"expected a partition with exactly two rows, got {shape}")
    return TwoRowPartition(*shape)


def set_of(alpha):
    """The descent set of a composition: its proper partial sums."""
    return frozenset(list(accumulate(alpha))[:-1])


def comp_of(descents, n):
    """Inverse of :func:`set_of` for compositions of ``n``."""
    cuts = sorted(descents)
    if any(not 1 <= c <= n - 1 for c in cuts):
        raise ValueError(f"descent set {cuts} not contained in [1, {n - 1}]")
    if n == 0:
        return ()
    bounds = [0, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def compositions(n):
    """All compositions of ``n`` in lexicographic order of their part lists."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        out.extend((first, *rest) for rest in compositions(n - first))
    return out


def partitions(n):
    """All partitions of ``n``, in reverse lexicographic order."""
    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p, *rest)
    return list(rec(n, n))


def two_row_partitions(n):
    return [TwoRowPartition(n - b, b) for b in range(1, n // 2 + 1)]


def l_lambda(lam):
    """Smallest possible maximal entry of an increasing gapless tableau of shape ``lam``."""
    lam = two_row(lam)
    return max(lam.lambda1, lam.lambda2 + 1)


def valid_degrees(lam):
    lam = two_row(lam)
    return range(l_lambda(lam), lam.n + 1)


def _check_degree(lam, m):
    if not l_lambda(lam) <= m <= lam.n:
        raise ValueError(
            f"m={m} outside [{l_lambda(lam)}, {lam.n}] for shape {tuple(lam)}")


def lambda_variant(lam, m, x):
    """The shape of Pechenik images of family ``x`` in degree ``m``, or None.

    With ``k = n - m`` the candidate is ``(l1-k, l2-k, 1^k)`` for ``x = 1`` and
    ``(l1-k, l2-k+1, 1^(k-1))`` for ``x = 2``; it is returned only when it is
    a genuine nonempty partition of ``m``.
    """
    lam = two_row(lam)
    _check_degree(lam, m)
    l1, l2 = lam
    k = lam.n - m
    if x == 1:
        shape = (l1 - k, l2 - k) + (1,) * k
    elif x == 2:
        if k < 1:
            return None
        shape = (l1 - k, l2 - k + 1) + (1,) * (k - 1)
    else:
        raise ValueError(f"family must be 1 or 2, got {x}")
    return shape if is_partition(shape) else None


def lambda_variant_printed(lam, m, x):
    """``lambda_variant`` evaluated with the strict guards ``l2 > k + 1`` / ``l2 > k``.

    Only used to make the disagreement with :func:`lambda_variant` visible in
    reports.  At ``m = n`` the strict guards do not apply and ``lam`` itself is
    returned for ``x = 1``.
    """
    lam = two_row(lam)
    _check_degree(lam, m)
    l1, l2 = lam
    k = lam.n - m
    if k == 0:
        return tuple(lam) if x == 1 else None
    if x == 1:
        return (l1 - k, l2 - k) + (1,) * k if l2 > k + 1 else None
    if x == 2:
        return (l1 - k, l2 - k + 1) + (1,) * (k - 1) if l2 > k else None
    raise ValueError(f"family must be 1 or 2, got {x}")


def _par(lam, m, variant):
    lam = two_row(lam)
    families = (1,) if m == lam.n or lam.lambda1 == lam.lambda2 else (1, 2)
    out = {}
    for x in families:
        shape = variant(lam, m, x)
        if shape is not None:
            out[x] = shape
    return out


def par_by_family(lam, m):
    """Map family index -> shape for the nonempty members of ``Par(lam; m)``."""
    return _par(lam, m, lambda_variant)


def par_candidates(lam, m):
    return set(par_by_family(lam, m).values())


def par_candidates_printed(lam, m):
    return set(_par(lam, m, lambda_variant_printed).values())
