"""Tableaux with extended lookups, SYT / IGLT enumeration and descent data."""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import inf
from typing import NamedTuple

from .combinatorics import Box, is_partition, l_lambda, two_row


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored row by row (row 1 first).

    ``T[i, j]`` uses 1-based coordinates and never fails: boxes in the
    positive quadrant outside the diagram read as ``+inf`` and everything
    outside the quadrant reads as ``-inf``.
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not is_partition(tuple(len(r) for r in rows)):
            raise ValueError(f"row lengths do not form a partition: {rows}")

    @classmethod
    def from_string(cls, text):
        """Parse the ``"1 2 4 5 / 2 3 5 6"`` text format."""
        return cls(tuple(int(v) for v in row.split()) for row in text.split("/"))

    def __str__(self):
        return " / ".join(" ".join(map(str, r)) for r in self.rows)

    def __repr__(self):
        return f"Tableau({str(self)!r})"

    def __getitem__(self, box):
        i, j = box
        if i < 1 or j < 1:
            return -inf
        if i <= len(self.rows) and j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return inf

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def size(self):
        return sum(self.shape)

    @property
    def max_entry(self):
        return max((v for r in self.rows for v in r), default=0)

    def boxes(self):
        for i, r in enumerate(self.rows, 1):
            for j in range(1, len(r) + 1):
                yield Box(i, j)

    def items(self):
        for i, r in enumerate(self.rows, 1):
            for j, v in enumerate(r, 1):
                yield Box(i, j), v

    @cached_property
    def positions(self):
        """Map value -> boxes holding it, top to bottom."""
        pos = {}
        for box, v in self.items():
            pos.setdefault(v, []).append(box)
        return {v: tuple(sorted(bs)) for v, bs in pos.items()}

    def reading_word(self):
        return tuple(v for r in self.rows for v in r)

    def sort_key(self):
        return (self.shape, self.reading_word())

    def swap(self, i):
        """Exchange every ``i`` with every ``i + 1``."""
        flip = {i: i + 1, i + 1: i}
        return Tableau(tuple(flip.get(v, v) for v in r) for r in self.rows)

    def is_increasing(self):
        return all(
            self[b] < self[b.row, b.col + 1] and self[b] < self[b.row + 1, b.col]
            for b in self.boxes())

    def is_standard(self):
        return (self.is_increasing()
                and sorted(self.reading_word()) == list(range(1, self.size + 1)))

    def is_gapless(self):
        return (self.is_increasing()
                and set(self.reading_word()) == set(range(1, self.max_entry + 1)))


def _standard_fillings(shape):
    n = sum(shape)
    rows = [[] for _ in shape]

    def place(v):
        if v > n:
            yield Tableau(tuple(r) for r in rows)
            return
        for i, r in enumerate(rows):
            if len(r) < shape[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(v)
                yield from place(v + 1)
                r.pop()

    yield from place(1)


def enumerate_syt(mu):
    """All standard Young tableaux of shape ``mu``, ordered by reading word."""
    mu = tuple(mu)
    if not mu or not is_partition(mu):
        raise ValueError(f"not a nonempty partition: {mu}")
    return sorted(_standard_fillings(mu), key=Tableau.reading_word)


def enumerate_iglt(lam, m):
    """All increasing gapless tableaux of two-row shape ``lam`` with maximum ``m``.

    The result is empty unless ``l_lambda(lam) <= m <= n``.
    """
    l1, l2 = lam = two_row(lam)
    if not l_lambda(lam) <= m <= lam.n:
        return []
    values = range(1, m + 1)
    full = set(values)
    out = []
    for top in combinations(values, l1):
        missing = full.difference(top)
        if len(missing) > l2:
            continue
        for bottom in combinations(values, l2):
            if not missing.issubset(bottom):
                continue
            if all(b > t for t, b in zip(top, bottom)):
                out.append(Tableau((top, bottom)))
    return out


class OccurrenceCoords(NamedTuple):
    value: int
    top: Box
    bottom: Box


def occurrences(T, v):
    """Topmost and bottommost boxes holding ``v``."""
    try:
        boxes = T.positions[v]
    except KeyError:
        raise ValueError(f"{v} does not occur in {T}") from None
    return OccurrenceCoords(v, boxes[0], boxes[-1])


def repeated_values(T):
    return sorted(v for v, bs in T.positions.items() if len(bs) > 1)


class DescentData(NamedTuple):
    descents: frozenset
    attacking: frozenset


def is_descent(T, i):
    if i + 1 not in T.positions or i not in T.positions:
        return False
    return occurrences(T, i).top.row < occurrences(T, i + 1).bottom.row


def is_attacking(T, i):
    """Whether the descent ``i`` of ``T`` is attacking.

    Either some ``i`` has ``i + 1`` directly beneath it, or some ``i + 1``
    sits in a row weakly above the bottommost ``i``.
    """
    below = any(T[b.row + 1, b.col] == i + 1 for b in T.positions[i])
    r_b = occurrences(T, i).bottom.row
    return below or any(b.row <= r_b for b in T.positions[i + 1])


def descent_set(T):
    return frozenset(i for i in range(1, T.max_entry) if is_descent(T, i))


def descent_data(T):
    des = descent_set(T)
    return DescentData(des, frozenset(i for i in des if is_attacking(T, i)))
