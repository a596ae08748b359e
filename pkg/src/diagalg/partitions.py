"""Integer partitions, hooks, and the box statistics controlling weight vanishing.

A partition is stored as a weakly decreasing tuple of positive integers; the
empty partition is ().  Boxes of the Young diagram are 1-based pairs (i, j)
with 1 <= i <= len(la) and 1 <= j <= la[i-1].

The three box statistics attached to a partition la are

    a(i, j) = la_i + la_j - i - j
    b(i, j) = -la'_i - la'_j + i + j - 2
    d(i, j) = a(i, j) if i <= j, else b(i, j)

where la_k (resp. la'_k) is the k-th part of la (resp. of its conjugate),
taken to be 0 past the end.  On the diagonal, d(i, i) = 2*la_i - 2*i >= 0 and
b(i, i) = -2*la'_i + 2*i - 2 is always even and <= -2.  Weight numerators for
the Brauer-type algebras are products of (delta + d) over boxes, and their
denominators are products of hook lengths, so these functions are the whole
combinatorial core of the semisimplicity criteria.
"""

from __future__ import annotations

import enum
from functools import cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Box = tuple[int, int]


class Ordering(enum.Enum):
    """Result of comparing two elements of a partial order."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def partition(parts: Iterable[int]) -> Partition:
    """Returns the canonical form of a partition: trailing zeros trimmed.

    Raises ValueError if the parts are negative or not weakly decreasing.
    """
    p = tuple(parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def size(la: Partition) -> int:
    """Returns |la|, the number of boxes."""
    return sum(la)


def part(la: Partition, i: int) -> int:
    """Returns la_i (1-based), which is 0 for i past the last row."""
    if i < 1:
        raise ValueError(f"row index {i} must be >= 1")
    return la[i - 1] if i <= len(la) else 0


def conjugate(la: Partition) -> Partition:
    """Returns the conjugate (transposed) partition.

    conjugate((3, 1)) == (2, 1, 1).
    """
    if not la:
        return ()
    return tuple(sum(1 for x in la if x >= j) for j in range(1, la[0] + 1))


def boxes(la: Partition) -> Iterator[Box]:
    """Yields the boxes of la in row-major order: (1,1), (1,2), ..."""
    for i, row in enumerate(la, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def contains_box(la: Partition, box: Box) -> bool:
    """Returns True if box = (i, j) lies inside the Young diagram of la."""
    i, j = box
    return 1 <= i <= len(la) and 1 <= j <= la[i - 1]


def _require_box(la: Partition, box: Box) -> None:
    if not contains_box(la, box):
        raise ValueError(f"box {box} not in partition {la}")


def hook(la: Partition, box: Box) -> int:
    """Returns the hook length of la at box = (i, j).

    h(i, j) = la_i + la'_j + 1 - i - j, always >= 1 for a box of la.
    """
    _require_box(la, box)
    i, j = box
    return part(la, i) + part(conjugate(la), j) + 1 - i - j


def avalue(la: Partition, box: Box) -> int:
    """Returns a(i, j) = la_i + la_j - i - j at box = (i, j) of la."""
    _require_box(la, box)
    i, j = box
    return part(la, i) + part(la, j) - i - j


def bvalue(la: Partition, box: Box) -> int:
    """Returns b(i, j) = -la'_i - la'_j + i + j - 2 at box = (i, j) of la."""
    _require_box(la, box)
    i, j = box
    conj = conjugate(la)
    return -part(conj, i) - part(conj, j) + i + j - 2


def dvalue(la: Partition, box: Box) -> int:
    """Returns d(i, j): the a-value for i <= j, the b-value for i > j."""
    i, j = box
    return avalue(la, box) if i <= j else bvalue(la, box)


def dominance_cmp(la: Partition, mu: Partition) -> Ordering:
    """Compares two partitions of the same size in dominance order.

    la dominates mu (GREATER) when every prefix sum of la is >= the matching
    prefix sum of mu.  Partitions of different sizes are rejected.
    """
    if size(la) != size(mu):
        raise ValueError(f"dominance needs equal sizes, got {la} and {mu}")
    if la == mu:
        return Ordering.EQUAL
    ge = True  # la >= mu so far
    le = True
    acc_la = acc_mu = 0
    for k in range(max(len(la), len(mu))):
        acc_la += part(la, k + 1)
        acc_mu += part(mu, k + 1)
        if acc_la < acc_mu:
            ge = False
        if acc_la > acc_mu:
            le = False
    if ge:
        return Ordering.GREATER
    if le:
        return Ordering.LESS
    return Ordering.INCOMPARABLE


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Returns all partitions of n in lexicographically decreasing order.

    partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)).
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))
