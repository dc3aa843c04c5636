"""Eulerian numbers and the triangle they form.

The Eulerian number ``A(n, k)`` counts permutations of ``{1, ..., n}``
with exactly ``k`` ascents (positions ``i`` with ``p[i] < p[i+1]``).
Rows are built from the standard two-term recurrence

    A(n, k) = (k + 1) * A(n-1, k) + (n - k) * A(n-1, k-1)

with ``A(0, 0) = 1``.  All arithmetic is exact integer arithmetic, so
rows of any order are representable; there is no overflow to guard
against, only time.

Each row here carries a trailing zero entry: ``A(n, n) = 0`` for
``n >= 1``, matching the convention in which the factored derivative
polynomials below index ``k`` from 0 through ``n``.  Row 0 is ``[1]``.

Rows are memoized module-wide.  The cache only ever grows and rows are
immutable once computed, so a single lock around extension is enough to
make concurrent readers safe.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError

# rows[n] is the full row (A(n,0), ..., A(n,n)); grown on demand
_rows: list[tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


def _extend_rows(n: int) -> None:
    with _rows_lock:
        while len(_rows) <= n:
            m = len(_rows)
            prev = _rows[m - 1]
            row = [0] * (m + 1)
            for k in range(m):
                row[k] = (k + 1) * prev[k] + (m - k) * (prev[k - 1] if k else 0)
            _rows.append(tuple(row))


def eulerian_row(n: int) -> list[int]:
    """Return ``[A(n, 0), ..., A(n, n)]`` as exact integers.

    The final entry is 0 for every ``n >= 1``.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"row index must be a nonnegative integer, got {n!r}")
    if n >= len(_rows):
        _extend_rows(n)
    return list(_rows[n])


def eulerian_number(n: int, k: int) -> int:
    """Eulerian number ``A(n, k)`` via the memoized recurrence.

    ``k`` outside ``[0, n)`` yields 0 for ``n >= 1``; ``A(0, 0)`` is 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    if k > n:
        return 0
    if n >= len(_rows):
        _extend_rows(n)
    return _rows[n][k]


def eulerian_explicit(n: int, k: int) -> int:
    """``A(n, k)`` from the alternating binomial sum, independent of the
    recurrence:

        A(n, k) = sum_{j=0}^{k} (-1)^j * C(n+1, j) * (k + 1 - j)^n

    Exact integers throughout.  Requires ``0 <= k <= n``.
    """
    from math import comb

    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got k={k!r} for n={n}")
    total = 0
    for j in range(k + 1):
        total += (-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n
    return total


def count_ascents(perm: Sequence[int]) -> int:
    """Number of ascents of ``perm``, which must be a permutation of
    ``1..len(perm)``."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise DomainError("input is not a permutation of 1..n")
    return sum(1 for i in range(n - 1) if perm[i] < perm[i + 1])


@dataclass(frozen=True)
class EulerianTriangle:
    """All rows of the triangle up to and including ``max_n``."""

    max_n: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def up_to(cls, max_n: int) -> "EulerianTriangle":
        if not isinstance(max_n, int) or isinstance(max_n, bool) or max_n < 0:
            raise DomainError(f"max_n must be a nonnegative integer, got {max_n!r}")
        if max_n >= len(_rows):
            _extend_rows(max_n)
        return cls(max_n=max_n, rows=tuple(_rows[: max_n + 1]))

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n <= self.max_n:
            raise DomainError(f"row {n} not held by this triangle (max {self.max_n})")
        return self.rows[n]
