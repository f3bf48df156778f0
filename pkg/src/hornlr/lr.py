"""Exact Littlewood-Richardson coefficients.

The coefficient c(alpha, beta; gamma) counts semistandard skew tableaux
of shape gamma/alpha and content beta whose reverse reading word (right
to left within rows, rows top to bottom) is a lattice word: every prefix
contains at least as many i's as (i+1)'s. Counting is by depth-first
backtracking over the cells in reverse reading order, pruning on the
first violated constraint; positivity queries stop at the first
completed tableau.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import InputError
from .partitions import Partition


@dataclass(frozen=True)
class SkewShape:
    """The diagram gamma/alpha: cells of `outer` not in `inner`."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InputError(
                f"inner shape {self.inner} does not fit inside {self.outer}"
            )

    @property
    def cell_count(self) -> int:
        return self.outer.size - self.inner.size


def lr_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """The Littlewood-Richardson coefficient of gamma in alpha * beta.

    Total: returns 0 whenever no tableau can exist (size mismatch,
    gamma does not contain alpha, or gamma has more rows than the two
    factors can reach).
    """
    return _count(alpha, beta, gamma, limit=0)


def lr_positive(alpha: Partition, beta: Partition, gamma: Partition) -> bool:
    """Whether the coefficient is non-zero; stops at the first witness."""
    return _count(alpha, beta, gamma, limit=1) > 0


def _count(alpha: Partition, beta: Partition, gamma: Partition, limit: int) -> int:
    if gamma.size != alpha.size + beta.size:
        return 0
    if not gamma.contains(alpha):
        return 0
    if gamma.length > alpha.length + beta.length:
        return 0
    rows = gamma.length
    return _kernels.lr_count(
        gamma.parts, alpha.padded(rows), beta.parts, limit
    )
