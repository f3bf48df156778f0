"""Integer partitions: weakly decreasing tuples of positive integers.

Every other module speaks in partitions: degree sequences of bipartite
graphs, contents and shapes of Littlewood-Richardson tableaux, integral
Hermitian spectra. A :class:`Partition` stores its parts in canonical
form (sorted descending, trailing zeros stripped), so equal multisets of
parts compare equal no matter how they were supplied.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import FormatError, InputError


class Partition:
    """Canonical immutable partition.

    Parts may be given in any order and may include zeros; the stored
    value is the sorted, zero-stripped tuple. Parts are plain Python
    integers, so sizes and downstream moment formulas never overflow.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = []
        for p in parts:
            if p != int(p):
                raise InputError(f"partition parts must be integers, got {p!r}")
            p = int(p)
            if p < 0:
                raise InputError(f"partition parts must be non-negative, got {p}")
            if p > 0:
                cleaned.append(p)
        cleaned.sort(reverse=True)
        self._parts = tuple(cleaned)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of positive parts."""
        return len(self._parts)

    @property
    def distinct_parts(self) -> int:
        """Number of distinct positive part values."""
        return len(set(self._parts))

    def part(self, i: int) -> int:
        """1-based part access; indices past the length read as 0."""
        if i < 1:
            raise InputError(f"part index must be >= 1, got {i}")
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def contains(self, inner: "Partition") -> bool:
        """Containment of Young diagrams: inner_i <= outer_i for all i."""
        if inner.length > self.length:
            return False
        return all(inner._parts[i] <= self._parts[i] for i in range(inner.length))

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts extended with zeros to length n; n must fit the partition."""
        if n < len(self._parts):
            raise InputError(
                f"cannot pad a partition of length {len(self._parts)} to {n}"
            )
        return self._parts + (0,) * (n - len(self._parts))

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the CLI form: comma-separated parts, `-` for the empty one."""
        text = text.strip()
        if text == "-":
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except (ValueError, InputError) as exc:
            raise FormatError(f"bad partition literal {text!r}: {exc}") from None

    def to_text(self) -> str:
        return ",".join(str(p) for p in self._parts) if self._parts else "-"

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __le__(self, other: "Partition") -> bool:
        return self._parts <= other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def __str__(self) -> str:
        return self.to_text()


def enumerate_partitions(
    total: int, exact_length: int, max_first_part: int
) -> Iterator[Partition]:
    """Yield partitions of `total` with exactly `exact_length` positive parts
    and first part at most `max_first_part`, in descending lexicographic order.

    Streamed so callers can stop early; yields nothing when the constraints
    are unsatisfiable.
    """
    if total < 0 or exact_length < 1 or max_first_part < 1:
        if total == 0 and exact_length == 0:
            yield Partition()
        return
    for parts in _descending_parts(total, exact_length, max_first_part):
        yield Partition(parts)


def _descending_parts(
    total: int, length: int, max_part: int
) -> Iterator[tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    # each of the `length` parts is >= 1, so the first is >= ceil(total/length)
    lo = -(-total // length)
    hi = min(max_part, total - length + 1)
    for p in range(hi, lo - 1, -1):
        for rest in _descending_parts(total - p, length - 1, p):
            yield (p,) + rest
