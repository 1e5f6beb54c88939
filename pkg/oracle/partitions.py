from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class PartitionEnumeration:
    """
    All 2^(N-1) splits of tasks 1..N into consecutive groups.

    Bit g of a mask (0-based) set means a new group starts at task g + 2, i.e.
    the gap between tasks g + 1 and g + 2 is a sleep.
    """

    n_tasks: int

    def __len__(self) -> int:
        return 1 << max(self.n_tasks - 1, 0) if self.n_tasks > 0 else 0

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self)))

    def groups(self, boundaries: int) -> list[tuple[int, int]]:
        """(first, last) task ranges of one mask, 1-based and inclusive."""
        groups = []
        first = 1
        for gap in range(self.n_tasks - 1):
            if boundaries >> gap & 1:
                groups.append((first, gap + 1))
                first = gap + 2
        groups.append((first, self.n_tasks))
        return groups
