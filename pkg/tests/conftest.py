from __future__ import annotations

from typing import Iterator


def all_words(n: int) -> Iterator[tuple[int, ...]]:
    """Every permutation of the multiset {1,1,...,n,n}, as entry tuples."""
    remaining = [2] * (n + 1)
    entries: list[int] = []
    total = 2 * n

    def emit() -> Iterator[tuple[int, ...]]:
        if len(entries) == total:
            yield tuple(entries)
            return
        for lab in range(1, n + 1):
            if remaining[lab]:
                remaining[lab] -= 1
                entries.append(lab)
                yield from emit()
                entries.pop()
                remaining[lab] += 1

    return emit()
