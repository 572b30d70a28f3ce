"""Binary CSP solver: forward checking with conflict-directed backjumping.

Domains are bitmasks over small integer values. ``adj[x]`` lists
``(y, table)`` pairs where ``table[a]`` is the mask of values of ``y``
compatible with ``x = a``. Variables are chosen dynamically: smallest
domain, then largest degree, then lowest index.
"""

from __future__ import annotations

import sys
from typing import Optional, Sequence

from .errors import ResourceLimitError


class Budget:
    """Shared counter of search nodes (value assignments tried)."""

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimitError(f"search budget of {self.limit} nodes exceeded")


def solve(
    adj: Sequence[Sequence[tuple[int, Sequence[int]]]],
    domains: Sequence[int],
    budget: Budget,
) -> Optional[list[int]]:
    n = len(domains)
    if any(d == 0 for d in domains):
        return None
    dom = list(domains)
    value = [-1] * n
    pruned_by: list[list[int]] = [[] for _ in range(n)]
    degree = [len(a) for a in adj]

    def select() -> int:
        best, best_key = -1, None
        for x in range(n):
            if value[x] < 0:
                key = (dom[x].bit_count(), -degree[x])
                if best_key is None or key < best_key:
                    best, best_key = x, key
        return best

    def search(depth: int):
        if depth == n:
            return True
        x = select()
        conflict: set[int] = set()
        d = dom[x]
        while d:
            low = d & -d
            d ^= low
            a = low.bit_length() - 1
            budget.tick()
            value[x] = a
            undo = []
            wiped = -1
            for y, table in adj[x]:
                if value[y] >= 0:
                    continue
                old = dom[y]
                new = old & table[a]
                if new != old:
                    undo.append((y, old))
                    dom[y] = new
                    pruned_by[y].append(x)
                    if not new:
                        wiped = y
                        break
            if wiped >= 0:
                conflict.update(pruned_by[wiped])
                conflict.discard(x)
                result = None
            else:
                result = search(depth + 1)
                if result is True:
                    return True
            for y, old in reversed(undo):
                dom[y] = old
                pruned_by[y].pop()
            if result is not None:
                if x not in result:
                    value[x] = -1
                    return result
                conflict |= result
                conflict.discard(x)
        value[x] = -1
        conflict.update(pruned_by[x])
        return conflict

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        if search(0) is True:
            return list(value)
        return None
    finally:
        sys.setrecursionlimit(limit)
