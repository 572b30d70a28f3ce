"""Union-find that tracks the XOR parity between each element and its set root."""


class ParityUnionFind:
    """Disjoint sets over ``0..n-1`` with a parity label on every element.

    ``union(x, y, d)`` records the constraint ``bit(x) XOR bit(y) = d``; it
    returns False when that contradicts constraints already recorded.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n  # parity relative to parent
        self.rank = [0] * n

    def find(self, x: int) -> tuple[int, int]:
        """Return ``(root, parity of x relative to root)``, compressing the path."""
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # walk back from the node nearest the root so each parity is already relative to root
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, x: int, y: int, d: int) -> bool:
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == d
        if self.rank[rx] < self.rank[ry]:
            rx, ry, px, py = ry, rx, py, px
        self.parent[ry] = rx
        self.parity[ry] = px ^ py ^ d
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True

    def normalized_bits(self) -> list[int]:
        """One consistent assignment where the lowest element of every set has bit 0."""
        n = len(self.parent)
        found = [self.find(x) for x in range(n)]
        base: dict[int, int] = {}
        for root, p in found:  # ascending x, so the first hit is the lowest member
            base.setdefault(root, p)
        return [p ^ base[root] for root, p in found]
