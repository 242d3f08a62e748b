"""Shared oracles: independent brute-force routes the tests check against.

Everything here is deliberately written from the defining conditions, not by
calling the package, so a bug cannot hide on both sides of a comparison.
"""

from __future__ import annotations

import pytest


def brute_partitions(m, smallest=1):
    """All partitions of m as increasing tuples, smallest part chosen first."""
    if m == 0:
        yield ()
        return
    for small in range(smallest, m + 1):
        for rest in brute_partitions(m - small, small):
            yield (small,) + rest


def oracle_is_dp_h(h, lam):
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return all(v <= 1 for k, v in mult.items() if k % h != 0)


def oracle_is_dpr_h(h, lam):
    padded = list(lam) + [0]
    for i in range(len(lam)):
        gap = padded[i] - padded[i + 1]
        if padded[i] % h == 0:
            if gap < 0 or gap >= h:
                return False
        else:
            if gap <= 0 or gap > h:
                return False
    return True


def oracle_residue(h, column):
    n = (h - 1) // 2
    hits = [i for i in range(n + 1)
            if column % h in ((n + i) % h, (n - i) % h)]
    assert len(hits) == 1, (h, column, hits)
    return hits[0]


def oracle_plane_ladders(h, lam):
    """Partition the cells of lam into plane ladders by union-find.

    Links: (row, c) with (row+1, c-h), and the adjacent pair (row, c),
    (row, c+1) when c = -1 mod h (the two short-residue columns).
    """
    if not lam:
        return []
    depth = len(lam)
    width = lam[0] + h * depth + 1
    cells = [(k, c) for k in range(1, depth + 1) for c in range(width)]
    parent = {cell: cell for cell in cells}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for k, c in cells:
        if k + 1 <= depth and c - h >= 0:
            union((k, c), (k + 1, c - h))
        if c % h == h - 1 and c + 1 < width:
            union((k, c), (k, c + 1))
    groups = {}
    for k, part in enumerate(lam, start=1):
        for c in range(part):
            groups.setdefault(find((k, c)), []).append((k, c))
    return sorted(sorted(g) for g in groups.values())


def oracle_count_odd_parts(p, m):
    """Partitions of m into odd parts not divisible by p, counted directly."""
    def count(rem, largest):
        if rem == 0:
            return 1
        total = 0
        for part in range(min(rem, largest), 0, -1):
            if part % 2 == 1 and part % p != 0:
                total += count(rem - part, part)
        return total
    return count(m, m)


@pytest.fixture
def rng():
    import random
    return random.Random(20240901)
