"""Kashiwara operators on DP_h labels and the colored crystal graph.

The single-letter graph has vertices j in Z with an i-arrow j -> j+1 exactly
when j = n+i or n-i mod h (for i < n) or j = -1, 0 mod h (for i = n).  A
partition behaves like the tensor product of its letters with the vacuum on
the right; string statistics combine by the usual two-factor rules
    phi(head, tail) = phi(head) + max(0, phi(tail) - eps(head)),
    eps(head, tail) = eps(tail) + max(0, eps(head) - phi(tail)),
and the lowering operator moves the head iff eps(head) >= phi(tail).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import partitions as pt


def _has_arrow(h: int, n: int, i: int, j: int) -> bool:
    r = j % h
    if i == n:
        return r in (0, h - 1)
    return r in ((n - i) % h, (n + i) % h)


def phi_aff(h: int, i: int, j: int) -> int:
    """Steps from letter j to the end of its i-string."""
    n = pt.rank(h)
    count = 0
    while _has_arrow(h, n, i, j + count):
        count += 1
        assert count <= h, "i-strings are shorter than h"
    return count


def eps_aff(h: int, i: int, j: int) -> int:
    """Steps from letter j back to the origin of its i-string."""
    n = pt.rank(h)
    count = 0
    while _has_arrow(h, n, i, j - 1 - count):
        count += 1
        assert count <= h, "i-strings are shorter than h"
    return count


def _check_vertex(h, lam):
    lam = pt.check_partition(lam)
    if not pt.in_dp_h(h, lam):
        raise ValueError(f"{lam} is not a crystal vertex for h={h}")
    return lam


def _suffix_stats(h, i, lam):
    """stats[k] = (eps, phi) of the suffix lam[k:] (with the vacuum base)."""
    n = pt.rank(h)
    r = len(lam)
    stats = [(0, 0)] * (r + 1)
    stats[r] = (0, 1 if i == n else 0)
    for k in range(r - 1, -1, -1):
        ea, pa = eps_aff(h, i, lam[k]), phi_aff(h, i, lam[k])
        et, ft = stats[k + 1]
        stats[k] = (et + max(0, ea - ft), pa + max(0, ft - ea))
    return stats


def eps(h: int, i: int, lam) -> int:
    """Length of the backward i-string through a vertex."""
    lam = _check_vertex(h, lam)
    return _suffix_stats(h, i, lam)[0][0]


def phi(h: int, i: int, lam) -> int:
    """Length of the forward i-string through a vertex."""
    lam = _check_vertex(h, lam)
    return _suffix_stats(h, i, lam)[0][1]


def ftilde(h: int, i: int, lam):
    """Lowering crystal operator; None when it kills the vertex."""
    lam = _check_vertex(h, lam)
    stats = _suffix_stats(h, i, lam)
    for k, part in enumerate(lam):
        _, phi_tail = stats[k + 1]
        if eps_aff(h, i, part) >= phi_tail:
            if phi_aff(h, i, part) == 0:
                return None
            return lam[:k] + (part + 1,) + lam[k + 1:]
    # fell through to the vacuum slot
    return lam + (1,) if i == pt.rank(h) else None


def etilde(h: int, i: int, lam):
    """Raising crystal operator, the partial inverse of ftilde."""
    lam = _check_vertex(h, lam)
    stats = _suffix_stats(h, i, lam)
    for k, part in enumerate(lam):
        _, phi_tail = stats[k + 1]
        if eps_aff(h, i, part) > phi_tail:
            if eps_aff(h, i, part) == 0:
                return None
            new = lam[:k] + (part - 1,) + lam[k + 1:]
            return pt.check_partition(new)
    return None


@dataclass(frozen=True)
class CrystalGraph:
    """Finite piece of a colored crystal: degree-raising edges only."""

    h: int
    max_degree: int
    vertices: tuple
    edges: tuple            # (source, color, target) triples

    def vertices_of_degree(self, m: int) -> list:
        return [v for v in self.vertices if sum(v) == m]

    def degree_counts(self) -> dict:
        out = {}
        for v in self.vertices:
            out[sum(v)] = out.get(sum(v), 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "max_degree": self.max_degree,
            "vertices": [list(v) for v in self.vertices],
            "edges": [
                {"from": list(a), "color": i, "to": list(b)}
                for a, i, b in self.edges
            ],
        }

    def to_dot(self) -> str:
        def name(v):
            return ",".join(map(str, v)) if v else "()"

        lines = ["digraph crystal {"]
        for v in self.vertices:
            lines.append(f'  "{name(v)}";')
        for a, i, b in self.edges:
            lines.append(f'  "{name(a)}" -> "{name(b)}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _sorted_vertices(vs):
    out = sorted(vs, reverse=True)
    out.sort(key=sum)
    return out


def component(h: int, start, max_degree: int) -> CrystalGraph:
    """All vertices reachable from `start` by lowering, up to max_degree."""
    start = _check_vertex(h, start)
    n = pt.rank(h)
    seen = {start}
    edges = []
    layer = [start]
    while layer:
        nxt = set()
        for v in layer:
            if sum(v) >= max_degree:
                continue
            for i in range(n + 1):
                w = ftilde(h, i, v)
                if w is not None:
                    edges.append((v, i, w))
                    if w not in seen:
                        nxt.add(w)
        seen |= nxt
        layer = _sorted_vertices(nxt)
    vertices = tuple(_sorted_vertices(seen))
    edges.sort(key=lambda e: e[1])                  # color
    edges.sort(key=lambda e: e[0], reverse=True)    # source, decreasing lex
    edges.sort(key=lambda e: sum(e[0]))             # degree layers
    return CrystalGraph(h, max_degree, vertices, tuple(edges))


def highest_weight_vertices(h: int, max_m: int) -> list:
    """Vertices killed by every raising operator: all parts divisible by h.

    Listed by increasing degree, decreasing lex inside a degree.
    """
    pt.check_h(h)
    out = []
    for k in range(max_m // h + 1):
        scaled = [tuple(h * x for x in mu) for mu in pt.partitions(k)]
        out.extend(_sorted_vertices(scaled))
    return out
