#!/usr/bin/env python3
"""Walk the colored crystal graph of the vacuum component.

Vertices of degree m are exactly the h-regular partitions of m, and every
connected component of the ambient graph is a shifted copy of the vacuum
one.  This script builds the h = 3 component, prints its layers, checks the
shift against the component through (3), and dumps DOT for rendering.
"""

from spinfock import crystal
from spinfock.partitions import enumerate_dpr_h, format_partition, shift_by_multiple

H = 3
MAX_DEGREE = 7

graph = crystal.component(H, (), MAX_DEGREE)
print(f"vacuum component for h={H}, degrees 0..{MAX_DEGREE}")
for m in range(MAX_DEGREE + 1):
    layer = graph.vertices_of_degree(m)
    names = " ".join(format_partition(v) for v in layer)
    print(f"  degree {m}: {len(layer):2d} vertices  {names}")
    assert layer == enumerate_dpr_h(H, m)

# one colored string, recomputed step by step
vertex = (3, 2)
string = [vertex]
while True:
    nxt = crystal.ftilde(H, 1, vertex)
    if nxt is None:
        break
    string.append(nxt)
    vertex = nxt
print("\ncolor-1 string from (3 2):",
      " -> ".join(format_partition(v) for v in string))

# the component through (3) is the vacuum component shifted by (3)
moved = crystal.component(H, (3,), MAX_DEGREE + 3)
shifted = {shift_by_multiple(H, v, (1,)) for v in graph.vertices}
assert shifted == set(moved.vertices)
print(f"\ncomponent through (3) = vacuum component shifted by (3): "
      f"{len(moved.vertices)} vertices agree")

dot = graph.to_dot()
print(f"\nDOT output has {len(dot.splitlines())} lines; first six:")
print("\n".join(dot.splitlines()[:6]))
