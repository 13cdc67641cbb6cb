"""
A symmetric exchange that cannot be undone
==========================================

Six rational points on the unit circle and two triangles that both contain
the origin.  Swapping one vertex of each triangle for one of the other keeps
both containing the origin in exactly one way, and the only move from there
swaps straight back.
"""

from omexchange import AffineOracle, build_example2, embracing_distance, is_zero_embracing
from omexchange.core import ElementAnchor
from omexchange.distance import symmetric_exchange_reachability, symmetric_exchanges

config, A, B = build_example2()
oracle = AffineOracle(config)
anchor = ElementAnchor(config.anchor_index)
name = config.name

for i, p in enumerate(config.points):
    print(f"{name(i)} = ({p[0]}, {p[1]})")

print("A =", [name(i) for i in A], " contains origin:", is_zero_embracing(config, A))
print("B =", [name(i) for i in B], " contains origin:", is_zero_embracing(config, B))

# Of the nine swaps, one works.
for e, f in symmetric_exchanges(oracle, anchor, A, B):
    print(f"feasible: {name(e)} <-> {name(f)}")

# The whole reachable pair graph has two nodes, so (B, A) is out of reach.
rep = symmetric_exchange_reachability(oracle, anchor, A, B)
print("\n".join(rep.lines(name)))

# One-sided exchanges are another matter.
res = embracing_distance(oracle, anchor, A, B)
print("one-sided distance:", res.distance, "rank:", oracle.rank)
