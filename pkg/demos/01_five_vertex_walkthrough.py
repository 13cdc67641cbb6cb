"""
Exchanging one embracing spanning tree for another
==================================================

Five vertices s, t, u, v, w and six arcs.  Two spanning trees both contain
a directed s -> t path.  We look for the shortest chain of single-arc swaps
that keeps such a path at every step.
"""

from omexchange import (
    GraphicOracle,
    SearchOptions,
    VertexPairAnchor,
    build_example1,
    embracing_distance,
    theorem2_sequence,
    tree_path,
    unoriented_distance,
    verify_exchange_sequence,
)

D, s, t, A, B = build_example1()
oracle = GraphicOracle(D)
anchor = VertexPairAnchor(s, t)
name = D.arc_name

print("arcs:", ", ".join(f"{i}={name(i)}" for i in range(D.m)))
print("A =", [name(a) for a in A])
print("B =", [name(a) for a in B])

# The s-t path inside each tree; every arc points forward.
for label, T in (("A", A), ("B", B)):
    path = tree_path(D, T, s, t)
    print(f"{label}[s,t] =", " ".join(name(a) + ("" if fwd else "(rev)") for a, fwd in path))

# Ignoring orientation, two swaps would do.
print("unoriented distance:", unoriented_distance(A, B))

# Breadth-first search over embracing trees says three are needed.
res = embracing_distance(oracle, anchor, A, B, SearchOptions("full"))
print("embracing distance:", res.distance)
for removed, added in res.witness.steps:
    print(f"  - {name(removed)} + {name(added)}")

# The constructive two-phase procedure: first copy B's s-t path, then fix the rest.
seq = theorem2_sequence(D, s, t, A, B)
rep = verify_exchange_sequence(oracle, anchor, A, B, seq)
print("constructive sequence:", ", ".join(f"-{name(r)} +{name(a)}" for r, a in seq.steps))
print("valid:", rep.valid, " monotone:", rep.monotone, " length bound:", D.n - 1)
