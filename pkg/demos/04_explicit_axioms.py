"""
Checking signed circuit axioms on a hand-written list
=====================================================

The explicit format lists one signed circuit per line.  Here we write the
circuits of a directed triangle, check them, then drop one sign-reversed
copy and watch the check fail.
"""

from pathlib import Path

from omexchange.core import parse_explicit, validate_circuit_axioms

text = (Path(__file__).parent / "triangle_circuits.txt").read_text()
ground, rank, circuits = parse_explicit(text)
print(f"ground set of {ground}, rank {rank}, {len(circuits)} circuits")
print("\n".join(validate_circuit_axioms(circuits, ground).lines()))

print("\nwithout the last circuit:")
print("\n".join(validate_circuit_axioms(circuits[:-1], ground).lines()))
