"""
Auditing random instances against the rank bound
================================================

Seeded batches of digraphs and point sets.  For each instance we compute the
exact embracing distance in both search modes and compare it with the rank.
Anything over the bound would be written to a counterexample file.
"""

import tempfile

from omexchange.harness import audit, format_report, generate_instances, summarize

dump_dir = tempfile.mkdtemp(prefix="omexchange-")

graphic = generate_instances("graphic", 40, seed=7, n=6)
records = audit(graphic, dump_dir=dump_dir, check_monotone=True)
print(format_report(records[:10], "graphic"))
print(summarize(records))

# Affine instances: 2(d+1) points, general position, two disjoint embracing simplices.
affine = generate_instances("affine", 6, seed=7)
records = audit(affine, dump_dir=dump_dir)
print(format_report(records, "affine"))
print(summarize(records))
print("dumps (if any) in", dump_dir)
