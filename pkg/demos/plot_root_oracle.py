"""
Cross-checking against the torsion values themselves
====================================================

"""

from torsionpoly import collect_roots, compare, locate_roots, make_descriptor, reconstruct, sigma

d = make_descriptor(3, 5, 1)
tp = sigma(d)

# the roots of σ are the numbers 1/τ over the acyclic representations
ms = collect_roots(d, precision=128)
print(len(ms), tp.degree)

# rebuild σ from its roots in 128-bit floating point and compare
report = compare(tp.sigma, reconstruct(ms, tp.leading), rel_tol=1e-9)
print(report.passed, report.max_error)

# and locate every root exactly by a sign change
loc = locate_roots(tp.sigma, ms.roots)
print(loc.passed, loc.min_gap)
