"""
The torsion polynomial of a 1/n surgery
=======================================

"""

from torsionpoly import degree_formula, enumerate_reps, make_descriptor, sigma

# 1/n surgery on the (4,3) torus knot is the Brieskorn sphere Σ(4,3,|12n+1|)
d = make_descriptor(4, 3, -1)
print(d.brieskorn, d.parity_case)

# acyclic representation classes have a and b odd
reps = enumerate_reps(d)
print(len(reps), sum(r.acyclic for r in reps))

tp = sigma(d)
print(tp.sigma.format('t'))
print(tp.degree, degree_formula(d), tp.sign_corrected)

# the published normalization uses t -> 4t
print(tp.scaled().format('t'))

# one Y factor per pair (a, b)
for f in tp.factors:
    print(f.a, f.b, f.degree)

# zero surgery gives S^3 and the constant 1
print(sigma(make_descriptor(4, 3, 0)).sigma)
