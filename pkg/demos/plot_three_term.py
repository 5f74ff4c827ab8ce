"""
Three-term relations between neighbouring surgeries
===================================================

"""

from torsionpoly import make_descriptor, verify_three_term

# p even: Y_(n+1) + Y_(n-1) = D Y_n, one step in n
rep = verify_three_term(make_descriptor(4, 3, 1))
print(rep.step, rep.passed, len(rep.checks))

# p and q odd: the relation jumps two steps
rep = verify_three_term(make_descriptor(3, 5, 2))
print(rep.step, rep.passed)
for check in rep.checks:
    print(check.a, check.b, check.passed)
