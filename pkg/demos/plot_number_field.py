"""
Exact arithmetic with 2cos(π/p) and 2cos(π/q)
=============================================

"""

from torsionpoly import FieldContext, c_constant, min_poly_2cos
from torsionpoly.cyclofield import nf_inverse, numeric_embed

# minimal polynomials of u = 2cos(π/p)
for m in (3, 4, 5, 7):
    print(m, min_poly_2cos(m).format('u'))

ctx = FieldContext(4, 3)
u = ctx.gen_u()
print(u * u)

# C = (1 - cos aπ/p)(1 - cos bπ/q) stays an exact element of the ring
c = c_constant(ctx, 1, 1)
print(c, float(numeric_embed(c)))

# inverses are exact too
print(nf_inverse(c), nf_inverse(c) * c == 1)

# conjugate embeddings: u -> 2cos(3π/4)
print(float(numeric_embed(u, 3, 1)))
