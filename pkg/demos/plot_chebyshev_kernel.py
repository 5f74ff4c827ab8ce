"""
Chebyshev polynomials with exact integer coefficients
=====================================================

"""

import math

from torsionpoly import IntPoly, chebyshev_T, chebyshev_U, exact_div

# T_l comes from the three-term recurrence and never leaves the integers
for l in range(6):
    print(f'T_{l}(x) =', chebyshev_T(l).format('x'))

# T_l(cos θ) = cos(lθ)
theta = 0.7
print(float(chebyshev_T(9)(math.cos(theta))), math.cos(9 * theta))

# the X polynomial of a surgery is a difference of two T's divided by 2(x^2 - 1)
N = 7
quotient = exact_div(chebyshev_T(N + 1) - chebyshev_T(N - 1), IntPoly([-2, 0, 2]))
print(quotient == chebyshev_U(N - 1), quotient.format('x'))
