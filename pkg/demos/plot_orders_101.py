"""
Comparing distributions under several information orders
=========================================================

"""

# a distribution is a validated point of the simplex
from infoorder import (Bayesian, LownerMinus, LownerPlus, Majorization, Restricted,
                       RestrictedParams, compare, make_distribution)

x = make_distribution([0.6, 0.2, 0.2])
y = make_distribution([0.5, 1 / 3, 1 / 6])

# the two renormalised orders disagree about this pair
for spec in (LownerPlus(), LownerMinus()):
    print(f"{spec.name:>14}: compare(x, y) = {compare(spec, x, y)}")

# sector orders only relate points sorted the same way
u, v = make_distribution([0.5, 0.3, 0.2]), make_distribution([0.7, 0.2, 0.1])
w = make_distribution([0.6, 0.15, 0.25])
for spec in (Bayesian(), Majorization()):
    print(f"{spec.name:>14}: u vs v {compare(spec, u, v)}, u vs w {compare(spec, u, w)}")

# a positive parameter loosens the restricted family
a, b = make_distribution([0.6, 0.25, 0.15]), make_distribution([0.65, 0.3, 0.05])
for a13 in (0.0, 1.0):
    spec = Restricted(RestrictedParams.build(3, 0.0, [a13]))
    print(f"restricted a13={a13}: {compare(spec, a, b)}")
