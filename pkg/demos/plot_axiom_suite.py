"""
Checking order axioms on a pool of points
=========================================

"""

from infoorder import Bayesian, LownerPlus, Measurement, PredicateOrder
from infoorder.suite import (SampleConfig, check_axioms, check_degeneracy,
                             check_measurement, replay, sample)

pool = sample(SampleConfig.grid(3, 10))
print(check_axioms(Bayesian(), pool).summary())

# the max-renormalised order is an information order, but it relates
# points across sector borders
rep = check_degeneracy(LownerPlus(), pool)
v = rep["degeneracy"].violations[0]
print("degeneracy witness:", v.witness, "replays:", replay(LownerPlus(), v))

print(check_measurement(LownerPlus(), Measurement.MU_PLUS, pool).summary())

# a broken order must be caught
broken = PredicateOrder(lambda x, y: x.max() <= y.max() + 1e-12, "max-only")
print(check_axioms(broken, pool).summary())

# random pools are reproducible from the seed
big = sample(SampleConfig.random(4, 2000, seed=1))
print(check_axioms(Bayesian(), big).summary())
