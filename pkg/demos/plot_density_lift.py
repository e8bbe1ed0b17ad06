"""
Lifting simplex orders to density matrices
==========================================

"""

import numpy as np

from infoorder import Bayesian, LownerPlus
from infoorder.density import (conjugate, joint_diagonalize, lift_compare, lowner_psd_leq,
                               make_density_matrix, random_density_matrix, random_unitary)

rho = make_density_matrix([[0.5, 0.2], [0.2, 0.5]])
pi = make_density_matrix([[0.5, -0.1], [-0.1, 0.5]])

# commuting matrices share an eigenbasis; compare their paired spectra
jd = joint_diagonalize(rho, pi)
print("paired spectra:", jd.rho_eigs.tolist(), jd.pi_eigs.tolist())
print("lowner-plus:", lift_compare(LownerPlus(), rho, pi))

# a common rotation changes nothing
U = random_unitary(2, np.random.default_rng(0))
print("rotated:", lift_compare(LownerPlus(), conjugate(U, rho), conjugate(U, pi)))

# non-commuting pairs are never comparable
sigma = make_density_matrix(np.diag([0.6, 0.4]))
print("non-commuting:", lift_compare(Bayesian(), rho, sigma))

# the plain Loewner order is trivial on trace-one matrices
rng = np.random.default_rng(1)
a, b = random_density_matrix(3, rng), random_density_matrix(3, rng)
print("plain Loewner either way:", lowner_psd_leq(a, b), lowner_psd_leq(b, a))
