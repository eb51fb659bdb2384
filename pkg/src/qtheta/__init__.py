"""Exact verification of Theta series for Yangians and quantum affine sl3.

Submodules:
    scalars        exact rationals, Laurent polynomials and rational functions in q
    ncalg          free algebras, rewriting rules, ideal membership, tensor products
    yangian        sl_{n+1} Yangian Theta series, closed form and recursive solver
    cartan_series  GKLO and S-series difference equations
    qaffine        U_q(sl3^) braid action, root vectors, Drinfeld-Jimbo dictionary
    prefund        the prefundamental module L_1
    rmatrix_theta  monodromy of the triangular R-matrix and the quantum Theta series
    cli            the ``qtheta`` command
"""

__version__ = "0.1.0"
