"""Quantum Theta_1 for U_q(sl3^) from the monodromy of L_1, and the ordering of its factors.

    python3 demos/quantum_theta.py [depth]

The assembled series equals exp_q(A) exp_q(B) in this order. The exponents
satisfy A B = q^-2 B A, so the two factors do not commute.
"""
import sys

from qtheta.rmatrix_theta import (assemble_theta1, compare_theta_closed, monodromy_tables,
                                  verify_exponential_commutation)

D = int(sys.argv[1]) if len(sys.argv) > 1 else 3

tables = monodromy_tables(D)
theta = assemble_theta1(tables, D)
print(f"Theta_1 up to z^{D}:")
for d in range(D + 1):
    print(f"  z^{d}:", theta.component(z=d).text()[:300])

for c in compare_theta_closed(theta, D, degree_bound=12):
    print(f"{c.status:4}  {c.name}")

print()
for c in verify_exponential_commutation(6):
    print(f"{c.status:4}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
