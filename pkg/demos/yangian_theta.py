"""Yangian Theta series for sl3, node 1: closed form, recursive solution, intertwining.

    python3 demos/yangian_theta.py [height]
"""
import sys

from qtheta.yangian import (intertwining_residuals, sl_commutator_rules, solve_theta_recursive,
                            theta_closed_form, verify_shift_zigzag)

H = int(sys.argv[1]) if len(sys.argv) > 1 else 3
n, i = 2, 1

theta = theta_closed_form(n, i, H)
print(f"closed form, n={n}, node {i}, height <= {H}:")
print(" ", theta.text())

solved, notes = solve_theta_recursive(n, i, H)
print("recursive solution agrees:", (solved - theta).is_zero())
for line in notes:
    print("  ", line)

rules = sl_commutator_rules(n, i)
res = intertwining_residuals(theta, rules, H)
print("intertwining residuals vanish:", all(r.is_zero() for r in res.values()))

for c in verify_shift_zigzag(n, i).checks:
    print(f"zigzag: {c.status:4}  {c.name}")
