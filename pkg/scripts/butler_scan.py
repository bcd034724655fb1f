#!/usr/bin/env python3
"""Projective-normality scan over Hirzebruch universal families.

For every (i, a, b, n) in the grid, check that the adjoint classes F_k - K
for L = nA lie in the interior of the nef cone for k = 1..5.
"""

import sys

import nestcone as nc


def main() -> int:
    all_ok = True
    for i in (0, 1, 2):
        for a in (1, 2):
            for b in (1, 2):
                for n in range(4, 9):
                    inp = nc.ButlerInput(i=i, a=a, b=b, n=n, k_range=(1, 5))
                    rep = nc.butler_check(inp)
                    mark = "interior" if rep.all_interior else "NOT interior"
                    print(f"i={i} A={a}H+{b}F n={n}: {mark}")
                    all_ok &= rep.all_interior
    ref = nc.butler_check(nc.ButlerInput(i=1, a=1, b=1, n=4, k_range=(1, 1)))
    coeffs = ", ".join(str(c) for c in ref.steps[0].ray_coefficients)
    print(f"\nreference point (i=1, a=b=1, n=4, k=1): coefficients ({coeffs})")
    for i in range(4):
        lhs, rhs = nc.half_b_a(i)
        assert (lhs - rhs).is_zero()
    print("half-B^a expansion identity holds exactly for i = 0..3")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
