#!/usr/bin/env python3
"""Tour of the generating-series machinery and its closed-form cross-checks.

Run from the repository root:  python3 demos/walkthrough_series.py
"""

from math import factorial

from natlib.formulas import count_by_size
from natlib.nat_core import enumerate_nats_by_size
from natlib.series import (
    closed_N_ab,
    solve_Bp_Op,
    solve_M,
    solve_N,
    solve_N_dk,
)

ORDER = 8


def main() -> None:
    n = solve_N(ORDER)
    print("# doubly exponential counting series N(x, y), order", ORDER)
    print("counts by geometric size (row i+1, column j+1 at x^i y^j):")
    for i in range(0, 5):
        row = []
        for j in range(0, 5):
            if i + j > ORDER:
                break
            c = n.coefficient(x=i, y=j).as_fraction()
            row.append(str(int(c * factorial(i) * factorial(j))))
        print("  ", " ".join(row))

    closed = closed_N_ab(ORDER).substitute_params(alpha=1, beta=1)
    print("fixed point equals the closed form:", n == closed.truncate(ORDER))

    m = solve_M(ORDER)
    lhs = m.partial_derivative("x").partial_derivative("y").truncate(ORDER - 2)
    print("N = d2M/dxdy:", lhs == n.truncate(ORDER - 2))

    poly = count_by_size(3, 3)
    print("(alpha, beta)-count for size 3x3:", poly)
    print("  at alpha=beta=1:",
          int(poly.substitute(alpha=1, beta=1).as_fraction()),
          "= brute force:", len(enumerate_nats_by_size(3, 3)))

    ndk = solve_N_dk(3, 3, 3)
    print("# (3,3) series: coefficient of (x1 x2 x3)^n is 1/(n!)^3")
    for nn in range(4):
        print("  n =", nn, "->",
              ndk.coefficient(x1=nn, x2=nn, x3=nn).as_fraction())

    b, o = solve_Bp_Op(6)
    print("# hook statistic over binary trees: the two functional")
    print("# equations give the same series:", b == o)
    print("x^4 slice (t marks hooks):",
          {k: int(b.coefficient(x=4, t=k).as_fraction()) for k in range(1, 5)})


if __name__ == "__main__":
    main()
