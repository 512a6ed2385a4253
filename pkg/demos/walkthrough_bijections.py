#!/usr/bin/env python3
"""Tour of the bijections on the two large reference trees in figures/.

Run from the repository root:  python3 demos/walkthrough_bijections.py
"""

import json
from pathlib import Path

from natlib.bijections import omega, phi, psi, psi_inverse, recolour, zeta
from natlib.formulas import hook_formula, sigma_readings
from natlib.nat_core import nat_stats
from natlib.perms import blue_blocks, cycles, imaj, inv
from natlib.treedoc import load_document
from natlib.trees import childleaf_count

FIGURES = Path(__file__).parent / "figures"


def load(name):
    with open(FIGURES / name, "r", encoding="utf-8") as fh:
        return load_document(json.load(fh))


def main() -> None:
    t = load("burstein.json")
    print(f"# 23-vertex tree, geometric size {t.w_l} x {t.w_r}")
    sigma = phi(t)
    print("zigzag permutation (first column deleted):")
    print(" ", "".join("(" + " ".join(map(str, c)) + ")"
                       for c in cycles(sigma)))
    c = recolour(psi(t), t.w_l, t.w_r)
    print("full zigzag cycle, recoloured:")
    print(" ", c)
    print("hook number:", nat_stats(t).hook,
          "= blue blocks of the cycle:", blue_blocks(c))
    assert psi_inverse(c) == t, "round trip failed"
    print("psi inverse reconstructs the tree exactly.")
    print("omega twin of the cycle:")
    print(" ", omega(c))
    print()

    t = load("sigma_example.json")
    print(f"# 22-vertex tree, geometric size {t.w_l} x {t.w_r}")
    sigma_l, sigma_r = sigma_readings(t)
    print("postfix label readings:")
    print("  sigma_L =", sigma_l)
    print("  sigma_R =", sigma_r)
    print("  inv  =", (inv(sigma_l), inv(sigma_r)))
    print("  imaj =", (imaj(sigma_l), imaj(sigma_r)))
    print("hook number:", nat_stats(t).hook)
    print()

    shape = load("ex_hook.json")
    print("# 8-vertex binary shape")
    print("labellings admitted by the shape (hook formula):",
          hook_formula(shape))
    ordered = zeta(shape)
    print("zeta image has", childleaf_count(ordered),
          "child leaves; document:", json.dumps(
              {"children": "..."} if ordered.children else {}))


if __name__ == "__main__":
    main()
