"""Borel cosets, canonical representatives, and relative position.

A point of the flag variety is stored as the canonical representative of
a coset g B^+.  The relative position of two flags is a permutation, and
the pair of positions with respect to the two standard flags stratifies
the whole variety.  Run with

    python3 demos/02_flags_and_position.py
"""

import random

from tnnflag import weyl
from tnnflag.flag import act, b_minus, b_plus, borel_from, relative_position, stratum
from tnnflag.linalg import Rat, gen_x, gen_y, mat_mul, rep_weyl


def show(label, b):
    idx = stratum(b)
    print(f"  {label}: stratum (w={weyl.perm_to_str(idx.w)}, "
          f"w'={weyl.perm_to_str(idx.wp)})")
    for row in b.rep:
        print("     ", [str(x) for x in row])


def main() -> None:
    n = 3
    print("The two standard flags:")
    show("B^+", b_plus(n))
    show("B^-", b_minus(n))

    print("\nTranslates w . B^+ have relative position w from B^+:")
    for w in weyl.all_perms(n):
        b = borel_from(rep_weyl(w))
        pos = relative_position(b_plus(n), b)
        assert pos == w
        print(f"  w = {weyl.perm_to_str(w)}  ->  position {weyl.perm_to_str(pos)}")

    print("\nA generic point lands in the open stratum:")
    rng = random.Random(0)
    g = mat_mul(gen_y(n, 1, Rat(2)), gen_y(n, 2, Rat(3)))
    g = mat_mul(g, gen_x(n, 1, Rat(rng.randint(1, 5))))
    g = mat_mul(g, gen_y(n, 1, Rat(1, 2)))
    show("g . B^+", borel_from(g))

    print("\nActing by an upper-triangular element keeps the coset fixed:")
    b = borel_from(g)
    assert act(gen_x(n, 2, Rat(7)), b_plus(n)) == b_plus(n)
    print("  x_2(7) . B^+ == B^+  (canonical reps are equal)")


if __name__ == "__main__":
    main()
