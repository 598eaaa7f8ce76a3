"""
Quantum 6j-symbols at an odd root of unity
==========================================

A walk through the arithmetic layer: quantum integers at
q = e^{2 pi i / r}, admissible colorings, the log-magnitude
representation of the symbol, and the moves that permute colors
without changing the magnitude.
"""

import math

import sixjvol as sv

# ---------------------------------------------------------------------
# 1. Quantum integers.  [n] = sin(2 pi n / r) / sin(2 pi / r); at an odd
#    level r they vanish exactly at n = 0 and n = r, and [r - n] = -[n].

r = 31
lvl = sv.OddLevel(r)
print(f"level r = {r}")
for n in (1, 2, 5, 15, 16, 30):
    print(f"  [{n:2d}] = {sv.quantum_integer(lvl, n):+.12f}")
print(f"  check [r-2] = -[2]: {sv.quantum_integer(lvl, r - 2):+.6f}"
      f" vs {-sv.quantum_integer(lvl, 2):+.6f}")

# ---------------------------------------------------------------------
# 2. Admissibility.  A triple of even colors is admissible when it
#    satisfies the triangle inequalities and the level cutoff
#    i + j + k <= 2r - 4; a 6-tuple must be admissible at all four
#    vertex triples of the tetrahedral spin network.

print("\nadmissible (2, 2, 2) at r=31:",
      sv.is_admissible_triple(2, 2, 2, lvl))
print("admissible (2, 2, 6) at r=31:",
      sv.is_admissible_triple(2, 2, 6, lvl))
print("tuple (2,4,6,4,6,4) admissible:",
      sv.is_admissible_tuple((2, 4, 6, 4, 6, 4), lvl))

# ---------------------------------------------------------------------
# 3. Evaluating the symbol.  sixj_log returns the value as
#    (log magnitude, quarter-turn phase); for admissible tuples the
#    symbol is real, and small cases can be cross-checked against the
#    direct product/sum formula.

t = sv.ColorSixTuple((2, 4, 6, 4, 6, 4), lvl)
q = sv.sixj_log(t)
print(f"\n6j(2,4,6,4,6,4) at r=31: log|.| = {q.log_mag:.12f}, "
      f"sign = {q.real_sign()}")
print(f"  as a float: {q.value():+.12e}")
print(f"  direct evaluation: {sv.sixj_exact_small(t).real:+.12e}")

# Some admissible tuples have an imaginary square root in the Delta
# factors; those raise rather than returning a garbage real part.
try:
    sv.sixj_log(sv.ColorSixTuple((2, 2, 2, 2, 2, 26), lvl))
except ArithmeticError as e:
    print(f"\nimaginary symbol is refused: {e}")

# ---------------------------------------------------------------------
# 4. Symmetries.  Face moves and quad moves act on the colors; the
#    magnitude of the symbol is invariant under each of them.

base = sv.ColorSixTuple((2, 4, 6, 4, 6, 4), lvl)
m0 = sv.sixj_log(base).log_mag
print("\nmagnitude under the three quad moves:")
for k in range(3):
    moved = sv.change_colors_quad(base, k)
    print(f"  quad {k}: colors {moved.colors} -> "
          f"log|.| = {sv.sixj_log(moved).log_mag:.12f} (base {m0:.12f})")
print("magnitude under the four face moves:")
for k in range(4):
    moved = sv.change_colors_face(base, k)
    print(f"  face {k}: colors {moved.colors} -> "
          f"log|.| = {sv.sixj_log(moved).log_mag:.12f}")

# ---------------------------------------------------------------------
# 5. The highest-growth coloring.  big_colors picks the admissible
#    coloring nearest to the hyperbolic regime for a given level.

big = sv.big_colors(sv.ColorSixTuple((0,) * 6, sv.OddLevel(101)))
print("\nbig_colors at r = 101:", big)
