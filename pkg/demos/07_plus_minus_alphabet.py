"""
The generator/negation alphabet
===============================

"""

# Restrict the letters over a cyclic group of order d to a generator e and
# its negative.  Exactly three atoms exist: e^d, (-e)^d and e(-e), so the
# whole factorization theory is explicit.
from arithinv import plus_minus_alphabet

alpha, tame_set = plus_minus_alphabet(5)
print("letters:", alpha.labels)
print("predicted tame set:", sorted(tame_set))

from arithinv import enumerate_atoms

for a in enumerate_atoms(alpha).atoms:
    print("  atom:", a.render())

# Every sequence e^s (-e)^t with s = t mod d factors in closed form: one
# factorization per choice of how many pair-blocks e(-e) to use.
from arithinv import plus_minus_factorizations

fs = plus_minus_factorizations(12, 7, 5)
print("element:", fs.element.render())
for i in range(len(fs)):
    z = fs.factorization(i)
    print(f"  {len(z)} atoms:", " ".join(f"[{a.render()}]" for a in z))

# The closed form agrees with the generic engine, and the tame set of the
# alphabet is exactly {d}.
from arithinv import factorizations, ta_scan

generic = factorizations(fs.element)
print("closed form matches generic engine:", len(fs) == len(generic))
print("scanned tame set:", sorted(ta_scan(alpha, 30).values))
