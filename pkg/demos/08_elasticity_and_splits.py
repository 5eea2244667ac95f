"""
Elasticity targets and weighted splits
======================================

"""

# The elasticity of an element is max length over min length; the group
# elasticity is its supremum, D/2 for a finite group (taken over the full
# block alphabet).
from arithinv import block_alphabet, parse_group_spec, rho_group

spec = parse_group_spec("C5")
print("group elasticity of C5:", rho_group(spec))

# Every rational in [1, D/2] with small denominator is hit exactly by some
# element — the search returns the first witness in a canonical order.
from fractions import Fraction

from arithinv import elasticity, find_elasticity_witness

alpha = block_alphabet(spec)
for q in (Fraction(1), Fraction(5, 4), Fraction(3, 2), Fraction(2), Fraction(5, 2)):
    w = find_elasticity_witness(alpha, q, 40)
    print(f"  elasticity {q}: {w.render()}  (checked: {elasticity(w)})")

# Scanning elements up to a bound shows which elasticities appear early.
from arithinv import elasticity_scan

print("elasticities of C3 elements up to length 8:",
      [str(v) for v in elasticity_scan(block_alphabet(parse_group_spec('C3')), 8).values])

# A small integer routine used by the witness constructions: split
# "amounts" into a given number of columns, each of identical weighted
# size.  The construction is direct, so the constraints hold on return.
from arithinv import split_weighted_sum

weights = (2, 3, 5)          # weight product: 30
amounts = (12, 7, 3)         # weighted total: 2 * 30
for column in split_weighted_sum(weights, amounts, 2):
    print("  column:", column,
          "weighted size:", sum(a * c for a, c in zip(weights, column)))
