"""
Factorizations, sets of lengths and elasticity
==============================================

"""

# A factorization of a zero-sum sequence is a multiset of atoms whose
# product is the sequence.  The set of lengths records how many atoms the
# different factorizations use.
from arithinv import block_alphabet, factorizations, parse_group_spec, parse_sequence

alpha = block_alphabet(parse_group_spec("C3"))
b = parse_sequence(alpha, "g^3 (-g)^3")
fs = factorizations(b)
print("element:", b.render())
for i in range(len(fs)):
    z = fs.factorization(i)
    print(f"  {len(z)} atoms:", " ".join(f"[{a.render()}]" for a in z))

from arithinv import elasticity, length_set

print("set of lengths:", sorted(length_set(b)))
print("elasticity:", elasticity(b))

# Lengths are computed without materializing factorizations, so large
# length sets stay cheap even when the factorization count explodes.
from arithinv import factorization_count, min_max_lengths

big = parse_sequence(alpha, "g^12 (-g)^12")
print(f"factorizations of {big.render()}:", factorization_count(big))
print("min/max length:", min_max_lengths(big))

# The gaps between successive lengths form the delta set of the element.
from arithinv import delta_of

print("gaps of", sorted(length_set(big)), "->", sorted(delta_of(length_set(big))))

# Distance between two factorizations: cancel the shared atoms, then take
# the larger remaining side.  It drives both catenary and tame degrees.
from arithinv import distance

za, zb = fs.factorization(0), fs.factorization(1)
print("distance between the two factorizations above:", distance(za, zb))
