"""
Catenary degrees and minimal relations
======================================

"""

# The catenary degree of an element is the smallest N such that any two of
# its factorizations are linked by a chain of factorizations with steps of
# distance at most N.
from arithinv import block_alphabet, catenary, parse_group_spec, parse_sequence

alpha = block_alphabet(parse_group_spec("C4"))
b = parse_sequence(alpha, "g^4 (2g)^2 (3g)^4")
print(b.render(), "has catenary degree", catenary(b))

# Scanning all elements up to a bound gives the catenary set; alongside it
# sits the relation set, from the distances that minimal relation chains
# must realize.  The catenary set always sits inside the relation set and
# both share the same maximum.
from arithinv import ca_scan, r_scan

ca = ca_scan(alpha, 10)
rel = r_scan(alpha, 10)
print("catenary set:", sorted(ca.values))
print("relation set:", sorted(rel.values))

# Witness elements are recorded for every observed value.
for v, w in sorted(ca.witnesses.items()):
    print(f"  catenary {v} at {w.render()}")

# Repeating a letter class changes the picture: with two letters in the
# one nonzero class of C2, products of the three atoms already need
# rearranging at distance 2.
from arithinv import krull_alphabet

c2 = parse_group_spec("C2")
doubled = krull_alphabet([c2.element([1])], 2)
print("doubled C2 class, catenary set:", sorted(ca_scan(doubled, 10).values))

# Over the integers, the family g^n (-g)^n (ng) (-ng) realizes catenary
# degree n+1 — verified here from scratch rather than trusted.
from arithinv import integer_catenary_witnesses, verify_witness

for n in (2, 3, 4):
    chain, _ = integer_catenary_witnesses(n)
    print(verify_witness(chain).summary())
