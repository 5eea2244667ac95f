"""
Tame degrees: local repair cost of factorizations
=================================================

"""

# The tame degree t(b, u) measures how far a factorization of b must move
# to incorporate a prescribed atom u (when u divides b at all).
from arithinv import block_alphabet, parse_group_spec, parse_sequence, tame

alpha = block_alphabet(parse_group_spec("C2^3"))
b = parse_sequence(alpha, "e1^2 e2^2 e3^2 e0^2")
u = parse_sequence(alpha, "e0 e1 e2 e3")
print(f"t({b.render()}, {u.render()}) =", tame(b, u))

# Sweeping all elements and all atoms dividing them gives the tame set.
from arithinv import ta_scan

print("tame set of C2^2 at bound 12:", sorted(ta_scan(block_alphabet(
    parse_group_spec("C2^2")), 12).values))

# An atom of length m times its reflection (negate every letter) always
# realizes tame degree exactly m.
from arithinv import reflection_tame_witness, verify_witness

for m in (3, 4, 5):
    print(verify_witness(reflection_tame_witness(parse_group_spec("C5"), m)).summary())

# Over elementary 2-groups there is a four-variant family of elements
# whose tame degree is known in closed form, roughly r^2/2 for rank r.
from arithinv import two_group_tame_family

for nu in (1, 2, 3, 4):
    w = two_group_tame_family("even", 4, nu)
    print(verify_witness(w).summary())

# When full enumeration would be too large, a certificate argument can
# still pin the value: if b/u factors uniquely and no factorization of b
# beats the designated route in length, the tame degree is the route
# length.  The verifier falls back to it automatically on a size cap.
w = two_group_tame_family("even", 6, 1)
print(verify_witness(w, max_factorizations=100).summary())
