"""
Atoms and the longest-atom constant
===================================

"""

# An atom is a nonempty zero-sum sequence with no proper nonempty zero-sum
# subsequence.  Every zero-sum sequence factors into atoms, usually in
# more than one way.
from arithinv import block_alphabet, enumerate_atoms, parse_group_spec

alpha = block_alphabet(parse_group_spec("C5"))
enum = enumerate_atoms(alpha)
print("atoms over C5:", len(enum.atoms))
for a in enum.atoms[:6]:
    print("  ", a.render())

# The largest atom length is the Davenport constant of the alphabet.
print("longest atom:", enum.davenport)

# For a finite group, 1 + sum(order - 1) over the invariant factors is a
# lower bound, with equality for p-groups and for at most two factors.
from arithinv import davenport, davenport_star

for text in ("C7", "C2^4", "C3^2", "C4xC6"):
    spec = parse_group_spec(text)
    d = davenport(block_alphabet(spec))
    print(f"{text:6s}  longest atom {d}   torsion bound {davenport_star(spec)}")

# Enumerations can be cached on disk (directory overridable through the
# ARITH_CACHE_DIR environment variable); reloading seeds the in-process
# engine so later queries skip the enumeration.
from arithinv import cache_dir, cached_enumerate_atoms

warm = cached_enumerate_atoms(alpha)
print("cache dir:", cache_dir())
print("cached count matches:", len(warm.atoms) == len(enum.atoms))
