"""
Groups, letters and zero-sum sequences
======================================

"""

# A group is described by its free rank and invariant factors.  The text
# grammar joins factors with "x": C6, C2^3, C4xC6, ZxC3.
from arithinv import parse_group_spec, format_group_spec

spec = parse_group_spec("C2^2xC6")
print("parsed:", spec)
print("canonical text:", format_group_spec(spec))

# Elements are coordinate vectors, reduced modulo the torsion orders.
# One-coordinate groups render as multiples of a generator g.
from arithinv import parse_element, render_element

c5 = parse_group_spec("C5")
print("3g + 4g =", render_element(parse_element(c5, "3g") + parse_element(c5, "4g")))

# An alphabet fixes which classes may appear in a sequence; the block
# alphabet of a finite group has one letter per group element.
from arithinv import block_alphabet

alpha = block_alphabet(spec)
print("letters over C2^2xC6:", len(alpha))

# Sequences are unordered multisets of letters, written multiplicatively.
# Terms accept ^ powers and the aliases e1..er (coordinate generators)
# and e0 (their sum).
from arithinv import parse_sequence

b = parse_sequence(alpha, "e1^2 e2 e3 e0")
print("sequence:", b.render())
print("length:", len(b), " class sum:", b.class_sum(), " zero-sum:", b.class_sum().is_zero())

# Alphabets may also carry several distinct letters in the same class —
# the letters stay distinguishable even though their classes agree.
from arithinv import krull_alphabet

g = c5.element([1])
doubled = krull_alphabet(c5, {g: 2})
print("doubled class letters:", doubled.labels)
