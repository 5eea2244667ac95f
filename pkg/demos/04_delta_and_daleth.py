"""
Length-gap sets across a whole alphabet
=======================================

"""

# Scanning every zero-sum element up to a length bound collects the union
# of the per-element length gaps.  Over C3 the only gap is 1.
from arithinv import block_alphabet, delta_scan, parse_group_spec

alpha3 = block_alphabet(parse_group_spec("C3"))
report = delta_scan(alpha3, 9)
print(report.summary())
for v, w in report.witnesses.items():
    print(f"  gap {v} first seen at {w.render()}")

# Scans that materialize factorizations accept a per-element cap on the
# factorization count, trading completeness for speed; skipped elements
# are counted and the report stops claiming completeness.
from arithinv import ScanBound, ca_scan

capped = ca_scan(alpha3, ScanBound(9, max_factorization_count=1))
print("capped catenary scan complete?", capped.complete, "-", dict(capped.annotations))

# The gap scan itself cross-checks its values against the pair-product
# scan whenever the bound makes that inclusion observable.
print("cross-check annotation:", report.annotations["pair_gap_check"])

# The companion invariant looks at products of two atoms only: collect
# min(L(uv) minus {2}) over atom pairs.  Over C3 and C2^2 it is {3};
# over C2 the scan is empty because every product of two atoms there
# factors uniquely.
from arithinv import daleth_star

for text in ("C3", "C2^2", "C2"):
    rep = daleth_star(block_alphabet(parse_group_spec(text)))
    print(f"{text:5s} pair length-gap set:", sorted(rep.values) or "(empty)")
