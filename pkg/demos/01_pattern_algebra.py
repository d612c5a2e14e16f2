"""Walk through the pattern alphabet and its symmetries.

Patterns are strings over x, X, y, Y; an uppercase letter marks the slot
filled by the reversal of the variable's value.  Three involutions generate
an equivalence on patterns, and each class has a canonical (least) member.
"""

from revpat import canonical, equivalence_class, factors, iota, sorted_patterns

print("The three symmetry maps, each its own inverse:")
print("  swap reversal marks on x:  iota(1, 'xyxY') =", iota(1, "xyxY"))
print("  swap the two variables:    iota(2, 'xyxY') =", iota(2, "xyxY"))
print("  reverse the pattern:       iota(3, 'xyxY') =", iota(3, "xyxY"))
print()

print("A single symbol is equivalent to every other single symbol:")
print("  class of 'x':", sorted_patterns(equivalence_class("x")))
print()

print("Canonical forms pick the least member under x < X < y < Y:")
for p in ("Xyy", "xyXy", "yy", "YXYX"):
    members = sorted_patterns(equivalence_class(p))
    print(f"  {p!r:8} -> {canonical(p)!r}   (class of {len(members)}: {' '.join(members)})")
print()

print("Factors of a pattern are its contiguous pieces:")
print("  factors('xyxY') =", sorted_patterns(factors("xyxY")))
