"""Generate the word families the classification rests on.

Eight named sequences are available through one interface; each is a pure
prefix function (longer requests extend shorter ones letter for letter).
"""

from revpat import (
    SEQUENCE_IDS,
    collect_squares,
    contains_overlap,
    g_from,
    sequence_prefix,
    square_limited_prefix,
    thue_morse_prefix,
)

print("The families:")
for sid in SEQUENCE_IDS:
    print(f"  {sid:15s} {sequence_prefix(sid, 48)}")
print()

print("Thue-Morse is overlap-free: no factor a.z.a.z.a at all.")
print("  contains_overlap(prefix of 2000) =", contains_overlap(thue_morse_prefix(2000)))
print()

w = square_limited_prefix(2000)
print("The square-limited word allows exactly three squares:")
print("  squares of the 2000-prefix:", sorted(collect_squares(w)))
print()

print("Replacing each 10 by 12220 yields the ternary word g, whose letters")
print("only ever step 0 -> 1 -> 2 -> 0:")
g = g_from(w)[:60]
print("  g prefix:", g)
print("  forbidden steps 10/21/02 present?", any(s in g for s in ("10", "21", "02")))
