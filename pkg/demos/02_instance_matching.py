"""Find pattern instances inside words.

An instance substitutes a non-empty word for each variable, with uppercase
slots receiving the reversed value.  The matcher scans a word for any such
substitution and returns an explicit, deterministic witness.
"""

from revpat import (
    alternating_prefix,
    apply_morphism,
    avoids,
    find_instance,
    find_instance_bounded,
    witness_image,
)

print("Building an instance by hand: pattern xyyX with X=01, Y=2")
image = apply_morphism("xyyX", x="01", y="2")
print("  image:", image)
print()

print("Searching words:")
for word, pattern in [("010", "xyx"), ("010", "xyX"), ("0110", "xX"), ("0011", "xyx")]:
    wit = find_instance(word, pattern)
    if wit is None:
        print(f"  {word!r} avoids {pattern!r}")
    else:
        print(f"  {word!r} contains {pattern!r}: start={wit.start} x={wit.x!r} y={wit.y!r}"
              f" (factor {witness_image(pattern, wit)!r})")
print()

print("Bounded search caps the variable lengths (here |X| <= 1):")
print("  ", find_instance_bounded("0110", "xX", 1, 1))
print()

print("The alternating word has no factor of the form X followed by its")
print("own reversal (that would need a doubled letter):")
print("  avoids(0101...0, xX) =", avoids(alternating_prefix(50), "xX"))
