"""Instances of patterns with reversal inside finite words.

Words are strings of digits over an alphabet {0, ..., k-1}, k <= 10.  An
instance of a pattern assigns a non-empty word to each variable; a lowercase
slot receives the variable's value, an uppercase slot its reversal.  The
search enumerates (start, |X|, |Y|) triples in ascending order, so returned
witnesses are deterministic: smallest start, then smallest |X|, then
smallest |Y|.

Only-y patterns are matched through their x-renamed form; the witness then
carries a y assignment and no x assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .patterns import iota, variable_counts


@dataclass(frozen=True)
class InstanceWitness:
    """One occurrence: the factor at ``start`` is the image of the pattern.

    ``x`` (``y``) is present exactly when the pattern uses that variable.
    """

    start: int
    x: str | None
    y: str | None


def parse_word(text: str, alphabet_size: int | None = None) -> str:
    """Validate a digit-string word; letters must be below the alphabet size."""
    if alphabet_size is not None and not 1 <= alphabet_size <= 10:
        raise ValueError(f"alphabet size must be between 1 and 10, got {alphabet_size}")
    for i, ch in enumerate(text):
        if not ch.isdigit():
            raise ValueError(f"invalid word letter {ch!r} at position {i}: expected a digit")
        if alphabet_size is not None and int(ch) >= alphabet_size:
            raise ValueError(
                f"letter {ch} at position {i} is outside the {alphabet_size}-letter alphabet"
            )
    return text


def apply_morphism(p: str, x: str | None = None, y: str | None = None) -> str:
    """Image of p under x -> X, X -> reversal(X), y -> Y, Y -> reversal(Y).

    Images must be non-empty for every variable the pattern actually uses
    (the morphism is non-erasing).
    """
    a, b = variable_counts(p)
    if a and not x:
        raise ValueError("pattern uses variable x but no non-empty x image was given")
    if b and not y:
        raise ValueError("pattern uses variable y but no non-empty y image was given")
    images = {
        "x": x or "",
        "X": (x or "")[::-1],
        "y": y or "",
        "Y": (y or "")[::-1],
    }
    return "".join(images[sym] for sym in p)


@lru_cache(maxsize=4096)
def _slots(p: str) -> tuple[tuple[bool, bool], ...]:
    """Per symbol: (is_x_variable, is_forward_slot)."""
    return tuple((sym in "xX", sym in "xy") for sym in p)


def _search(w: str, p: str, max_x: int | None, max_y: int | None) -> InstanceWitness | None:
    if not p:
        raise ValueError("the empty pattern has no instances; classify it directly")
    a, b = variable_counts(p)
    if a == 0:
        inner = _search(w, iota(2, p), max_y, max_x)
        if inner is None:
            return None
        return InstanceWitness(inner.start, None, inner.x)

    n = len(w)
    data = w.encode()
    mv = memoryview(data)
    rmv = memoryview(data[::-1])
    slots = _slots(p)
    big = n + 1

    for start in range(n):
        room = n - start
        lim_x = (room - b) // a
        if max_x is not None:
            lim_x = min(lim_x, max_x)
        for lx in range(1, lim_x + 1):
            if b:
                lim_y = (room - a * lx) // b
                if max_y is not None:
                    lim_y = min(lim_y, max_y)
                ly_range = range(1, lim_y + 1)
            else:
                ly_range = range(1)
            for ly in ly_range:
                vx = vy = None
                pos = start
                ok = True
                for is_x, fwd in slots:
                    length = lx if is_x else ly
                    seg = mv[pos:pos + length] if fwd else rmv[n - pos - length:n - pos]
                    if is_x:
                        if vx is None:
                            vx = seg
                        elif vx != seg:
                            ok = False
                            break
                    else:
                        if vy is None:
                            vy = seg
                        elif vy != seg:
                            ok = False
                            break
                    pos += length
                if ok:
                    x_val = bytes(vx).decode()
                    y_val = bytes(vy).decode() if vy is not None else None
                    return InstanceWitness(start, x_val, y_val)
    return None


def find_instance(w: str, p: str) -> InstanceWitness | None:
    """First instance of p in w, or None when w avoids p."""
    return _search(w, p, None, None)


def find_instance_bounded(w: str, p: str, max_x: int, max_y: int) -> InstanceWitness | None:
    """Like find_instance, restricted to |X| <= max_x and |Y| <= max_y."""
    if max_x < 1 or max_y < 1:
        raise ValueError("variable-length bounds must be at least 1")
    return _search(w, p, max_x, max_y)


def avoids(w: str, p: str) -> bool:
    """True when no factor of w is an instance of p."""
    return _search(w, p, None, None) is None


def witness_image(p: str, witness: InstanceWitness) -> str:
    """Rebuild the matched factor from a witness's variable assignment."""
    return apply_morphism(p, witness.x, witness.y)
