"""Classification of patterns with reversal by avoidability index.

Every pattern is 2-avoidable, 3-avoidable-but-not-2, or unavoidable.  The
decision procedure is closed-form: a pattern is unavoidable exactly when its
canonical form is one of the five listed in UNAVOIDABLE_CANONICAL, and
2-avoidable exactly when some factor canonicalizes into the seventeen
TWO_AVOIDABLE_SEEDS.  The search machinery in this module exists to
cross-validate that procedure, not to implement it: ``prove_k_unavoidable``
exhausts the tree of avoiding words over a k-letter alphabet, and
``seed_free_patterns`` rebuilds the finite table of canonical patterns with
no 2-avoidable factor.

The pattern graph (an edge {reversed-mark(a), b} for every length-2 factor
ab) decides whether the alternating word 0101... contains an instance: it
does exactly when the graph is 2-colorable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .matcher import _slots
from .patterns import (
    PATTERN_ALPHABET,
    canonical,
    equivalence_class,
    factors,
    iota,
    pattern_key,
    reverse_mark,
    variable_counts,
)
from .sequences import alternating_prefix
from .matcher import apply_morphism


class Avoidability(Enum):
    TWO = 2
    THREE = 3
    UNAVOIDABLE = "infinity"


# The seventeen canonical seeds of 2-avoidability, partitioned by the
# construction that avoids them: classical binary words (Thue/Roth/Cassaigne
# patterns without reversal marks), the square-limited word, the alternating
# word 0101..., and the four morphic images w1..w4 of Thue-Morse.
SEED_PARTITION: dict[str, frozenset[str]] = {
    "classical": frozenset({"xxx", "xxyxyy", "xxyyx", "xyxxy", "xyxyx"}),
    "square_limited": frozenset({"xyxyX"}),
    "alternating": frozenset({"xX", "xxyxY", "xxyXy", "xxyXY", "xxyyX", "xyXXy", "xyyX"}),
    "morphic": frozenset({"xyxYx", "xyxYX", "xyXyx", "xyXYx"}),
}

TWO_AVOIDABLE_SEEDS: frozenset[str] = frozenset().union(*SEED_PARTITION.values())

THREE_AVOIDABLE_SEEDS: frozenset[str] = frozenset({"xx", "xyxy", "xyxY", "xyXY"})

# Canonical forms of the unavoidable patterns: the prefixes of xyx and xyX.
UNAVOIDABLE_CANONICAL: frozenset[str] = frozenset({"", "x", "xy", "xyx", "xyX"})


def classify(p: str) -> Avoidability:
    """Avoidability index of a pattern (the empty pattern is unavoidable)."""
    if canonical(p) in UNAVOIDABLE_CANONICAL:
        return Avoidability.UNAVOIDABLE
    if any(canonical(u) in TWO_AVOIDABLE_SEEDS for u in factors(p)):
        return Avoidability.TWO
    return Avoidability.THREE


@lru_cache(maxsize=None)
def seed_free_patterns(n: int) -> frozenset[str]:
    """Canonical length-n patterns none of whose factors is a 2-avoidable seed.

    Built by extending the length n-1 table: every such pattern of positive
    length is some orbit member of a shorter one plus a final symbol.  The
    table empties out at length 6 and stays empty.
    """
    if n < 0:
        raise ValueError("pattern length must be non-negative")
    if n == 0:
        return frozenset({""})
    out = set()
    for shorter in seed_free_patterns(n - 1):
        for r in equivalence_class(shorter):
            for sym in PATTERN_ALPHABET:
                q = r + sym
                if q in out or canonical(q) != q:
                    continue
                if all(canonical(u) not in TWO_AVOIDABLE_SEEDS for u in factors(q)):
                    out.add(q)
    return frozenset(out)


# --- exhaustive avoider search ---------------------------------------------------

@dataclass(frozen=True)
class BacktrackReport:
    """Outcome of one depth-first search of the avoiding-word tree.

    ``terminated`` means the whole tree was exhausted below the depth limit,
    certifying that no avoiding word of that length exists; otherwise some
    branch reached the limit and ``longest_word`` is an avoiding word of
    exactly that length.
    """

    pattern: str
    alphabet_size: int
    depth_limit: int
    terminated: bool
    nodes_visited: int
    longest_word_length: int
    longest_word: str

    def as_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "alphabet_size": self.alphabet_size,
            "depth_limit": self.depth_limit,
            "terminated": self.terminated,
            "nodes_visited": self.nodes_visited,
            "longest_word_length": self.longest_word_length,
            "longest_word": self.longest_word,
        }


_DEFAULT_DEPTH = {2: 400, 3: 60}


def _suffix_repeats(data: bytes, n: int, lx: int, two_sided: bool) -> bool:
    """Does the length-lx suffix (or, two-sided, its reversal) occur inside
    the first n-1 letters?  False rules out instances for this and every
    larger lx: any instance places another slot with those raw bytes fully
    before the last letter, and a longer suffix contains the shorter one.
    """
    sfx = data[n - lx:n]
    if data.find(sfx, 0, n - 1) != -1:
        return True
    return two_sided and data.find(sfx[::-1], 0, n - 1) != -1


def _pure_end_check(flags: tuple[bool, ...], a: int):
    """End-anchored check for a pattern using only x and X slots."""
    two_sided = 0 < sum(flags) < len(flags)
    repeated = len(flags) >= 2

    def check(data: bytes, rdata: bytes | None, n: int) -> bool:
        mv = memoryview(data)
        rmv = memoryview(rdata) if rdata is not None else None
        for lx in range(1, n // a + 1):
            if repeated and not _suffix_repeats(data, n, lx, two_sided):
                return False
            pos = n - a * lx
            first = None
            for fwd in flags:
                seg = mv[pos:pos + lx] if fwd else rmv[n - pos - lx:n - pos]
                if first is None:
                    first = seg
                elif first != seg:
                    break
                pos += lx
            else:
                return True
        return False

    return check


def _gap_then_block_check(flags: tuple[bool, ...], a: int):
    """End-anchored check for y followed by an x-only block: the block must
    occupy a suffix while leaving at least one letter for the gap."""

    two_sided = 0 < sum(flags) < len(flags)
    repeated = len(flags) >= 2

    def check(data: bytes, rdata: bytes | None, n: int) -> bool:
        mv = memoryview(data)
        rmv = memoryview(rdata) if rdata is not None else None
        for lx in range(1, (n - 1) // a + 1):
            if repeated and not _suffix_repeats(data, n, lx, two_sided):
                return False
            pos = n - a * lx
            first = None
            for fwd in flags:
                seg = mv[pos:pos + lx] if fwd else rmv[n - pos - lx:n - pos]
                if first is None:
                    first = seg
                elif first != seg:
                    break
                pos += lx
            else:
                return True
        return False

    return check


def _block_gap_block_check(pre: tuple[bool, ...], post: tuple[bool, ...], a: int):
    """End-anchored check for <x-block> y <x-block> shaped patterns.

    For each |X| the trailing block pins X, the leading block then is a
    concrete string, and the flexible y gap turns its placement into a single
    substring search.
    """
    k1, k2 = len(pre), len(post)
    two_sided = 0 < sum(pre) + sum(post) < a

    def check(data: bytes, rdata: bytes | None, n: int) -> bool:
        mv = memoryview(data)
        rmv = memoryview(rdata) if rdata is not None else None
        for lx in range(1, (n - 1) // a + 1):
            if not _suffix_repeats(data, n, lx, two_sided):
                return False
            pos = n - k2 * lx
            first = None
            ok = True
            for fwd in post:
                seg = mv[pos:pos + lx] if fwd else rmv[n - pos - lx:n - pos]
                if first is None:
                    first = seg
                elif first != seg:
                    ok = False
                    break
                pos += lx
            if not ok:
                continue
            x_fwd = bytes(first)
            x_rev = x_fwd[::-1]
            leading = b"".join(x_fwd if fwd else x_rev for fwd in pre)
            if data.find(leading, 0, n - k2 * lx - 1) != -1:
                return True
        return False

    return check


def _general_end_check(slots, a: int, b: int):
    # the suffix-repeat cutoff applies only when the final slot is an x slot
    # of a variable used at least twice
    last_is_x = slots[-1][0]
    x_flags = [fwd for is_x, fwd in slots if is_x]
    use_cutoff = last_is_x and a >= 2
    two_sided = 0 < sum(x_flags) < len(x_flags)

    def check(data: bytes, rdata: bytes | None, n: int) -> bool:
        mv = memoryview(data)
        rmv = memoryview(rdata) if rdata is not None else None
        for lx in range(1, (n - b) // a + 1):
            if use_cutoff and not _suffix_repeats(data, n, lx, two_sided):
                return False
            rest = n - a * lx
            for ly in range(1, rest // b + 1):
                pos = n - a * lx - b * ly
                vx = vy = None
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
                    return True
        return False

    return check


def _compile_end_checker(p: str):
    """Build the incremental does-an-instance-end-here predicate for p.

    Returns (per_node, check, needs_reversed).  A per-node predicate runs on
    a word and decides the fate of all its children at once (possible when
    the pattern ends with its single y slot: the gap absorbs any final
    letter); otherwise the predicate runs on each candidate child.
    """
    pat = p
    a, b = variable_counts(pat)
    if b > a:
        pat = iota(2, pat)
        a, b = b, a
    slots = _slots(pat)
    needs_reversed = any(sym in "XY" for sym in pat)

    if b == 0:
        return False, _pure_end_check(tuple(f for _, f in slots), a), needs_reversed
    if b == 1:
        y_at = next(i for i, (is_x, _) in enumerate(slots) if not is_x)
        pre = tuple(f for _, f in slots[:y_at])
        post = tuple(f for _, f in slots[y_at + 1:])
        if not post:
            # children die exactly when the x-block ends at the node's last letter
            return True, _pure_end_check(pre, a), needs_reversed
        if not pre:
            return False, _gap_then_block_check(post, a), needs_reversed
        return False, _block_gap_block_check(pre, post, a), needs_reversed
    return False, _general_end_check(slots, a, b), needs_reversed


def prove_k_unavoidable(p: str, k: int, depth_limit: int | None = None,
                        symmetry_reduction: bool = True,
                        letter_order: tuple[int, ...] | None = None) -> BacktrackReport:
    """Exhaust the tree of words over a k-letter alphabet avoiding p.

    Children are tried in letter order; the first letter is fixed to 0 unless
    ``symmetry_reduction`` is off (avoidance is invariant under alphabet
    permutations, so the verdict is the same either way).  ``letter_order``
    exists to validate that child ordering does not affect the verdict.
    """
    if not p:
        raise ValueError("the empty pattern has no instances; classify it directly")
    if not 1 <= k <= 4:
        raise ValueError(f"alphabet size must be between 1 and 4, got {k}")
    if depth_limit is None:
        depth_limit = _DEFAULT_DEPTH.get(k, 60)
    if depth_limit < 1:
        raise ValueError("depth limit must be at least 1")
    if letter_order is None:
        letter_order = tuple(range(k))
    elif sorted(letter_order) != list(range(k)):
        raise ValueError(f"letter order must be a permutation of 0..{k - 1}")

    per_node, check, needs_reversed = _compile_end_checker(p)
    digits = [ord(str(c)) for c in range(k)]

    word = bytearray()
    longest = ""
    nodes = 0
    stack = [0]
    blocked = [False]  # per-node verdict for per_node checkers

    while stack:
        idx = stack[-1]
        if blocked[-1]:
            width = 0
        else:
            width = 1 if (symmetry_reduction and len(stack) == 1) else k
        if idx >= width:
            stack.pop()
            blocked.pop()
            if word:
                word.pop()
            continue
        stack[-1] += 1
        c = letter_order[idx]
        nodes += 1
        word.append(digits[c])
        data = bytes(word)
        if per_node:
            hit = False  # fate was decided by the parent's blocked flag
        else:
            rdata = data[::-1] if needs_reversed else None
            hit = check(data, rdata, len(word))
        if hit:
            word.pop()
            continue
        n = len(word)
        if n > len(longest):
            longest = data.decode()
        if n >= depth_limit:
            return BacktrackReport(p, k, depth_limit, False, nodes, len(longest), longest)
        if per_node:
            rdata = data[::-1] if needs_reversed else None
            blocked.append(check(data, rdata, n))
        else:
            blocked.append(False)
        stack.append(0)

    return BacktrackReport(p, k, depth_limit, True, nodes, len(longest), longest)


# --- the pattern graph and the alternating-word criterion ------------------------

@dataclass(frozen=True)
class PatternGraph:
    """Multigraph on the four pattern symbols; loops allowed.

    One edge {reverse_mark(a), b} per length-2 factor ab of the source
    pattern, kept in factor order (so multiplicities are preserved).
    """

    edges: tuple[tuple[str, str], ...]
    vertices: tuple[str, ...] = ("x", "X", "y", "Y")


def pattern_graph(p: str) -> PatternGraph:
    edges = []
    for i in range(len(p) - 1):
        u, v = reverse_mark(p[i]), p[i + 1]
        edges.append(tuple(sorted((u, v), key=pattern_key)))
    return PatternGraph(edges=tuple(edges))


@dataclass(frozen=True)
class BipartiteResult:
    """Either a proper 2-coloring, or an odd closed walk witnessing that
    none exists (a loop shows up as the length-1 walk [v, v])."""

    coloring: dict[str, int] | None = None
    odd_cycle: list[str] | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.coloring is not None


def bipartite_check(g: PatternGraph) -> BipartiteResult:
    for u, v in g.edges:
        if u == v:
            return BipartiteResult(odd_cycle=[u, u])

    adjacency: dict[str, set[str]] = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in sorted(adjacency[u], key=pattern_key):
                if v not in color:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteResult(odd_cycle=_odd_walk(u, v, parent))
    return BipartiteResult(coloring=color)


def _odd_walk(u: str, v: str, parent: dict) -> list[str]:
    def path_to_root(w: str) -> list[str]:
        path = [w]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path[::-1]

    pu, pv = path_to_root(u), path_to_root(v)
    common = 0
    while common < min(len(pu), len(pv)) and pu[common] == pv[common]:
        common += 1
    # u ... lowest common ancestor ... v, then the conflicting edge back to u
    return pu[common - 1:][::-1] + pv[common:] + [u]


def instance_in_alternating(p: str) -> tuple[str | None, str | None] | None:
    """Variable assignment placing an instance of p inside 010101..., if any.

    When the pattern graph is 2-colorable the images are read off the
    coloring (each is the shortest word from the variable's color to its
    reversed slot's color, so one or two letters); otherwise returns None.
    """
    if not p:
        raise ValueError("the empty pattern has no instances; classify it directly")
    result = bipartite_check(pattern_graph(p))
    if result.coloring is None:
        return None
    c = result.coloring
    a, b = variable_counts(p)
    x = _colored_image(c["x"], c["X"]) if a else None
    y = _colored_image(c["y"], c["Y"]) if b else None
    image = apply_morphism(p, x, y)
    if image not in alternating_prefix(len(image) + 2):
        raise RuntimeError(f"coloring-derived image {image} missing from the alternating word")
    return x, y


def _colored_image(first: int, last: int) -> str:
    return str(first) if first == last else f"{first}{last}"
