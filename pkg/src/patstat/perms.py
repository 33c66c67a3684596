"""Permutations in one-line notation: statistics, patterns, symmetries, inflation.

A permutation of length n is a plain tuple of the integers 1..n (the empty
tuple is the empty permutation).  Everything here is a pure function on
immutable values, so the module is safe to use from any number of threads.

Text form: a comma-free digit string for n <= 9 ("41523"), comma-separated
otherwise ("10,1,2,...").  The empty permutation prints as "ε".
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

EMPTY: Perm = ()

#: The eight rigid motions of the square diagram: rotations are
#: counterclockwise, reflections are keyed by the slope of their axis
#: ("rinf" = vertical axis = reversal, "r0" = horizontal axis = complement).
SYMMETRIES: tuple[str, ...] = ("R0", "R90", "R180", "R270", "r-1", "r0", "r1", "rinf")

#: Symmetries that fix the inversion number; the remaining four send
#: inv to C(n,2) - inv.
INV_PRESERVING: tuple[str, ...] = ("R0", "R180", "r-1", "r1")
INV_REVERSING: tuple[str, ...] = ("R90", "R270", "r0", "rinf")

_TAG_ALIASES = {"r∞": "rinf", "rINF": "rinf"}

#: Point maps (x, y, m) -> (x', y') on the diagram {(i, a_i)}, with m = n + 1.
_POINT_MAPS = {
    "R0": lambda x, y, m: (x, y),
    "R90": lambda x, y, m: (m - y, x),
    "R180": lambda x, y, m: (m - x, m - y),
    "R270": lambda x, y, m: (y, m - x),
    "r-1": lambda x, y, m: (m - y, m - x),
    "r0": lambda x, y, m: (x, m - y),
    "r1": lambda x, y, m: (y, x),
    "rinf": lambda x, y, m: (m - x, y),
}


def is_perm(values: Sequence[int]) -> bool:
    """Check that values is a bijection on {1, ..., n}.

    >>> is_perm((4, 1, 5, 2, 3)), is_perm((1, 1)), is_perm(())
    (True, False, True)
    """
    n = len(values)
    seen = 0
    for v in values:
        if not 1 <= v <= n:
            return False
        bit = 1 << (v - 1)
        if seen & bit:
            return False
        seen |= bit
    return True


def perm(values: Iterable[int]) -> Perm:
    """Build a permutation tuple, validating the one-line notation."""
    p = tuple(values)
    if not is_perm(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse "41523", "10,1,2,...", "ε" or "" into a permutation tuple."""
    text = text.strip()
    if text in ("", "ε", "eps", "()"):
        return EMPTY
    if "," in text:
        return perm(int(part) for part in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse permutation {text!r}")
    return perm(int(ch) for ch in text)


def format_perm(p: Perm) -> str:
    """One-line text form: digits for n <= 9, comma-separated otherwise."""
    if not p:
        return "ε"
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def parse_pattern_set(text: str) -> tuple[Perm, ...]:
    """Parse a comma-separated pattern list such as "132,213"."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_perm(part) for part in text.split(","))


def format_pattern_set(patterns: Iterable[Perm]) -> str:
    return ",".join(format_perm(p) for p in sorted(patterns))


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# statistics


def inversion_set(p: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Index pairs (i, j), 1-based, with i < j and p(i) > p(j).

    >>> sorted(inversion_set((4, 1, 5, 2, 3)))
    [(1, 2), (1, 4), (1, 5), (3, 4), (3, 5)]
    """
    n = len(p)
    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if p[i - 1] > p[j - 1]
    )


def inv(p: Sequence[int]) -> int:
    """Inversion number: the number of out-of-order pairs."""
    n = len(p)
    return sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))


def descent_set(p: Sequence[int]) -> frozenset[int]:
    """Positions i (1-based) with p(i) > p(i+1).

    >>> sorted(descent_set((4, 1, 5, 2, 3)))
    [1, 3]
    """
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def des(p: Sequence[int]) -> int:
    """Descent number."""
    return sum(p[i - 1] > p[i] for i in range(1, len(p)))


def maj(p: Sequence[int]) -> int:
    """Major index: the sum of the descent positions."""
    return sum(i for i in range(1, len(p)) if p[i - 1] > p[i])


# ---------------------------------------------------------------------------
# pattern containment


def contains(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of p is order isomorphic to pattern.

    Depth-first subsequence matching; a partial match is abandoned as soon
    as the new entry breaks order isomorphism with the chosen prefix.
    Every permutation contains the empty pattern.

    >>> contains((4, 3, 6, 1, 5, 2), (1, 3, 2))
    True
    >>> contains((1, 2, 3, 4, 5), (3, 2, 1))
    False
    """
    k = len(pattern)
    if k == 0:
        return True
    n = len(p)
    if k > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        for i in range(start, n - (k - j) + 1):
            x = p[i]
            ok = True
            for t in range(j):
                if (chosen[t] < x) != (pattern[t] < pattern[j]):
                    ok = False
                    break
            if ok:
                chosen.append(x)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids_all(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff p contains none of the given patterns."""
    return not any(contains(p, pat) for pat in patterns)


# ---------------------------------------------------------------------------
# diagram symmetries


def reverse(p: Perm) -> Perm:
    """Reversal of the one-line notation (reflection in the vertical axis)."""
    return p[::-1]


def complement(p: Perm) -> Perm:
    """Complement a_i -> n + 1 - a_i (reflection in the horizontal axis)."""
    n = len(p)
    return tuple(n + 1 - v for v in p)


def inverse(p: Perm) -> Perm:
    """Group-theoretic inverse (reflection in the main diagonal)."""
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def normalize_symmetry(tag: str) -> str:
    tag = _TAG_ALIASES.get(tag, tag)
    if tag not in _POINT_MAPS:
        raise ValueError(f"unknown symmetry {tag!r}; expected one of {SYMMETRIES}")
    return tag


def apply_symmetry(tag: str, p: Perm) -> Perm:
    """Apply one of the eight diagram symmetries to a permutation.

    >>> apply_symmetry("rinf", (4, 1, 5, 2, 3))
    (3, 2, 5, 1, 4)
    >>> apply_symmetry("R90", (1, 3, 2))
    (2, 3, 1)
    """
    f = _POINT_MAPS[normalize_symmetry(tag)]
    n = len(p)
    m = n + 1
    out = [0] * n
    for i, v in enumerate(p, 1):
        x, y = f(i, v, m)
        out[x - 1] = y
    return tuple(out)


@lru_cache(maxsize=None)
def compose_symmetries(outer: str, inner: str) -> str:
    """The tag h with apply(h, p) == apply(outer, apply(inner, p)) for all p."""
    fo = _POINT_MAPS[normalize_symmetry(outer)]
    fi = _POINT_MAPS[normalize_symmetry(inner)]
    samples = [(1, 2), (2, 5), (3, 1)]
    m = 7
    want = [fo(*fi(x, y, m), m) for x, y in samples]
    for tag, fh in _POINT_MAPS.items():
        if [fh(x, y, m) for x, y in samples] == want:
            return tag
    raise AssertionError("symmetry composition escaped the dihedral group")


# ---------------------------------------------------------------------------
# inflation and named families


def inflate(base: Perm, components: Sequence[Perm]) -> Perm:
    """Inflate each point of base's diagram into a block.

    The point (i, b_i) is replaced by a block order isomorphic to
    components[i-1]; empty components delete their point.

    >>> inflate((1, 3, 2), ((2, 1), (1,), (2, 1, 3)))
    (2, 1, 6, 4, 3, 5)
    >>> inflate((1, 3, 2), ((), (1,), (2, 1, 3)))
    (4, 2, 1, 3)
    """
    if len(components) != len(base):
        raise ValueError(
            f"inflation needs {len(base)} components, got {len(components)}"
        )
    sizes = [len(c) for c in components]
    value_offset = [
        sum(sizes[j] for j in range(len(base)) if base[j] < base[i])
        for i in range(len(base))
    ]
    out: list[int] = []
    for comp, off in zip(components, value_offset):
        out.extend(off + v for v in comp)
    return tuple(out)


def increasing(n: int) -> Perm:
    """1 2 ... n."""
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    """n ... 2 1."""
    return tuple(range(n, 0, -1))


def max_first(n: int) -> Perm:
    """n 1 2 ... (n-1): the maximum prepended to an increasing run."""
    if n < 1:
        raise ValueError("max-first needs n >= 1")
    return (n,) + tuple(range(1, n))


def min_last(n: int) -> Perm:
    """2 3 ... n 1: an increasing run followed by the minimum."""
    if n < 1:
        raise ValueError("min-last needs n >= 1")
    return tuple(range(2, n + 1)) + (1,)


def swap_last_two(n: int) -> Perm:
    """1 2 ... (n-2) n (n-1): increasing with the final pair exchanged."""
    if n < 2:
        raise ValueError("swap-last-two needs n >= 2")
    return tuple(range(1, n - 1)) + (n, n - 1)


_FAMILIES = {
    "increasing": increasing,
    "decreasing": decreasing,
    "max-first": max_first,
    "min-last": min_last,
    "swap-last-two": swap_last_two,
}


def named_family(name: str, n: int) -> Perm:
    """Construct a member of one of the named monotone-block families."""
    try:
        builder = _FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(_FAMILIES)}")
    if n < 0:
        raise ValueError("length must be nonnegative")
    return builder(n)


def left_right_maxima(p: Perm) -> tuple[int, ...]:
    """1-based positions whose entry exceeds everything before it."""
    out = []
    best = 0
    for i, v in enumerate(p, 1):
        if v > best:
            out.append(i)
            best = v
    return tuple(out)


def right_left_minima(p: Perm) -> tuple[int, ...]:
    """1-based positions whose entry is below everything after it."""
    out = []
    best = len(p) + 1
    for i in range(len(p), 0, -1):
        if p[i - 1] < best:
            out.append(i)
            best = p[i - 1]
    return tuple(reversed(out))
