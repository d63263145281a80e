"""Permutations, pattern containment, Mahonian statistics and the layered
matching classes.

Permutations of [n] = {1, ..., n} are plain tuples in one-line notation,
e.g. (6, 7, 5, 3, 4, 2, 1); the empty permutation is ().  Positions are
1-based throughout, matching the usual major-index convention.

The two structural classes:

* reverse layered matchings (= avoiders of 123, 132, 213): layers read
  left to right carry decreasing value ranges, each layer ascending
  within, all layers of size <= 2; e.g. 67|5|34|2|1.
* layered matchings (= avoiders of 231, 312, 321): the reversals of the
  above; layers carry increasing value ranges, descending within,
  e.g. 21|3|54|6|7.

A class member is determined by its block word over {S, D} (singleton or
doubleton layer, left to right); see the blockwords module.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Iterable, Sequence

Perm = tuple[int, ...]

#: Largest n accepted by the brute-force filter enumerations (n! scan).
FILTER_BOUND = 9

#: Largest size generated for the West classes (output-linear generation).
WEST_BOUND = 12

#: West's three doubly-restricted classes, counted by even-index Fibonacci.
WEST_PATTERNS: dict[str, tuple[Perm, ...]] = {
    "W1": ((1, 2, 3), (2, 1, 4, 3)),
    "W2": ((1, 3, 2), (3, 2, 4, 1)),
    "W3": ((1, 3, 2), (3, 4, 1, 2)),
}


class BoundExceeded(ValueError):
    """An enumeration was requested beyond its configured safety bound."""


def check_perm(seq: Iterable[int]) -> Perm:
    """Validate and return a permutation of 1..n as a tuple."""
    p = tuple(seq)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def perm_to_text(p: Sequence[int]) -> str:
    """Digit string for n <= 9, space-separated one-line notation above."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return " ".join(str(v) for v in p)


def perm_from_text(text: str) -> Perm:
    s = text.strip()
    if not s:
        return ()
    if " " in s or "," in s:
        return check_perm(int(t) for t in s.replace(",", " ").split())
    return check_perm(int(ch) for ch in s)


# -- statistics ---------------------------------------------------------


def inv(p: Sequence[int]) -> int:
    """Number of pairs i < j with p_i > p_j."""
    seen: list[int] = []
    total = 0
    for v in reversed(p):
        total += bisect_left(seen, v)
        insort(seen, v)
    return total


def descent_set(p: Sequence[int]) -> set[int]:
    """1-based positions i with p_i > p_{i+1}."""
    return {i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]}


def maj(p: Sequence[int]) -> int:
    """Sum of the descent positions."""
    return sum(descent_set(p))


def reversal(p: Sequence[int]) -> Perm:
    return tuple(reversed(p))


# -- pattern containment -------------------------------------------------


def contains_pattern(sigma: Sequence[int], pi: Sequence[int]) -> bool:
    """True iff some subsequence of sigma is order isomorphic to pi.

    >>> contains_pattern((5, 6, 4, 3, 1, 2), (3, 2, 1))
    True
    >>> contains_pattern((5, 6, 4, 3, 1, 2), (1, 2, 3))
    False
    """
    m, n = len(pi), len(sigma)
    if m == 0:
        return True
    if m > n:
        return False

    chosen: list[int] = []

    def extend(start: int) -> bool:
        k = len(chosen)
        if k == m:
            return True
        for j in range(start, n - (m - k) + 1):
            v = sigma[j]
            if all((pi[t] < pi[k]) == (chosen[t] < v) for t in range(k)):
                chosen.append(v)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids_all(sigma: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(sigma, pi) for pi in patterns)


def enumerate_avoiders(n: int, patterns: Iterable[Sequence[int]],
                       bound: int = FILTER_BOUND) -> list[Perm]:
    """All permutations of [n] avoiding every pattern, by filtered search.

    The search extends prefixes and prunes any prefix already containing
    a pattern (containment is monotone under appending), so it touches
    only pattern-free prefixes; the result is in lexicographic order.
    Sizes beyond the bound are refused: use the structural generators
    (perm_from_word / west_class) for the classes that have them.
    """
    if n > bound:
        raise BoundExceeded(
            f"filter enumeration bound is {bound}, got n = {n}; "
            "use a structural generator for large n")
    pats = [tuple(p) for p in patterns]
    out: list[Perm] = []
    prefix: list[int] = []
    free = list(range(1, n + 1))

    def walk() -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in list(free):
            prefix.append(v)
            free.remove(v)
            if avoids_all(prefix, pats):
                walk()
            free.insert(bisect_left(free, v), v)
            prefix.pop()

    walk()
    return out


def enumerate_avoiders_scan(n: int, patterns: Iterable[Sequence[int]],
                            bound: int = FILTER_BOUND) -> list[Perm]:
    """Plain n!-scan filter; slower cross-check for enumerate_avoiders."""
    if n > bound:
        raise BoundExceeded(f"filter enumeration bound is {bound}, got n = {n}")
    pats = [tuple(p) for p in patterns]
    return [p for p in itertools.permutations(range(1, n + 1))
            if avoids_all(p, pats)]


# -- cycle decomposition ---------------------------------------------------


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of the map i -> p_i, each starting at its smallest
    element, listed by increasing smallest element."""

    n: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def length_counts(self) -> dict[int, int]:
        """c_i: number of cycles of each length i."""
        counts: dict[int, int] = {}
        for c in self.cycles:
            counts[len(c)] = counts.get(len(c), 0) + 1
        return counts

    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles))

    def permutation(self) -> Perm:
        out = [0] * self.n
        for cyc in self.cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                out[a - 1] = b
        return tuple(out)


def cycle_decomposition(p: Sequence[int]) -> CycleDecomposition:
    """
    >>> cycle_decomposition((9, 7, 8, 6, 4, 5, 3, 1, 2)).cycles
    ((1, 9, 2, 7, 3, 8), (4, 6, 5))
    """
    n = len(p)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i - 1]
        cycles.append(tuple(cyc))
    return CycleDecomposition(n, tuple(cycles))


# -- layered structure ------------------------------------------------------


def _layered_sizes(p: Sequence[int]) -> tuple[int, ...] | None:
    """Layer sizes of a layered permutation (descending runs of consecutive
    values, increasing across layers), or None if p is not layered."""
    sizes = []
    i, low = 0, 1
    n = len(p)
    while i < n:
        j = i
        while j + 1 < n and p[j + 1] == p[j] - 1:
            j += 1
        if p[j] != low:
            return None
        sizes.append(j - i + 1)
        low = p[i] + 1
        i = j + 1
    return tuple(sizes)


def layered_classify(p: Sequence[int]) -> str:
    """One of 'layered-matching', 'reverse-layered-matching', 'both',
    'neither' per the size-<=-2 layer definitions."""
    lay = _layered_sizes(p)
    rev = _layered_sizes(reversal(p))
    is_lm = lay is not None and all(s <= 2 for s in lay)
    is_rlm = rev is not None and all(s <= 2 for s in rev)
    if is_lm and is_rlm:
        return "both"
    if is_lm:
        return "layered-matching"
    if is_rlm:
        return "reverse-layered-matching"
    return "neither"


def block_structure(p: Sequence[int], orientation: str | None = None) -> str:
    """Block word of a (reverse) layered matching: letter k is S iff layer
    k is a singleton, else D.

    orientation is 'reverse-layered', 'layered', or None to prefer the
    reverse-layered reading when both apply.
    """
    if orientation not in (None, "reverse-layered", "layered"):
        raise ValueError(f"unknown orientation {orientation!r}")
    if orientation in (None, "reverse-layered"):
        rev = _layered_sizes(reversal(p))
        if rev is not None and all(s <= 2 for s in rev):
            return "".join("S" if s == 1 else "D" for s in reversed(rev))
        if orientation == "reverse-layered":
            raise ValueError(f"{p} is not a reverse layered matching")
    lay = _layered_sizes(p)
    if lay is not None and all(s <= 2 for s in lay):
        return "".join("S" if s == 1 else "D" for s in lay)
    raise ValueError(f"{p} is not a (reverse) layered matching")


def perm_from_word(word: str, orientation: str) -> Perm:
    """The unique (reverse) layered matching with the given block word.

    >>> perm_from_word("DSDSS", "reverse-layered")
    (6, 7, 5, 3, 4, 2, 1)
    >>> perm_from_word("DSDSS", "layered")
    (2, 1, 3, 5, 4, 6, 7)
    """
    w = word.upper()
    if any(ch not in "SD" for ch in w):
        raise ValueError(f"block word must be over {{S, D}}, got {word!r}")
    n = sum(1 if ch == "S" else 2 for ch in w)
    out: list[int] = []
    if orientation == "reverse-layered":
        hi = n
        for ch in w:
            size = 1 if ch == "S" else 2
            out.extend(range(hi - size + 1, hi + 1))
            hi -= size
    elif orientation == "layered":
        lo = 1
        for ch in w:
            size = 1 if ch == "S" else 2
            out.extend(range(lo + size - 1, lo - 1, -1))
            lo += size
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return tuple(out)


# -- West's gap-insertion classes -------------------------------------------

_west_cache: dict[str, list[list[Perm]]] = {}


def west_children(sigma: Sequence[int], wclass: str) -> list[Perm]:
    """All class members obtained from sigma by inserting the new largest
    value into one of its gaps.

    Legality is decided by directly testing the candidate against the
    class patterns; the printed gap rules drop legal insertions (see the
    identity verifier), so the pattern test is the trusted arbiter.
    """
    pats = WEST_PATTERNS[wclass]
    sigma = tuple(sigma)
    n = len(sigma) + 1
    out = []
    for k in range(n):
        cand = sigma[:k] + (n,) + sigma[k:]
        if avoids_all(cand, pats):
            out.append(cand)
    return out


def west_class(n: int, wclass: str, bound: int = WEST_BOUND) -> list[Perm]:
    """Members of the West class at size n, grown by gap insertion from
    the size-1 permutation; size 0 is the empty permutation."""
    if wclass not in WEST_PATTERNS:
        raise ValueError(f"unknown West class {wclass!r}")
    if n > bound:
        raise BoundExceeded(f"West class bound is {bound}, got n = {n}")
    levels = _west_cache.setdefault(wclass, [[()], [(1,)]])
    while len(levels) <= n:
        nxt: list[Perm] = []
        for sigma in levels[-1]:
            nxt.extend(west_children(sigma, wclass))
        levels.append(sorted(set(nxt)))
    return levels[n]
