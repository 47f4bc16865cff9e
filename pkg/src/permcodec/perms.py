"""Permutations in one-line notation and the structural operations on them.

A permutation of length n is a tuple containing each of 1..n exactly once.
The text form is compact digits for n <= 9 ("35412") and comma-separated
values otherwise ("10,1,2,3,4,5,6,7,8,9"); both forms are accepted on input.

Occurrences are witnessed by 1-based index tuples: q occurs in p at indices
i_1 < ... < i_k when (p[i_1], ..., p[i_k]) is order-isomorphic to q.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from permcodec import kernels
from permcodec.errors import DomainError, MalformedInput

Perm = tuple[int, ...]

#: sentinel kinds for extremal_mask
RL_MAX = "rl-max"
LR_MIN = "lr-min"


def validate_permutation(values: Iterable[int]) -> Perm:
    """Return ``values`` as a permutation tuple, or raise MalformedInput.

    >>> validate_permutation([3, 1, 2])
    (3, 1, 2)
    """
    p = tuple(values)
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise MalformedInput(f"not a permutation of 1..{n}: {p!r}")
    return p


def parse_permutation(text: str) -> Perm:
    """Parse the text form (compact digits or comma-separated).

    >>> parse_permutation("35412")
    (3, 5, 4, 1, 2)
    >>> parse_permutation("10,1,2,3,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if not text:
        return ()
    try:
        if "," in text:
            values = [int(tok) for tok in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError as exc:
        raise MalformedInput(f"unreadable permutation text: {text!r}") from exc
    return validate_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    """Inverse of parse_permutation: compact digits when n <= 9.

    >>> format_permutation((3, 5, 4, 1, 2))
    '35412'
    """
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def inverse(p: Perm) -> Perm:
    """The inverse permutation: position of each value.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def reverse(p: Perm) -> Perm:
    return p[::-1]


def complement(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def standardize(values: Sequence[int]) -> Perm:
    """The pattern of a sequence of distinct integers (ranks, 1-based).

    >>> standardize((8, 7, 9, 4, 3, 5))
    (5, 4, 6, 2, 1, 3)
    """
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(rank[v] for v in values)


def occurrences(p: Perm, q: Perm, limit: int | None = None) -> list[tuple[int, ...]]:
    """Witnesses of q in p as 1-based index tuples, lexicographic order.

    At most ``limit`` witnesses are returned when limit is given.

    >>> occurrences((2, 5, 3, 7, 1, 6, 4), (1, 3, 2), limit=1)
    [(1, 2, 3)]
    """
    out = []
    for witness in _iter_occurrences(p, q):
        out.append(tuple(i + 1 for i in witness))
        if limit is not None and len(out) >= limit:
            break
    return out


def _iter_occurrences(p: Perm, q: Perm) -> Iterator[tuple[int, ...]]:
    # Same value-window pruning as the kernels, but yielding every witness.
    n, k = len(p), len(q)
    if k == 0:
        yield ()
        return
    if k > n:
        return
    from permcodec._pure import _bounds

    lo, hi = _bounds(q, range(k))
    chosen = [0] * k
    pos = [0] * k

    def extend(a: int, start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, n - (k - 1 - a)):
            v = p[i]
            if lo[a] >= 0 and chosen[lo[a]] >= v:
                continue
            if hi[a] >= 0 and chosen[hi[a]] <= v:
                continue
            chosen[a] = v
            pos[a] = i
            if a == k - 1:
                yield tuple(pos)
            else:
                yield from extend(a + 1, i + 1)

    yield from extend(0, 0)


def first_occurrence(p: Perm, q: Perm) -> tuple[int, ...] | None:
    """First witness of q in p (1-based), or None when p avoids q."""
    hit = kernels.first_occurrence(p, q)
    if hit is None:
        return None
    return tuple(i + 1 for i in hit)


def avoids(p: Perm, q: Perm) -> bool:
    """True iff q does not occur in p.

    >>> avoids((3, 5, 4, 1, 2), (2, 1, 3))
    True
    >>> avoids((3, 6, 1, 2, 7, 4, 5), (1, 3, 2, 4))
    True
    """
    return kernels.first_occurrence(p, q) is None


def contains(p: Perm, q: Perm) -> bool:
    return not avoids(p, q)


def direct_sum(q: Perm, t: Perm) -> Perm:
    """q followed by t shifted above it.

    >>> format_permutation(direct_sum((3, 1, 4, 2), (1, 3, 2)))
    '3142576'
    """
    shift = len(q)
    return q + tuple(v + shift for v in t)


def skew_sum(q: Perm, t: Perm) -> Perm:
    """q shifted above t, followed by t.

    >>> format_permutation(skew_sum((3, 1, 4, 2), (1, 3, 2)))
    '6475132'
    """
    shift = len(t)
    return tuple(v + shift for v in q) + t


def staircase_pattern(k: int) -> Perm:
    """The length-k pattern 1 32 54 ... (even) / 21 43 ... (odd) used by the codec.

    Layer structure: singleton, then descending pairs, capped by the maximum
    (odd lengths drop the leading singleton).

    >>> [format_permutation(staircase_pattern(k)) for k in (3, 4, 5, 6)]
    ['213', '1324', '21435', '132546']
    """
    if k < 3:
        raise DomainError(f"staircase patterns start at length 3, got {k}")
    m = (k + 1) // 2  # number of entries before the final maximum, paired up
    even = [1]
    for j in range(1, m):
        even.extend((2 * j + 1, 2 * j))
    even.append(2 * m)
    if k % 2 == 0:
        return tuple(even)
    return standardize(even[1:])


def extremal_mask(p: Perm, kind: str) -> tuple[bool, ...]:
    """Mark right-to-left maxima or left-to-right minima.

    >>> extremal_mask((3, 5, 4, 1, 2), RL_MAX)
    (False, True, True, False, True)
    """
    n = len(p)
    mask = [False] * n
    best = None  # works for any distinct integers, not just 1..n
    if kind == RL_MAX:
        for i in range(n - 1, -1, -1):
            if best is None or p[i] > best:
                best = p[i]
                mask[i] = True
    elif kind == LR_MIN:
        for i in range(n):
            if best is None or p[i] < best:
                best = p[i]
                mask[i] = True
    else:
        raise DomainError(f"unknown extremal kind: {kind!r}")
    return tuple(mask)


def split_by_mask(p: Sequence[int], mask: Sequence[bool]) -> tuple[Perm, Perm]:
    """Subsequences of marked and unmarked entries, in position order."""
    marked = tuple(v for v, m in zip(p, mask) if m)
    unmarked = tuple(v for v, m in zip(p, mask) if not m)
    return marked, unmarked


def is_layered(q: Perm) -> bool:
    """True iff q is a sequence of descending runs with ascending values.

    Equivalently, q avoids both 231 and 312.

    >>> is_layered((3, 2, 1, 5, 4, 7, 6))
    True
    >>> is_layered((2, 3, 1))
    False
    """
    return avoids(q, (2, 3, 1)) and avoids(q, (3, 1, 2))


def symmetry_orbit(q: Perm) -> frozenset[Perm]:
    """Closure of q under reverse, complement and inverse (at most 8 patterns)."""
    orbit = {q}
    frontier = [q]
    while frontier:
        s = frontier.pop()
        for image in (reverse(s), complement(s), inverse(s)):
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return frozenset(orbit)


def symmetry_class(q: Perm) -> Perm:
    """Lexicographically least member of q's symmetry orbit.

    >>> format_permutation(symmetry_class((2, 1, 3)))
    '132'
    >>> format_permutation(symmetry_class((1, 3, 2, 4)))
    '1324'
    """
    return min(symmetry_orbit(q))
