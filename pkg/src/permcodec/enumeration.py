"""Exhaustive enumeration of avoiders, encoder verification, and class scans.

Enumeration is a prefix-extension DFS in lexicographic order: a prefix is
extended value by value and abandoned as soon as it contains the pattern, so
each extension only needs a check for occurrences ending at the new entry.
The DFS itself lives in the search kernels; this module adds budget guards,
sharding by first entry for parallel runs, the persistent count cache, and
the two sweep reports.

Every operation estimates its node count up front (the injective-prefix
bound sum_j n!/(n-j)!, which ignores pruning on purpose) and raises
ScaleRefused beyond the budget instead of hanging. Parallel runs shard by
first entry; shards are reduced in first-entry order, so results are
byte-identical to a single-threaded run.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterator, Mapping

from permcodec import kernels
from permcodec.cache import CacheStore
from permcodec.codec import decode_avoider, encode_avoider
from permcodec.errors import DomainError, NotInImage, ScaleRefused
from permcodec.perms import (
    Perm,
    format_permutation,
    is_layered,
    staircase_pattern,
    symmetry_class,
    symmetry_orbit,
)
from permcodec.words import WordFamily, validate_word

DEFAULT_NODE_BUDGET = 10**9

#: examples retained per failure category in a VerificationReport
EXAMPLE_CAP = 10


def dfs_node_estimate(n: int) -> int:
    """Upper bound on DFS nodes: the number of injective prefixes over 1..n."""
    total, term = 0, 1
    for j in range(n + 1):
        total += term
        term *= n - j
    return total


def _ensure_budget(estimate: int, budget: int, what: str) -> None:
    if estimate > budget:
        raise ScaleRefused(
            f"{what} needs an estimated {estimate} DFS nodes, over the budget {budget}"
        )


def enumerate_avoiders(
    q: Perm,
    n: int,
    *,
    first: int | None = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> Iterator[Perm]:
    """Yield every length-n avoider of q exactly once, in lexicographic order."""
    _ensure_budget(dfs_node_estimate(n), budget, f"enumerating avoiders at n={n}")
    return _avoider_stream(tuple(q), n, first)


def _avoider_stream(q: Perm, n: int, first: int | None) -> Iterator[Perm]:
    if len(q) == 0:
        return  # the empty pattern occurs in everything
    if n == 0:
        yield ()
        return
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend(depth: int) -> Iterator[Perm]:
        if depth == n:
            yield tuple(prefix)
            return
        values = (first,) if (depth == 0 and first is not None) else range(1, n + 1)
        for v in values:
            if used[v]:
                continue
            prefix.append(v)
            if not kernels.has_occurrence_ending_at_last(prefix, q):
                used[v] = True
                yield from extend(depth + 1)
                used[v] = False
            prefix.pop()

    yield from extend(0)


def _count_shard(args: tuple[Perm, int, int]) -> int:
    q, n, first = args
    return kernels.count_avoiders_dfs(q, n, first)


def _map_shards(worker, shard_args: list, jobs: int) -> list:
    """Run shard tasks, in order, sequentially or on a process pool."""
    if jobs <= 1 or len(shard_args) <= 1:
        return [worker(args) for args in shard_args]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, shard_args))


def count_avoiders(
    q: Perm,
    n: int,
    *,
    cache: CacheStore | None = None,
    jobs: int = 1,
    budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Number of length-n avoiders of q, consulting the cache when given."""
    q = tuple(q)
    key = format_permutation(symmetry_class(q)) if len(q) else ""
    if cache is not None:
        hit = cache.get(key, n)
        if hit is not None:
            return hit
    _ensure_budget(dfs_node_estimate(n), budget, f"counting avoiders at n={n}")
    if n == 0 or len(q) == 0:
        total = kernels.count_avoiders_dfs(q, n)
    else:
        shard_args = [(q, n, first) for first in range(1, n + 1)]
        total = sum(_map_shards(_count_shard, shard_args, jobs))
    if cache is not None:
        cache.put(key, n, total)
    return total


# ---------------------------------------------------------------------------
# encoder verification


@dataclass(frozen=True)
class VerificationReport:
    k: int
    n: int
    total: int
    round_trip_failures: int
    image_violations: int
    first_letter_violations: int
    duplicate_images: int
    examples: Mapping[str, tuple[str, ...]]

    @property
    def passed(self) -> bool:
        return (
            self.round_trip_failures == 0
            and self.image_violations == 0
            and self.first_letter_violations == 0
            and self.duplicate_images == 0
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "total": self.total,
            "round_trip_failures": self.round_trip_failures,
            "image_violations": self.image_violations,
            "first_letter_violations": self.first_letter_violations,
            "duplicate_images": self.duplicate_images,
            "passed": self.passed,
            "examples": {key: list(values) for key, values in self.examples.items()},
        }


def _verify_shard(args: tuple[int, int, int | None]) -> dict:
    k, n, first = args
    pattern = staircase_pattern(k)
    family = WordFamily.for_pattern_length(k)
    check_first = k % 2 == 0 and n >= 1
    images: list[tuple] = []
    bad_round: list[str] = []
    bad_image: list[str] = []
    bad_first: list[str] = []
    image_violations = 0
    first_letter_violations = 0
    total = 0
    for p in _avoider_stream(pattern, n, first):
        total += 1
        pair = encode_avoider(p, k)
        text = format_permutation(p)
        if not (validate_word(pair.w, family) and validate_word(pair.wp, family)):
            image_violations += 1
            if len(bad_image) < EXAMPLE_CAP:
                bad_image.append(text)
        if check_first and not (pair.w[0] == 1 and pair.wp[0] == 1):
            first_letter_violations += 1
            if len(bad_first) < EXAMPLE_CAP:
                bad_first.append(text)
        try:
            back = decode_avoider(pair, k)
        except NotInImage:
            back = None
        if back != p and len(bad_round) < EXAMPLE_CAP:
            bad_round.append(text)
        images.append((pair.w, pair.wp, text, back == p))
    return {
        "total": total,
        "round_trip": bad_round,
        "image": bad_image,
        "first_letter": bad_first,
        "image_violations": image_violations,
        "first_letter_violations": first_letter_violations,
        "images": images,
    }


def verify_injection(
    k: int,
    n: int,
    *,
    jobs: int = 1,
    budget: int = DEFAULT_NODE_BUDGET,
) -> VerificationReport:
    """Encode and decode every length-n avoider for k; report every defect found.

    Checks, per permutation: both words valid in the family for k, round trip
    back to the same permutation, no code collisions, and (even k) both words
    starting with letter 1.
    """
    if k < 3:
        raise DomainError(f"pattern length must be at least 3, got {k}")
    if k > 8:
        raise ScaleRefused(f"verification is limited to pattern lengths 3..8, got {k}")
    _ensure_budget(dfs_node_estimate(n), budget, f"verifying the encoder at n={n}")
    shard_args: list[tuple[int, int, int | None]]
    if n == 0:
        shard_args = [(k, n, None)]
    else:
        shard_args = [(k, n, first) for first in range(1, n + 1)]
    shards = _map_shards(_verify_shard, shard_args, jobs)

    total = 0
    round_trip_failures = 0
    examples: dict[str, list[str]] = {
        "round_trip": [],
        "image": [],
        "first_letter": [],
        "duplicate": [],
    }
    counts = {"image": 0, "first_letter": 0}
    seen: dict[tuple, str] = {}
    duplicates = 0
    for shard in shards:
        total += shard["total"]
        for key in ("round_trip", "image", "first_letter"):
            examples[key].extend(shard[key])
        for w, wp, text, ok_round in shard["images"]:
            if not ok_round:
                round_trip_failures += 1
            code = (w, wp)
            if code in seen:
                duplicates += 1
                if len(examples["duplicate"]) < EXAMPLE_CAP:
                    examples["duplicate"].append(f"{seen[code]}={text}")
            else:
                seen[code] = text
    for shard in shards:
        counts["image"] += shard["image_violations"]
        counts["first_letter"] += shard["first_letter_violations"]
    return VerificationReport(
        k=k,
        n=n,
        total=total,
        round_trip_failures=round_trip_failures,
        image_violations=counts["image"],
        first_letter_violations=counts["first_letter"],
        duplicate_images=duplicates,
        examples={key: tuple(vals[:EXAMPLE_CAP]) for key, vals in examples.items()},
    )


# ---------------------------------------------------------------------------
# pattern-class scans


@dataclass(frozen=True)
class ClassCount:
    representative: str
    count: int
    layered: bool
    growth_ratio: float | None  # observed count ratio against n-1

    def to_dict(self) -> dict:
        return {
            "representative": self.representative,
            "count": self.count,
            "layered": self.layered,
            "growth_ratio": self.growth_ratio,
        }


@dataclass(frozen=True)
class ConjectureReport:
    k: int
    n: int
    classes: tuple[ClassCount, ...]
    max_count: int
    max_classes: tuple[str, ...]
    layered_dominates: bool
    staircase_is_max: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "classes": [c.to_dict() for c in self.classes],
            "max_count": self.max_count,
            "max_classes": list(self.max_classes),
            "layered_dominates": self.layered_dominates,
            "staircase_is_max": self.staircase_is_max,
        }


def scan_classes(
    k: int,
    n: int,
    *,
    jobs: int = 1,
    budget: int = DEFAULT_NODE_BUDGET,
) -> ConjectureReport:
    """Count length-n avoiders for every symmetry class of length-k patterns.

    Flags whether every class without a layered member stays at or below every
    class with one, and whether the staircase pattern's class attains the
    maximum. Growth ratios against n-1 are reported, not asserted.
    """
    if k < 3:
        raise DomainError(f"pattern length must be at least 3, got {k}")
    if k > 5:
        raise ScaleRefused(f"class scans are limited to pattern lengths 3..5, got {k}")
    _ensure_budget(
        factorial(k) * dfs_node_estimate(n), budget, f"scanning {k}-classes at n={n}"
    )
    reps = sorted({symmetry_class(tuple(q)) for q in permutations(range(1, k + 1))})
    entries = []
    for rep in reps:
        count = count_avoiders(rep, n, jobs=jobs, budget=budget)
        ratio = None
        if n >= 1:
            previous = count_avoiders(rep, n - 1, jobs=jobs, budget=budget)
            ratio = count / previous if previous else None
        entries.append(
            ClassCount(
                representative=format_permutation(rep),
                count=count,
                layered=any(is_layered(s) for s in symmetry_orbit(rep)),
                growth_ratio=ratio,
            )
        )
    max_count = max(entry.count for entry in entries)
    plain_max = max((e.count for e in entries if not e.layered), default=None)
    layered_min = min((e.count for e in entries if e.layered), default=None)
    staircase_rep = format_permutation(symmetry_class(staircase_pattern(k)))
    staircase_count = next(e.count for e in entries if e.representative == staircase_rep)
    return ConjectureReport(
        k=k,
        n=n,
        classes=tuple(entries),
        max_count=max_count,
        max_classes=tuple(e.representative for e in entries if e.count == max_count),
        layered_dominates=(
            plain_max is None or layered_min is None or plain_max <= layered_min
        ),
        staircase_is_max=staircase_count == max_count,
    )
