"""Equipartition of the frequency axis into ranges of equal context mass.

A context is one text occurrence of a lexical item, so the context count
of an item set is simply the sum of the items' frequencies. Given two
seed ranges the remaining frequency axis is cut greedily: each new range
closes at the smallest upper bound whose accumulated context count
reaches the seeds' mean, and the final range absorbs the tail. The number
of ranges k times the averaged context count per range then reproduces
the total context mass exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .stats import FrequencyTable

__all__ = [
    "RangePartition",
    "context_count",
    "equipartition",
    "partition_invariant",
    "write_partition_tsv",
]


@dataclass
class RangePartition:
    ranges: list[tuple[int, int]]
    per_range_contexts: list[int]
    per_range_items: list[int]
    k: int
    n_c: float


def context_count(frequencies: Iterable[int]) -> int:
    """Total number of contexts generated by an item set."""
    return int(sum(frequencies))


def _mass_by_frequency(freqs: FrequencyTable, minimum: int = 2) -> tuple[Counter, Counter]:
    """Context mass (frequency * item count) and item count per frequency value."""
    mass: Counter = Counter()
    items: Counter = Counter()
    for f in freqs.values():
        if f >= minimum:
            mass[f] += f
            items[f] += 1
    return mass, items


def equipartition(freqs: FrequencyTable,
                  first: tuple[int, int],
                  second: tuple[int, int]) -> RangePartition:
    """Partition frequencies >= 2 into contiguous ranges of similar context mass.

    `first` must start at 2 and `second` must continue it immediately;
    the mean context mass of the two seed ranges is the closing target
    for every subsequent range.
    """
    if first[0] != 2:
        raise ValueError("first seed range must start at frequency 2")
    if second[0] != first[1] + 1:
        raise ValueError("second seed range must be contiguous with the first")
    if first[1] < first[0] or second[1] < second[0]:
        raise ValueError("seed ranges must be non-empty intervals")

    mass, items = _mass_by_frequency(freqs, minimum=2)
    if not mass:
        raise ValueError("no items with frequency >= 2")
    top = max(mass)

    def span_mass(lo, hi):
        return sum(mass[f] for f in range(lo, hi + 1))

    def span_items(lo, hi):
        return sum(items[f] for f in range(lo, hi + 1))

    c1 = span_mass(*first)
    c2 = span_mass(*second)
    if c1 == 0 or c2 == 0:
        raise ValueError("a seed range contains no items")
    target = (c1 + c2) / 2.0

    ranges = [tuple(first), tuple(second)]
    contexts = [c1, c2]
    lo = second[1] + 1
    while lo <= top:
        acc = 0
        hi = lo
        for f in range(lo, top + 1):
            acc += mass[f]
            hi = f
            if acc >= target:
                break
        # if the target was never reached, hi ran to `top` and the
        # remaining tail forms the (possibly undersized) final range
        ranges.append((lo, hi))
        contexts.append(span_mass(lo, hi))
        lo = hi + 1

    k = len(ranges)
    n_c = sum(contexts) / k
    return RangePartition(
        ranges=ranges,
        per_range_contexts=contexts,
        per_range_items=[span_items(lo, hi) for lo, hi in ranges],
        k=k,
        n_c=n_c,
    )


def partition_invariant(p: RangePartition) -> tuple[float, int, float]:
    """(k * n_c, total contexts, relative error between the two).

    Computed in exact rational arithmetic: with n_c defined as total / k
    the product k * n_c recovers the total exactly, so the relative error
    is identically zero for any well-formed partition.
    """
    total = int(sum(p.per_range_contexts))
    product = Fraction(p.k) * Fraction(total, p.k)
    rel_error = abs(product - total) / total if total else Fraction(0)
    return float(product), total, float(rel_error)


def write_partition_tsv(p: RangePartition, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    product, total, rel_error = partition_invariant(p)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("lo\thi\tn_items\tcontexts\n")
        for (lo, hi), n_items, ctx in zip(p.ranges, p.per_range_items,
                                          p.per_range_contexts):
            f.write(f"{lo}\t{hi}\t{n_items}\t{ctx}\n")
        f.write(f"# k={p.k}\tn_c={p.n_c:.6g}\trel_error={rel_error:.3g}\n")
    return path
