"""Multisets of h elements, h-fold sumsets and the representation function.

An h-tuple is identified with its equivalence class under permutation by
storing its entries in nondecreasing order; two tuples are equivalent exactly
when their canonical entry lists are equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .errors import ResourceLimitError, UsageError
from .group import INTEGERS, AmbientGroup, Element

DEFAULT_CAP = 5_000_000


@dataclass(frozen=True)
class GroundSet:
    group: AmbientGroup
    elements: Tuple[Element, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        for e in els:
            if not self.group.is_canonical(e):
                raise UsageError(f"{e} is not a canonical element of {self.group}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise UsageError(f"ground set elements must be strictly increasing, got {els}")
        object.__setattr__(self, "elements", els)

    @classmethod
    def of(cls, values: Iterable[int], group: AmbientGroup = INTEGERS) -> "GroundSet":
        """Canonicalize, dedupe-check and sort ``values``."""
        vals = [group.canonical(v) for v in values]
        if len(set(vals)) != len(vals):
            dup = sorted(v for v, c in Counter(vals).items() if c > 1)
            raise UsageError(f"duplicate elements after canonicalization: {dup}")
        return cls(group, tuple(sorted(vals)))

    def subset(self, values: Iterable[int]) -> "GroundSet":
        vals = set(values)
        missing = vals.difference(self.elements)
        if missing:
            raise UsageError(f"elements {sorted(missing)} are not in the ground set")
        return GroundSet(self.group, tuple(sorted(vals)))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __str__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"


@dataclass(frozen=True, order=True)
class HMultiset:
    """A canonical h-multiset: nondecreasing ``entries`` and their cached ``total``."""

    entries: Tuple[Element, ...]
    total: Element = field(compare=False)

    @classmethod
    def of(cls, group: AmbientGroup, entries: Iterable[Element]) -> "HMultiset":
        ents = tuple(sorted(entries))
        return cls(ents, group.sum(ents))

    def __len__(self):
        return len(self.entries)

    def counts(self) -> Counter:
        return Counter(self.entries)

    def __str__(self):
        return " + ".join(map(str, self.entries))


SumBuckets = Dict[Element, List[HMultiset]]


def count_h_multisets(n: int, h: int) -> int:
    if n == 0:
        return 0
    return comb(n + h - 1, h)


def enumerate_h_multisets(A: GroundSet, h: int) -> Iterator[HMultiset]:
    """All h-multisets of ``A`` in lexicographic order, each exactly once."""
    if h < 1:
        raise UsageError(f"h must be >= 1, got {h}")
    g = A.group
    for combo in combinations_with_replacement(A.elements, h):
        yield HMultiset(combo, g.sum(combo))


def h_fold_sumset(A: GroundSet, h: int) -> set:
    return {m.total for m in enumerate_h_multisets(A, h)}


def sum_buckets(A: GroundSet, h: int, cap: int = DEFAULT_CAP) -> SumBuckets:
    """Group every h-multiset of ``A`` by its sum.

    Raises ResourceLimitError up front if more than ``cap`` multisets would be
    materialized.
    """
    if h < 1:
        raise UsageError(f"h must be >= 1, got {h}")
    n_multisets = count_h_multisets(len(A), h)
    if n_multisets > cap:
        raise ResourceLimitError(
            f"{n_multisets} {h}-multisets of a {len(A)}-element set exceed the cap of {cap}"
        )
    buckets: SumBuckets = {}
    for m in enumerate_h_multisets(A, h):
        buckets.setdefault(m.total, []).append(m)
    return buckets


def representation_function(A: GroundSet, h: int, x: Element, cap: int = DEFAULT_CAP) -> int:
    """r_{A,h}(x): number of inequivalent ways to write x as a sum of h elements of A."""
    if not A.group.is_canonical(x):
        raise UsageError(f"{x} is not a canonical element of {A.group}")
    return len(sum_buckets(A, h, cap).get(x, ()))


def multiset_intersection_size(s: Sequence[Element] | HMultiset, t: Sequence[Element] | HMultiset) -> int:
    """Size of the multiset intersection; the largest overlap k two equal-length tuples admit."""
    s_entries = s.entries if isinstance(s, HMultiset) else tuple(s)
    t_entries = t.entries if isinstance(t, HMultiset) else tuple(t)
    if len(s_entries) != len(t_entries):
        raise UsageError(
            f"multisets must have the same length, got {len(s_entries)} and {len(t_entries)}"
        )
    return sum((Counter(s_entries) & Counter(t_entries)).values())
