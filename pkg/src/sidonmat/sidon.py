"""B_h and B_{h,k} membership, double representations and their manipulation.

A set A is B_{h,k} when any two equal-sum h-multisets drawn from A share at
least k entries, counted with multiplicity; B_h is the case k = h.  All tests
reduce to comparing pairs inside one sum bucket.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .combinat import (
    DEFAULT_CAP,
    GroundSet,
    HMultiset,
    sum_buckets,
)
from .errors import UsageError
from .group import INTEGERS, AmbientGroup, Element


def _overlap(a: tuple, b: tuple) -> int:
    # both sorted; two-pointer multiset intersection
    i = j = n = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            n += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return n


@dataclass(frozen=True)
class DoubleRepresentation:
    """Two inequivalent equal-length multisets with the same sum.

    ``external_multiplicity`` is the number of copies of a tracked element x on
    the left side (0 when no element is tracked).
    """

    left: HMultiset
    right: HMultiset
    external_multiplicity: int = 0
    group: AmbientGroup = field(default=INTEGERS, compare=False, repr=False)

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise UsageError("both sides of a double representation need the same length")
        if len(self.left) == 0:
            raise UsageError("a double representation has length >= 1")
        if self.left.total != self.right.total:
            raise UsageError(f"unequal sums: {self.left} != {self.right}")
        if self.left.entries == self.right.entries:
            raise UsageError(f"the two sides {self.left} are equivalent")

    @classmethod
    def make(cls, group: AmbientGroup, left, right, x: Optional[Element] = None) -> "DoubleRepresentation":
        lm, rm = HMultiset.of(group, left), HMultiset.of(group, right)
        u = lm.entries.count(x) if x is not None else 0
        return cls(lm, rm, u, group)

    @property
    def length(self) -> int:
        return len(self.left)

    @property
    def overlap(self) -> int:
        return _overlap(self.left.entries, self.right.entries)

    @property
    def proper(self) -> bool:
        return self.overlap == 0

    def swapped(self) -> "DoubleRepresentation":
        return DoubleRepresentation(self.right, self.left, 0, self.group)

    def equation(self) -> str:
        return f"{self.left} = {self.right}"

    def to_dict(self) -> dict:
        return {"left": list(self.left.entries), "right": list(self.right.entries)}

    def __str__(self):
        return self.equation()


# A witness that A is not B_{h,k}: a length-h double representation with overlap < k.
BhkWitness = DoubleRepresentation


def _check_range(h: int, k: int):
    if h < 1:
        raise UsageError(f"h must be >= 1, got {h}")
    if not 1 <= k <= h:
        raise UsageError(f"need 1 <= k <= h, got h={h}, k={k}")


def _min_overlap_pair(A: GroundSet, h: int, cap: int):
    """(overlap, left, right) minimizing overlap then (left, right) lexicographically."""
    best = None
    for bucket in sum_buckets(A, h, cap).values():
        if len(bucket) < 2:
            continue
        for i, s in enumerate(bucket):
            for t in bucket[i + 1:]:
                key = (_overlap(s.entries, t.entries), s.entries, t.entries)
                if best is None or key < best[0]:
                    best = (key, s, t)
    if best is None:
        return None
    return best[0][0], best[1], best[2]


def bhk_witness(A: GroundSet, h: int, k: int, cap: int = DEFAULT_CAP) -> Optional[BhkWitness]:
    """None if A is B_{h,k}, else a minimal-overlap violating pair."""
    _check_range(h, k)
    found = _min_overlap_pair(A, h, cap)
    if found is None or found[0] >= k:
        return None
    return DoubleRepresentation(found[1], found[2], 0, A.group)


def bh_witness(A: GroundSet, h: int, cap: int = DEFAULT_CAP) -> Optional[BhkWitness]:
    return bhk_witness(A, h, h, cap)


def is_bh(A: GroundSet, h: int, cap: int = DEFAULT_CAP) -> bool:
    if h < 1:
        raise UsageError(f"h must be >= 1, got {h}")
    return all(len(b) == 1 for b in sum_buckets(A, h, cap).values())


def is_bhk(A: GroundSet, h: int, k: int, cap: int = DEFAULT_CAP) -> bool:
    _check_range(h, k)
    for bucket in sum_buckets(A, h, cap).values():
        for i, s in enumerate(bucket):
            for t in bucket[i + 1:]:
                if _overlap(s.entries, t.entries) < k:
                    return False
    return True


def classify_max_k(A: GroundSet, h: int, cap: int = DEFAULT_CAP) -> int:
    """Largest k with A in B_{h,k}; h for B_h sets, 0 if some equal-sum pair is disjoint."""
    if h < 1:
        raise UsageError(f"h must be >= 1, got {h}")
    found = _min_overlap_pair(A, h, cap)
    return h if found is None else found[0]


def reduce_to_proper(d: DoubleRepresentation) -> DoubleRepresentation:
    """Cancel the common part of both sides."""
    lc, rc = d.left.counts(), d.right.counts()
    common = lc & rc
    if not common:
        return d
    g = d.group
    left = HMultiset.of(g, (lc - common).elements())
    right = HMultiset.of(g, (rc - common).elements())
    return DoubleRepresentation(left, right, 0, g)


def find_proper_double_representations(
    A: GroundSet, max_len: int, cap: int = DEFAULT_CAP
) -> List[DoubleRepresentation]:
    """Every proper double representation over A of length <= max_len.

    Each unordered pair appears once, with the lexicographically smaller side
    on the left; results are ordered by length, then by sides.
    """
    if max_len < 1:
        raise UsageError(f"max_len must be >= 1, got {max_len}")
    out = []
    for ell in range(1, max_len + 1):
        found = []
        for bucket in sum_buckets(A, ell, cap).values():
            for i, s in enumerate(bucket):
                for t in bucket[i + 1:]:
                    if not set(s.entries).intersection(t.entries):
                        found.append(DoubleRepresentation(s, t, 0, A.group))
        found.sort(key=lambda d: (d.left.entries, d.right.entries))
        out.extend(found)
    return out


def subtraction_algorithm(
    d1: DoubleRepresentation, d2: DoubleRepresentation, x: Element
) -> DoubleRepresentation:
    """Combine ``u x + a = a'`` and ``w x + b = b'`` (u < w) into ``(w-u) x + c = c'``.

    Both inputs must be proper, carry x only on their left sides, and have
    u < w copies of it there.  The output is proper, oriented with x on the
    left, and its external multiplicity is w - u.
    """
    g = d1.group
    for name, d in (("d1", d1), ("d2", d2)):
        if not d.proper:
            raise UsageError(f"{name} is not proper: {d}")
        if x in d.right.entries:
            raise UsageError(f"{name} has {x} on its right side")
    u, w = d1.left.entries.count(x), d2.left.entries.count(x)
    if u < 1:
        raise UsageError(f"d1 does not contain {x} on its left side")
    if not u < w:
        raise UsageError(f"need u < w, got u={u}, w={w}")
    # u x + a + b' = w x + a' + b, then cancel everything shared
    lhs = d1.left.counts() + d2.right.counts()
    rhs = d2.left.counts() + d1.right.counts()
    common = lhs & rhs
    lhs, rhs = lhs - common, rhs - common
    x_side = HMultiset.of(g, rhs.elements())
    other = HMultiset.of(g, lhs.elements())
    out = DoubleRepresentation(x_side, other, x_side.entries.count(x), g)
    if out.external_multiplicity != w - u:
        raise AssertionError("multiplicity bookkeeping broke")  # pragma: no cover
    return out


def extend_bhk(A: GroundSet, h: int, k: int, b: Element, cap: int = DEFAULT_CAP) -> GroundSet:
    """Append b > h max(A) to a set in B_{h,k} \\ B_{h,k+1} of nonnegative integers.

    The result stays in B_{h,k} \\ B_{h,k+1}; callers are expected to verify
    that independently.
    """
    if not A.group.is_integers:
        raise UsageError("extend_bhk needs the integers: the argument uses their order")
    _check_range(h, k)
    if not 2 * k < h:
        raise UsageError(f"hypothesis k < h/2 fails (h={h}, k={k})")
    if len(A) == 0:
        raise UsageError("A must be nonempty")
    if A.elements[0] < 0:
        raise UsageError(f"A must consist of nonnegative integers, min(A) = {A.elements[0]}")
    if not is_bhk(A, h, k, cap):
        raise UsageError(f"hypothesis A in B_{{{h},{k}}} fails")
    if is_bhk(A, h, k + 1, cap):
        raise UsageError(f"hypothesis A not in B_{{{h},{k + 1}}} fails")
    bound = A.group.scale(h, A.elements[-1])
    if not b > bound:
        raise UsageError(f"hypothesis b > h*max(A) fails: {b} <= {bound}")
    return GroundSet.of(A.elements + (b,), A.group)
