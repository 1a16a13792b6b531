"""The matroid of B_h subsets inside a B_{2h-1,h-1} ground set.

Independent sets are the B_h subsets of the ground set.  Greedy bases, ranks,
matroid-union ranks and partitions into independent sets of prescribed sizes
are all computed from the independence oracle alone; the unions use Edmonds'
matroid partition algorithm (shortest augmenting paths in the exchange graph).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .combinat import DEFAULT_CAP, GroundSet
from .errors import IntegrityError, NotGeneralizedSidonError, UsageError
from .group import Element
from .sidon import DoubleRepresentation, bhk_witness, find_proper_double_representations, is_bh

Oracle = Callable[[FrozenSet[Element]], bool]


@dataclass(frozen=True)
class RankProfile:
    """rho_1 < rho_2 < ... < rho_c = |X| where c is the covering number."""

    rho: Tuple[int, ...]

    @property
    def covering_number(self) -> int:
        return len(self.rho)

    def __getitem__(self, j: int) -> int:
        # 1-based like the ranks themselves; constant |X| past the covering number
        if j < 1:
            raise IndexError(j)
        if not self.rho:
            return 0
        return self.rho[min(j, len(self.rho)) - 1]


@dataclass(frozen=True)
class PartitionMu:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any((not isinstance(p, int)) or p < 1 for p in parts):
            raise UsageError(f"partition parts must be positive integers, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"partition parts must be nonincreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def prefix_sums(self) -> List[int]:
        out, acc = [], 0
        for p in self.parts:
            acc += p
            out.append(acc)
        return out


@dataclass(frozen=True)
class MuCovering:
    """Result of a mu-covering request: the parts, or the inequality that failed."""

    exists: bool
    parts: Tuple[FrozenSet[Element], ...] = ()
    reason: str = ""


def matroid_partition(
    elements: Sequence[Element], oracles: Sequence[Oracle]
) -> List[set]:
    """Pack as many ``elements`` as possible into disjoint sets, set i independent under ``oracles[i]``.

    Elements are offered in the given order; each one is placed along a
    shortest augmenting path of the exchange graph, or left out when no path
    exists.  With a single matroid repeated k times the number of packed
    elements is the rank of the k-fold matroid union.
    """
    parts: List[set] = [set() for _ in oracles]

    def indep(i, s):
        return oracles[i](frozenset(s))

    for s in elements:
        # BFS over elements; prev[z] = (y, i) means z leaves part i and y takes its place
        prev: Dict[Element, Optional[Tuple[Element, int]]] = {s: None}
        queue = deque([s])
        sink = None
        while queue and sink is None:
            y = queue.popleft()
            for i, part in enumerate(parts):
                if y in part:
                    continue
                if indep(i, part | {y}):
                    sink = (y, i)
                    break
                for z in sorted(part):
                    if z not in prev and indep(i, (part - {z}) | {y}):
                        prev[z] = (y, i)
                        queue.append(z)
        if sink is None:
            continue
        y, j = sink
        moves = [(None, y, j)]
        z = y
        while prev[z] is not None:
            y_prev, i = prev[z]
            moves.append((z, y_prev, i))
            z = y_prev
        for out, into, i in moves:
            if out is not None:
                parts[i].discard(out)
            parts[i].add(into)
        for i, part in enumerate(parts):
            if not indep(i, part):
                raise IntegrityError(f"augmentation left part {i} dependent: {sorted(part)}")
    return parts


def disjointify(parts: Iterable[Iterable[Element]]) -> List[FrozenSet[Element]]:
    """I'_1 = I_1, I'_j = I_j minus everything earlier."""
    seen: set = set()
    out = []
    for p in parts:
        p = frozenset(p)
        out.append(p - seen)
        seen |= p
    return out


class SidonMatroid:
    """Independence oracle for the B_h subsets of ``ground``.

    Greedy and union queries are only answered when ``validated`` is true,
    i.e. the ground set was checked to be B_{2h-1,h-1}; outside that class the
    family of B_h subsets need not be a matroid and greedy answers could be
    silently wrong.
    """

    def __init__(self, ground: GroundSet, order: int, validated: bool, cap: int = DEFAULT_CAP):
        if order < 2:
            raise UsageError(f"matroid order h must be >= 2, got {order}")
        self.ground = ground
        self.order = order
        self.validated = validated
        self.cap = cap
        self._cache: Dict[FrozenSet[Element], bool] = {}

    def __repr__(self):
        return f"SidonMatroid({self.ground}, h={self.order}, validated={self.validated})"

    # -- independence -------------------------------------------------------

    def _indep(self, s: FrozenSet[Element]) -> bool:
        hit = self._cache.get(s)
        if hit is None:
            hit = len(s) <= 1 or is_bh(GroundSet(self.ground.group, tuple(sorted(s))), self.order, self.cap)
            self._cache[s] = hit
        return hit

    def _subset(self, S: Optional[Iterable[Element]]) -> FrozenSet[Element]:
        if S is None:
            return frozenset(self.ground.elements)
        S = frozenset(S)
        extra = S.difference(self.ground.elements)
        if extra:
            raise UsageError(f"elements {sorted(extra)} are not in the ground set")
        return S

    def is_independent(self, S: Iterable[Element]) -> bool:
        return self._indep(self._subset(S))

    def _require_validated(self):
        if not self.validated:
            raise UsageError("operation needs a validated B_{2h-1,h-1} ground set")

    # -- bases and rank -----------------------------------------------------

    def find_basis(self, within: Optional[Iterable[Element]] = None) -> FrozenSet[Element]:
        self._require_validated()
        basis: FrozenSet[Element] = frozenset()
        for e in sorted(self._subset(within)):
            if self._indep(basis | {e}):
                basis = basis | {e}
        return basis

    def rank(self, S: Optional[Iterable[Element]] = None) -> int:
        return len(self.find_basis(S))

    def is_maximal_independent(self, A: Iterable[Element]) -> bool:
        A = self._subset(A)
        return self._indep(A) and not any(
            self._indep(A | {y}) for y in self.ground.elements if y not in A
        )

    # -- exchange structure -------------------------------------------------

    def unique_proper_representation(self, A: Iterable[Element], x: Element) -> DoubleRepresentation:
        """The single proper double representation of length <= 2h-1 inside A + x.

        It has the shape ``u x + a_1 + ... + a_{h-u} = a'_1 + ... + a'_h`` with
        u >= 1; finding zero or several is reported as an IntegrityError.
        """
        self._require_validated()
        A = self._subset(A)
        if x not in self.ground:
            raise UsageError(f"{x} is not in the ground set")
        if x in A:
            raise UsageError(f"{x} already belongs to A")
        if not self.is_maximal_independent(A):
            raise UsageError(f"{sorted(A)} is not a maximal independent set")
        h = self.order
        found = find_proper_double_representations(
            GroundSet(self.ground.group, tuple(sorted(A | {x}))), 2 * h - 1, self.cap
        )
        if len(found) != 1:
            raise IntegrityError(
                f"expected exactly one proper double representation in {sorted(A | {x})}, "
                f"found {len(found)}: {[str(d) for d in found]}"
            )
        d = found[0]
        if x in d.right.entries:
            d = d.swapped()
        d = DoubleRepresentation(d.left, d.right, d.left.entries.count(x), d.group)
        if d.length != h or d.external_multiplicity < 1:
            raise IntegrityError(f"unexpected shape for the unique representation: {d}")
        return d

    def exchange_set(self, A: Iterable[Element], x: Element) -> FrozenSet[Element]:
        """Elements a* of A whose swap for x keeps (A + x) - a* independent."""
        A = self._subset(A)
        d = self.unique_proper_representation(A, x)
        candidates = frozenset(d.left.entries + d.right.entries) - {x}
        for a in candidates:
            if not self._indep((A | {x}) - {a}):
                raise IntegrityError(f"swapping {a} for {x} in {sorted(A)} is not independent")
        return candidates

    # -- unions and coverings -----------------------------------------------

    def union_partition(self, k: int, within: Optional[Iterable[Element]] = None) -> List[FrozenSet[Element]]:
        """k disjoint independent sets whose union has maximum size."""
        self._require_validated()
        if k < 1:
            raise UsageError(f"k must be >= 1, got {k}")
        elements = sorted(self._subset(within))
        parts = matroid_partition(elements, [self._indep] * k)
        return [frozenset(p) for p in parts]

    def union_rank(self, k: int, within: Optional[Iterable[Element]] = None) -> int:
        return sum(len(p) for p in self.union_partition(k, within))

    def covering_number(self, S: Optional[Iterable[Element]] = None) -> int:
        """Fewest independent sets covering S; 0 for the empty set."""
        self._require_validated()
        S = self._subset(S)
        for k in range(1, len(S) + 1):
            if self.union_rank(k, S) == len(S):
                return k
        if S:
            raise IntegrityError("singletons are independent, so |S| parts always suffice")
        return 0

    def rank_profile(self) -> RankProfile:
        self._require_validated()
        n = len(self.ground)
        rho: List[int] = []
        while n and (not rho or rho[-1] < n):
            rho.append(self.union_rank(len(rho) + 1))
            if len(rho) > 1 and rho[-1] <= rho[-2]:
                raise IntegrityError(f"rank profile stalled below |X|: {rho}")
        return RankProfile(tuple(rho))

    def max_set_with_covering_number(self, k: int) -> int:
        """n_X(k): size of every maximal subset with covering number k, i.e. rho_k."""
        c = self.covering_number()
        if not 1 <= k <= c:
            raise UsageError(f"k must lie in 1..{c}, got {k}")
        return self.union_rank(k)

    def _mu(self, mu) -> PartitionMu:
        if not isinstance(mu, PartitionMu):
            mu = PartitionMu(tuple(mu))
        if mu.total != len(self.ground):
            raise UsageError(f"{mu.parts} is not a partition of |X| = {len(self.ground)}")
        return mu

    def mu_criterion(self, mu) -> Tuple[bool, str]:
        """Evaluate r >= k and rho_j >= mu_1 + ... + mu_j for j <= k (k the covering number)."""
        self._require_validated()
        mu = self._mu(mu)
        profile = self.rank_profile()
        k, r = profile.covering_number, len(mu)
        if r < k:
            return False, f"r = {r} < k = {k} (covering number)"
        prefix = mu.prefix_sums()
        for j in range(1, k + 1):
            if profile[j] < prefix[j - 1]:
                return False, f"rho_{j} = {profile[j]} < mu_1 + ... + mu_{j} = {prefix[j - 1]}"
        return True, ""

    def mu_covering_exists(self, mu) -> bool:
        return self.mu_criterion(mu)[0]

    def construct_mu_covering(self, mu) -> MuCovering:
        """Disjoint independent sets of sizes mu_1, ..., mu_r covering the ground set.

        Runs the partition algorithm with part j restricted to independent sets
        of size at most mu_j (a truncation of the matroid); since the sizes add
        up to |X|, covering X forces every part to its exact size.
        """
        mu = self._mu(mu)
        ok, reason = self.mu_criterion(mu)
        if not ok:
            return MuCovering(False, (), reason)
        oracles = [
            (lambda s, c=c: len(s) <= c and self._indep(s)) for c in mu.parts
        ]
        parts = [frozenset(p) for p in matroid_partition(list(self.ground.elements), oracles)]
        covered = frozenset().union(*parts)
        if covered != frozenset(self.ground.elements):
            raise IntegrityError(
                f"criterion holds for {mu.parts} but only {len(covered)} of {len(self.ground)} elements were covered"
            )
        for p, c in zip(parts, mu.parts):
            if len(p) != c or not self._indep(p):
                raise IntegrityError(f"part {sorted(p)} does not realize size {c}")
        return MuCovering(True, tuple(parts), "")


def new_matroid(X: GroundSet, h: int, validate: bool = True, cap: int = DEFAULT_CAP) -> SidonMatroid:
    """Build the matroid, checking X is B_{2h-1,h-1} when ``validate`` is set."""
    if h < 2:
        raise UsageError(f"matroid order h must be >= 2, got {h}")
    if validate:
        w = bhk_witness(X, 2 * h - 1, h - 1, cap)
        if w is not None:
            raise NotGeneralizedSidonError(
                f"{X} is not a B_{{{2 * h - 1},{h - 1}}} set: {w.equation()}", w
            )
    return SidonMatroid(X, h, validate, cap)
