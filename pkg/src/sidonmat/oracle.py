"""Naive reference implementations, written from the definitions only.

Nothing here reuses the multiset or matroid code paths; only the group
arithmetic is shared.  Everything is exponential and meant for sets of a
dozen elements or so.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ResourceLimitError
from .group import AmbientGroup, Element

DEFAULT_SUBSET_CAP = 16


def _check_cap(n: int, cap: int):
    if n > cap:
        raise ResourceLimitError(f"exhaustive scan over {n} elements exceeds the cap of {cap}")


def _classes_by_sum(values: Sequence[Element], h: int, group: AmbientGroup) -> Dict[Element, set]:
    """sum -> set of equivalence classes of ordered h-tuples (a class is its sorted tuple)."""
    out: Dict[Element, set] = {}
    for tup in product(values, repeat=h):
        out.setdefault(group.sum(tup), set()).add(tuple(sorted(tup)))
    return out


def brute_is_bh(values: Sequence[Element], h: int, group: AmbientGroup) -> bool:
    return all(len(c) == 1 for c in _classes_by_sum(values, h, group).values())


def _max_matched_positions(a: tuple, b: tuple) -> int:
    # largest |I'| over injections tau: I' -> I with b[i'] == a[tau(i')]
    return max(sum(x == y for x, y in zip(perm, b)) for perm in permutations(a))


def brute_is_bhk(values: Sequence[Element], h: int, k: int, group: AmbientGroup) -> bool:
    for classes in _classes_by_sum(values, h, group).values():
        cl = sorted(classes)
        for i, a in enumerate(cl):
            for b in cl[i + 1:]:
                if _max_matched_positions(a, b) < k:
                    return False
    return True


def brute_proper_double_representations(
    values: Sequence[Element], max_len: int, group: AmbientGroup
) -> List[Tuple[tuple, tuple]]:
    """Unordered pairs (smaller side first) of disjoint equal-sum classes of each length <= max_len."""
    out = []
    for ell in range(1, max_len + 1):
        found = []
        for classes in _classes_by_sum(values, ell, group).values():
            cl = sorted(classes)
            for i, a in enumerate(cl):
                for b in cl[i + 1:]:
                    if not set(a) & set(b):
                        found.append((a, b))
        out.extend(sorted(found))
    return out


def _members(values: Sequence[Element], mask: int) -> tuple:
    return tuple(v for i, v in enumerate(values) if mask >> i & 1)


def brute_independent_masks(values: Sequence[Element], h: int, group: AmbientGroup,
                            cap: int = DEFAULT_SUBSET_CAP) -> set:
    """Bitmasks over ``values`` of every B_h subset (hereditary pruning)."""
    n = len(values)
    _check_cap(n, cap)
    indep = {0}
    for mask in range(1, 1 << n):
        if any((mask & ~(1 << i)) not in indep for i in range(n) if mask >> i & 1):
            continue
        if brute_is_bh(_members(values, mask), h, group):
            indep.add(mask)
    return indep


def brute_maximal_independents(values: Sequence[Element], h: int, group: AmbientGroup,
                               cap: int = DEFAULT_SUBSET_CAP) -> List[tuple]:
    """Inclusion-maximal B_h subsets, largest first, then lexicographic."""
    values = sorted(values)
    n = len(values)
    indep = brute_independent_masks(values, h, group, cap)
    maximal = [
        m for m in indep
        if not any((m | 1 << i) in indep for i in range(n) if not m >> i & 1)
    ]
    sets = [_members(values, m) for m in maximal]
    return sorted(sets, key=lambda s: (-len(s), s))


def brute_union_rank(values: Sequence[Element], h: int, k: int, group: AmbientGroup,
                     cap: int = DEFAULT_SUBSET_CAP) -> int:
    """max |I_1 u ... u I_k| over B_h subsets I_j."""
    values = sorted(values)
    indep = brute_independent_masks(values, h, group, cap)
    reach = {0}
    for _ in range(k):
        reach = {u | m for u in reach for m in indep}
    return max(bin(u).count("1") for u in reach)


def brute_mu_partition_exists(values: Sequence[Element], h: int, mu: Sequence[int],
                              group: AmbientGroup, cap: int = DEFAULT_SUBSET_CAP) -> bool:
    """Search for disjoint B_h sets of sizes mu covering ``values``."""
    values = sorted(values)
    n = len(values)
    if sum(mu) != n:
        return False
    indep = brute_independent_masks(values, h, group, cap)
    by_size: Dict[int, List[int]] = {}
    for m in indep:
        by_size.setdefault(bin(m).count("1"), []).append(m)
    memo: Dict[Tuple[int, int], bool] = {}

    def go(remaining: int, j: int) -> bool:
        if j == len(mu):
            return remaining == 0
        key = (remaining, j)
        if key not in memo:
            memo[key] = any(
                m & remaining == m and go(remaining & ~m, j + 1)
                for m in by_size.get(mu[j], ())
            )
        return memo[key]

    return go((1 << n) - 1, 0)


def integer_partitions(n: int, largest: Optional[int] = None):
    """Nonincreasing tuples of positive integers summing to n."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def matroid_axiom_violations(values: Sequence[Element], h: int, group: AmbientGroup,
                             cap: int = DEFAULT_SUBSET_CAP) -> List[dict]:
    """Counterexamples to axioms (i)-(iii) for 'independent = B_h subset'."""
    values = sorted(values)
    n = len(values)
    indep = brute_independent_masks(values, h, group, cap)
    bad = []
    if 0 not in indep:
        bad.append({"axiom": "i"})
    for m in indep:
        sub = m
        while sub:
            sub = (sub - 1) & m
            if sub not in indep:
                bad.append({"axiom": "ii", "B": _members(values, m), "A": _members(values, sub)})
                break
    for a in indep:
        for b in indep:
            if bin(a).count("1") >= bin(b).count("1"):
                continue
            if not any((a | 1 << i) in indep for i in range(n) if (b & ~a) >> i & 1):
                bad.append({"axiom": "iii", "A": _members(values, a), "B": _members(values, b)})
    return sorted(bad, key=lambda d: (d["axiom"], len(d.get("A", ())), d.get("A", ()), d.get("B", ())))


@dataclass
class Check:
    name: str
    instance: str
    status: str  # pass | fail | skip | expected-fail
    detail: str = ""
    counterexample: Optional[object] = None


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)

    def add(self, *args, **kwargs):
        self.checks.append(Check(*args, **kwargs))

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [asdict(c) for c in self.checks]}


# heavier cross-checks only below these sizes
_MU_LIMIT = 8
_SUBSET_RANK_LIMIT = 10


def verify_paper(X, h: int, cap: int = DEFAULT_SUBSET_CAP) -> VerificationReport:
    """Run every structural check on the ground set X (a GroundSet) at order h >= 2."""
    # imported here so the oracle functions above stay free of the fast paths
    from . import sidon
    from .matroid import PartitionMu, new_matroid
    from .errors import NotGeneralizedSidonError

    g = X.group
    vals = list(X.elements)
    _check_cap(len(vals), cap)
    inst = f"X={X} in {g}, h={h}"
    rep = VerificationReport()

    def record(name, violations, detail=""):
        if violations:
            rep.add(name, inst, "fail", detail or f"{len(violations)} violation(s)", violations[0])
        else:
            rep.add(name, inst, "pass", detail)

    # fast path vs definition
    bad = []
    for order, k in [(h, h), (h, 1), (2 * h - 1, h - 1), (2 * h - 1, 1)]:
        if k < 1:
            continue
        fast = sidon.is_bhk(X, order, k)
        slow = brute_is_bh(vals, order, g) if k == order else brute_is_bhk(vals, order, k, g)
        if fast != slow:
            bad.append({"h": order, "k": k, "fast": fast, "oracle": slow})
    record("bhk_fast_vs_oracle", bad)

    bad = []
    for order in range(2, 2 * h):
        for k in range(1, order):
            lhs = sidon.is_bh(X, order)
            rhs = sidon.is_bhk(X, order, k) and sidon.is_bh(X, order - k)
            if lhs != rhs:
                bad.append({"h": order, "k": k})
    record("iden1", bad)

    lhs = sidon.is_bh(X, 2 * h - 1)
    rhs = sidon.is_bhk(X, 2 * h - 1, h - 1) and sidon.is_bh(X, h)
    record("iden2", [] if lhs == rhs else [{"h": h}])

    in_big = sidon.is_bhk(X, 2 * h - 1, h - 1)
    bad = [{"k": k} for k in range(1, h) if in_big and not sidon.is_bhk(X, 2 * h - k, h - k)]
    record("iden4", bad)

    bad = []
    for order in (h, 2 * h - 1):
        for k in range(1, order):
            if sidon.is_bhk(X, order, k + 1) and not sidon.is_bhk(X, order, k):
                bad.append({"h": order, "k": k})
    record("iden5", bad)

    bad = []
    for order in (h, 2 * h - 1):
        for k in range(1, order + 1):
            if 2 * k >= order and sidon.is_bhk(X, order, k) != sidon.is_bh(X, order):
                bad.append({"h": order, "k": k})
    record("collapse", bad)

    try:
        M = new_matroid(X, h, validate=True)
    except NotGeneralizedSidonError as e:
        rep.add("ground_is_B(2h-1,h-1)", inst, "expected-fail", str(e), e.witness.to_dict())
        viol = matroid_axiom_violations(vals, h, g, cap)
        if viol:
            rep.add("matroid_necessity", inst, "expected-fail",
                    "B_h subsets do not form a matroid here", _jsonable(viol[0]))
        else:
            rep.add("matroid_necessity", inst, "pass", "B_h subsets form a matroid anyway")
        for name in _MATROID_CHECKS:
            rep.add(name, inst, "skip", "ground set is not B_{2h-1,h-1}")
        return rep
    rep.add("ground_is_B(2h-1,h-1)", inst, "pass")

    # proper representations all have length h, and the fast finder matches the oracle
    fast = [(d.left.entries, d.right.entries) for d in sidon.find_proper_double_representations(X, 2 * h - 1)]
    slow = brute_proper_double_representations(vals, 2 * h - 1, g)
    bad = [{"left": a, "right": b} for a, b in slow if len(a) != h]
    if fast != slow:
        bad.append({"fast_count": len(fast), "oracle_count": len(slow)})
    record("lemma_length_h", bad)

    maximal = brute_maximal_independents(vals, h, g, cap)
    bad_unique, bad_exchange = [], []
    for A in maximal:
        for x in vals:
            if x in A:
                continue
            reps = brute_proper_double_representations(sorted(A + (x,)), 2 * h - 1, g)
            if len(reps) != 1:
                bad_unique.append({"A": A, "x": x, "count": len(reps)})
                continue
            try:
                ex = M.exchange_set(A, x)
            except Exception as e:  # any failure here is a counterexample
                bad_exchange.append({"A": A, "x": x, "error": str(e)})
                continue
            a, b = reps[0]
            expected = (set(a) | set(b)) - {x}
            if set(ex) != expected:
                bad_exchange.append({"A": A, "x": x, "got": sorted(ex), "want": sorted(expected)})
            for s in ex:
                swapped = (set(A) | {x}) - {s}
                if not brute_is_bh(sorted(swapped), h, g):
                    bad_exchange.append({"A": A, "x": x, "a*": s})
    record("uniqueness_lemma", bad_unique)
    record("exchange_lemma", bad_exchange)

    sizes = sorted({len(A) for A in maximal})
    record("equal_cardinality", [] if len(sizes) == 1 else [{"sizes": sizes}],
           f"all {len(maximal)} maximal B_{h} subsets have size {sizes[-1] if sizes else 0}")

    record("matroid_axioms", [_jsonable(v) for v in matroid_axiom_violations(vals, h, g, cap)])

    if len(vals) <= _SUBSET_RANK_LIMIT:
        indep = brute_independent_masks(vals, h, g, cap)
        bad = []
        for mask in range(1 << len(vals)):
            S = _members(vals, mask)
            best = max(bin(m).count("1") for m in indep if m & mask == m)
            if M.rank(S) != best:
                bad.append({"S": S, "rank": M.rank(S), "oracle": best})
        record("greedy_rank_vs_oracle", bad)
    else:
        rep.add("greedy_rank_vs_oracle", inst, "skip", f"|X| > {_SUBSET_RANK_LIMIT}")

    bad = []
    for k in range(1, len(vals) + 1):
        fast_r, slow_r = M.union_rank(k), brute_union_rank(vals, h, k, g, cap)
        if fast_r != slow_r:
            bad.append({"k": k, "union_rank": fast_r, "oracle": slow_r})
    record("union_rank_vs_oracle", bad)

    profile = M.rank_profile()
    c = M.covering_number()
    bad = []
    if c != profile.covering_number:
        bad.append({"covering_number": c, "profile": profile.rho})
    if any(a >= b for a, b in zip(profile.rho, profile.rho[1:])):
        bad.append({"profile_not_increasing": profile.rho})
    if vals and any(M.max_set_with_covering_number(k) != profile[k] for k in range(1, c + 1)):
        bad.append({"n_X": "disagrees with rho"})
    record("covering_number", bad, f"rho = {list(profile.rho)}")

    if len(vals) <= _MU_LIMIT:
        bad = []
        for parts in integer_partitions(len(vals)):
            mu = PartitionMu(parts)
            fast_ok = M.mu_covering_exists(mu)
            slow_ok = brute_mu_partition_exists(vals, h, parts, g, cap)
            if fast_ok != slow_ok:
                bad.append({"mu": parts, "criterion": fast_ok, "oracle": slow_ok})
                continue
            cov = M.construct_mu_covering(mu)
            if cov.exists != fast_ok:
                bad.append({"mu": parts, "constructed": cov.exists})
            elif cov.exists:
                flat = [e for p in cov.parts for e in p]
                if (sorted(flat) != vals or [len(p) for p in cov.parts] != list(parts)
                        or not all(brute_is_bh(sorted(p), h, g) for p in cov.parts)):
                    bad.append({"mu": parts, "parts": [sorted(p) for p in cov.parts]})
        record("mu_criterion_vs_oracle", bad)
    else:
        rep.add("mu_criterion_vs_oracle", inst, "skip", f"|X| > {_MU_LIMIT}")
    return rep


_MATROID_CHECKS = (
    "lemma_length_h",
    "uniqueness_lemma",
    "exchange_lemma",
    "equal_cardinality",
    "matroid_axioms",
    "greedy_rank_vs_oracle",
    "union_rank_vs_oracle",
    "covering_number",
    "mu_criterion_vs_oracle",
)


def _jsonable(d: dict) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}
