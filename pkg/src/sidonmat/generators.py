"""Reproducible test-instance generators.

Spec strings, as accepted by the CLI ``--gen`` flag::

    interval:7                      {1, ..., 7}
    powers:g=3,count=5              {3, 9, 27, 81, 243}
    random:seed=1,n=6,max=50        6 distinct values drawn from 1..max
    tower:h=3,k=1,steps=4           {1,2,3} extended by b = h*max+1, steps times
    greedy:seed=1,h=2,n=6,max=50    random B_{2h-1,h-1} set built one element at a time
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional

from .combinat import GroundSet
from .errors import UsageError
from .group import INTEGERS, AmbientGroup
from .sidon import extend_bhk, is_bhk


def interval(n: int, group: AmbientGroup = INTEGERS) -> GroundSet:
    return GroundSet.of(range(1, n + 1), group)


def powers(g: int, count: int, group: AmbientGroup = INTEGERS) -> GroundSet:
    return GroundSet.of([g**i for i in range(1, count + 1)], group)


def random_set(seed: int, n: int, max_value: int, group: AmbientGroup = INTEGERS) -> GroundSet:
    rng = random.Random(seed)
    pool = range(1, max_value + 1) if group.is_integers else range(group.modulus)
    values = rng.sample(list(pool), n)
    return GroundSet.of(values, group)


def tower(h: int, k: int, steps: int, start=(1, 2, 3)) -> GroundSet:
    A = GroundSet.of(start)
    for _ in range(steps):
        A = extend_bhk(A, h, k, h * A.elements[-1] + 1)
    return A


def greedy_generalized_sidon(seed: int, h: int, n: int, max_value: int,
                             group: AmbientGroup = INTEGERS, attempts: int = 400) -> GroundSet:
    """Add random candidates while the set stays B_{2h-1,h-1}; stop at n elements or when out of attempts."""
    rng = random.Random(seed)
    pool = list(range(1, max_value + 1)) if group.is_integers else list(range(group.modulus))
    chosen: List[int] = []
    for _ in range(attempts):
        if len(chosen) == n:
            break
        c = group.canonical(rng.choice(pool))
        if c in chosen:
            continue
        cand = GroundSet.of(chosen + [c], group)
        if is_bhk(cand, 2 * h - 1, h - 1):
            chosen.append(c)
    return GroundSet.of(chosen, group)


def _kv(body: str) -> Dict[str, int]:
    out = {}
    for item in filter(None, body.split(",")):
        if "=" not in item:
            raise UsageError(f"expected key=value, got {item!r}")
        key, val = item.split("=", 1)
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f"{key} must be an integer, got {val!r}") from None
    return out


def from_spec(spec: str, group: AmbientGroup = INTEGERS, seed: Optional[int] = None) -> GroundSet:
    """Build a ground set from a generator spec string (see module docstring)."""
    kind, _, body = spec.partition(":")
    try:
        if kind == "interval":
            return interval(int(body), group)
        if kind == "powers":
            kv = _kv(body)
            return powers(kv["g"], kv["count"], group)
        if kind == "random":
            kv = _kv(body)
            return random_set(kv.get("seed", seed or 0), kv["n"], kv["max"], group)
        if kind == "tower":
            if not group.is_integers:
                raise UsageError("tower instances live in the integers")
            kv = _kv(body)
            return tower(kv["h"], kv["k"], kv["steps"])
        if kind == "greedy":
            kv = _kv(body)
            return greedy_generalized_sidon(kv.get("seed", seed or 0), kv["h"], kv["n"], kv["max"], group)
    except KeyError as e:
        raise UsageError(f"generator {kind!r} is missing parameter {e.args[0]}") from None
    except ValueError as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(f"bad generator spec {spec!r}: {e}") from None
    raise UsageError(f"unknown generator {kind!r}; expected interval, powers, random, tower or greedy")


def validated_instances(h: int, count: int, max_size: int = 8, seed: int = 0) -> List[GroundSet]:
    """Distinct B_{2h-1,h-1} sets with 2..max_size elements, mixing Z and Z/nZ.

    Sets that are already B_h give trivial matroids, so they are kept only
    once the non-trivial ones run out.
    """
    rng = random.Random(seed)
    seen = set()
    nontrivial, trivial = [], []
    tries = 0
    while len(nontrivial) < count and tries < 50 * count:
        tries += 1
        if rng.random() < 0.7:
            group = INTEGERS
            max_value = rng.choice([20, 50, 100, 200, 400]) * (h - 1)
        else:
            group = AmbientGroup(rng.choice([23, 41, 101, 199, 307, 401]))
            max_value = group.modulus
        n = rng.randint(3, max_size)
        X = greedy_generalized_sidon(rng.randrange(10**9), h, n, max_value, group)
        key = (X.group, X.elements)
        if len(X) < 2 or key in seen:
            continue
        seen.add(key)
        (trivial if is_bhk(X, h, h) else nontrivial).append(X)
    return (nontrivial + trivial)[:count]
