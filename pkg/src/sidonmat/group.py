"""Ambient abelian groups: the integers and the cyclic groups Z/nZ.

Elements are plain Python ints in canonical form (exact integers for Z,
residues ``0 <= v < n`` for Z/nZ).  Integer arithmetic is checked against the
signed 64-bit range so results never silently depend on the width of the
backing integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ArithmeticOverflow, UsageError

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

Element = int


def _checked(value: int) -> int:
    if value > INT64_MAX or value < INT64_MIN:
        raise ArithmeticOverflow(f"integer {value} outside the signed 64-bit range")
    return value


@dataclass(frozen=True)
class AmbientGroup:
    """``modulus=None`` is Z, otherwise Z/modulus Z."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise UsageError(f"cyclic modulus must be an integer >= 2, got {self.modulus!r}")
            _checked(self.modulus)

    @property
    def is_integers(self) -> bool:
        return self.modulus is None

    def canonical(self, value: int) -> Element:
        if self.modulus is None:
            return _checked(int(value))
        return int(value) % self.modulus

    def is_canonical(self, value: int) -> bool:
        if self.modulus is None:
            return INT64_MIN <= value <= INT64_MAX
        return 0 <= value < self.modulus

    def add(self, a: Element, b: Element) -> Element:
        if self.modulus is None:
            return _checked(a + b)
        return (a + b) % self.modulus

    def neg(self, a: Element) -> Element:
        if self.modulus is None:
            return _checked(-a)
        return (-a) % self.modulus

    def sum(self, elems: Iterable[Element]) -> Element:
        total = 0
        for e in elems:
            total = self.add(total, e)
        return total

    def scale(self, n: int, a: Element) -> Element:
        """n-fold sum of ``a`` (n >= 0)."""
        if self.modulus is None:
            return _checked(n * a)
        return (n * a) % self.modulus

    def __str__(self):
        return "Z" if self.modulus is None else f"Z/{self.modulus}Z"


INTEGERS = AmbientGroup()


def Integers() -> AmbientGroup:
    return INTEGERS


def CyclicMod(n: int) -> AmbientGroup:
    return AmbientGroup(n)


def add(g: AmbientGroup, a: Element, b: Element) -> Element:
    return g.add(a, b)


def sum_elements(g: AmbientGroup, elems: Iterable[Element]) -> Element:
    return g.sum(elems)
