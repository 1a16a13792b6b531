import pytest
from hypothesis import given, strategies as st

from sidonmat import ArithmeticOverflow, CyclicMod, Integers, UsageError
from sidonmat.group import INT64_MAX, add, sum_elements


def test_add_examples():
    assert add(Integers(), 19, 20) == 39
    assert add(CyclicMod(7), 5, 4) == 2
    assert add(Integers(), 1, 38) == 39


def test_sum_examples():
    assert sum_elements(Integers(), []) == 0
    assert sum_elements(CyclicMod(5), []) == 0
    assert sum_elements(Integers(), [1, 3, 6]) == 10
    assert sum_elements(CyclicMod(38), [2, 19, 19]) == 2


def test_overflow_is_an_error_not_a_wrap():
    with pytest.raises(ArithmeticOverflow):
        add(Integers(), INT64_MAX, 1)
    with pytest.raises(ArithmeticOverflow):
        Integers().canonical(2**64)
    assert add(Integers(), INT64_MAX, 0) == INT64_MAX


@pytest.mark.parametrize("n", [0, 1, -3])
def test_bad_modulus(n):
    with pytest.raises(UsageError):
        CyclicMod(n)


def test_canonical_residues():
    g = CyclicMod(7)
    assert g.canonical(-1) == 6
    assert g.canonical(15) == 1
    assert g.is_canonical(6) and not g.is_canonical(7)


@given(st.lists(st.integers(-1000, 1000), max_size=8), st.randoms(use_true_random=False),
       st.integers(2, 50))
def test_sum_is_permutation_invariant(vals, rnd, n):
    shuffled = vals[:]
    rnd.shuffle(shuffled)
    assert sum_elements(Integers(), vals) == sum_elements(Integers(), shuffled) == sum(vals)
    g = CyclicMod(n)
    res = [g.canonical(v) for v in vals]
    out = sum_elements(g, res)
    assert out == sum_elements(g, list(reversed(res))) == sum(vals) % n
    assert g.is_canonical(out)
