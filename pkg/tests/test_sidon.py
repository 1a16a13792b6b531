import pytest
from hypothesis import assume, given, strategies as st

from sidonmat import (
    AmbientGroup,
    DoubleRepresentation,
    GroundSet,
    UsageError,
    bh_witness,
    bhk_witness,
    classify_max_k,
    extend_bhk,
    find_proper_double_representations,
    is_bh,
    is_bhk,
    multiset_intersection_size,
    reduce_to_proper,
    subtraction_algorithm,
)
from sidonmat.oracle import brute_is_bh, brute_is_bhk, brute_proper_double_representations

from strategies import ground_sets, int_sets

Z = AmbientGroup()


def S(*vals):
    return GroundSet.of(vals)


def DR(left, right, x=None):
    return DoubleRepresentation.make(Z, left, right, x)


class TestMembership:
    def test_paper_sidon_sets(self):
        assert is_bh(S(1, 3, 6, 7), 2)
        assert is_bh(S(1, 2, 5, 7), 2)

    def test_not_sidon(self):
        w = bh_witness(S(1, 2, 3), 2)
        assert not is_bh(S(1, 2, 3), 2)
        assert (w.left.entries, w.right.entries) == ((1, 3), (2, 2))

    @pytest.mark.parametrize("h", [1, 2, 3, 5])
    def test_tiny_sets(self, h):
        assert is_bh(S(), h)
        assert is_bh(S(42), h)

    @pytest.mark.parametrize("g,h", [(3, 2), (4, 3), (5, 4), (7, 4)])
    def test_geometric_progressions(self, g, h):
        assert is_bh(S(*[g**i for i in range(1, 7)]), h)

    def test_generalized_examples(self):
        assert is_bhk(S(1, 2, 3), 3, 1)
        assert not is_bhk(S(1, 2, 3), 3, 2)
        assert is_bhk(S(1, 14, 19, 20, 25, 38), 3, 1)

    def test_k_out_of_range(self):
        with pytest.raises(UsageError):
            is_bhk(S(1, 2), 2, 3)
        with pytest.raises(UsageError):
            is_bhk(S(1, 2), 2, 0)

    @given(ground_sets(5), st.integers(1, 3))
    def test_bh_sets_are_bhk_for_every_k(self, A, h):
        if is_bh(A, h):
            assert all(is_bhk(A, h, k) for k in range(1, h + 1))

    @given(ground_sets(5), st.integers(1, 3), st.data())
    def test_agrees_with_definition(self, A, h, data):
        k = data.draw(st.integers(1, h))
        assert is_bh(A, h) == brute_is_bh(A.elements, h, A.group)
        assert is_bhk(A, h, k) == brute_is_bhk(A.elements, h, k, A.group)

    @given(ground_sets(5), st.integers(1, 3), st.data())
    def test_witness_soundness(self, A, h, data):
        k = data.draw(st.integers(1, h))
        w = bhk_witness(A, h, k)
        if w is None:
            return
        assert w.length == h
        assert set(w.left.entries) | set(w.right.entries) <= set(A.elements)
        assert A.group.sum(w.left.entries) == A.group.sum(w.right.entries)
        assert w.left.entries != w.right.entries
        assert multiset_intersection_size(w.left.entries, w.right.entries) < k
        # minimal overlap is the classification value
        assert w.overlap == classify_max_k(A, h)


class TestIdentities:
    @given(ground_sets(6), st.integers(2, 4), st.data())
    def test_iden1(self, A, h, data):
        k = data.draw(st.integers(1, h - 1))
        assert is_bh(A, h) == (is_bhk(A, h, k) and is_bh(A, h - k))

    @given(ground_sets(6), st.integers(2, 3))
    def test_iden2(self, A, h):
        assert is_bh(A, 2 * h - 1) == (is_bhk(A, 2 * h - 1, h - 1) and is_bh(A, h))

    @given(ground_sets(6), st.integers(2, 4), st.data())
    def test_iden3_on_the_unambiguous_range(self, A, h, data):
        k = data.draw(st.integers(2, h))
        ell = data.draw(st.integers(1, k - 1))
        assert is_bhk(A, h, k) == (is_bhk(A, h, ell) and is_bhk(A, h - ell, k - ell))

    @given(ground_sets(6), st.integers(2, 3), st.data())
    def test_iden4(self, A, h, data):
        k = data.draw(st.integers(1, h - 1))
        if is_bhk(A, 2 * h - 1, h - 1):
            assert is_bhk(A, 2 * h - k, h - k)

    @given(ground_sets(6), st.integers(2, 4))
    def test_iden5_nesting(self, A, h):
        flags = [is_bhk(A, h, k) for k in range(1, h + 1)]
        assert flags == sorted(flags, reverse=True)

    @given(ground_sets(6), st.integers(2, 4))
    def test_collapse_for_large_k(self, A, h):
        for k in range(1, h + 1):
            if 2 * k >= h:
                assert is_bhk(A, h, k) == is_bh(A, h)

    @given(int_sets(6), st.integers(2, 3), st.integers(-10, 10))
    def test_translation_reflection(self, A, h, x):
        b = is_bh(A, h)
        assert is_bh(GroundSet.of([x + a for a in A]), h) == b
        assert is_bh(GroundSet.of([x - a for a in A]), h) == b


class TestClassify:
    def test_examples(self):
        assert classify_max_k(S(1, 2, 3), 3) == 1
        assert classify_max_k(S(1, 3, 6, 7), 2) == 2
        assert classify_max_k(S(1, 2, 3), 2) == 0

    @given(ground_sets(5), st.integers(1, 4))
    def test_consistent_with_is_bhk(self, A, h):
        c = classify_max_k(A, h)
        for k in range(1, h + 1):
            assert is_bhk(A, h, k) == (k <= c)


class TestDoubleRepresentations:
    def test_equivalent_sides_rejected(self):
        with pytest.raises(UsageError):
            DR((2, 2, 3), (2, 3, 2))

    def test_unequal_sums_rejected(self):
        with pytest.raises(UsageError):
            DR((1, 2), (1, 3))

    def test_reduce(self):
        d = reduce_to_proper(DR((1, 2, 5), (1, 3, 4)))
        assert (d.left.entries, d.right.entries) == ((2, 5), (3, 4))
        assert d.proper and d.length == 2

    def test_reduce_proper_is_identity(self):
        d = DR((1, 3), (2, 2))
        assert reduce_to_proper(d) == d

    @given(st.lists(st.integers(0, 6), min_size=2, max_size=5), st.data())
    def test_reduce_is_proper_and_conserves_sum(self, left, data):
        # move some mass between two positions so the sums stay equal
        right = list(data.draw(st.permutations(left)))
        p, q = data.draw(st.lists(st.integers(0, len(left) - 1), min_size=2, max_size=2, unique=True))
        delta = data.draw(st.integers(1, 4))
        right[p] += delta
        right[q] -= delta
        assume(sorted(left) != sorted(right))
        d = DR(left, right)
        r = reduce_to_proper(d)
        assert r.proper
        assert 1 <= r.length <= d.length
        assert d.length - r.length == d.overlap
        assert sum(r.left.entries) == sum(r.right.entries)

    def test_find_examples(self):
        found = find_proper_double_representations(S(1, 2, 3), 2)
        assert [(d.left.entries, d.right.entries) for d in found] == [((1, 3), (2, 2))]
        pairs = [(d.left.entries, d.right.entries) for d in find_proper_double_representations(S(*range(1, 8)), 2)]
        assert ((1, 4), (2, 3)) in pairs
        assert find_proper_double_representations(S(1, 3, 6, 7), 2) == []

    @given(ground_sets(5), st.integers(1, 3))
    def test_find_matches_oracle(self, A, max_len):
        fast = [(d.left.entries, d.right.entries) for d in find_proper_double_representations(A, max_len)]
        assert fast == brute_proper_double_representations(A.elements, max_len, A.group)

    @given(ground_sets(6), st.integers(1, 3))
    def test_no_length_h_representation_iff_bh(self, A, h):
        # a proper representation of length <= h exists iff A is not B_h
        assert bool(find_proper_double_representations(A, h)) != is_bh(A, h)


def _toy_subtraction_instance():
    """Search {0..6}-subsets for x with proper h=2 representations where x has multiplicity 1 and 2."""
    for n in range(3, 7):
        for mask in range(1 << 7):
            vals = [v for v in range(7) if mask >> v & 1]
            if len(vals) != n:
                continue
            A = S(*vals)
            reps = find_proper_double_representations(A, 2)
            for x in vals:
                oriented = [d if x in d.left.entries else d.swapped() for d in reps
                            if x in d.left.entries + d.right.entries]
                ones = [d for d in oriented if d.left.entries.count(x) == 1]
                twos = [d for d in oriented if d.left.entries.count(x) == 2]
                if ones and twos:
                    return A, x, ones[0], twos[0]
    raise AssertionError("no toy instance found")


class TestSubtraction:
    def test_toy_instance(self):
        A, x, d1, d2 = _toy_subtraction_instance()
        assert not is_bhk(A, 3, 1)
        out = subtraction_algorithm(d1, d2, x)
        assert out.proper
        assert out.external_multiplicity == 2 - 1
        assert out.left.entries.count(x) == 1 and x not in out.right.entries
        assert sum(out.left.entries) == sum(out.right.entries)

    def test_hand_example(self):
        # 2 + 0 = 1 + 1 and 2 + 2 = 1 + 3 give 2 + 1 = 0 + 3
        out = subtraction_algorithm(DR((0, 2), (1, 1), 2), DR((2, 2), (1, 3), 2), 2)
        assert (out.left.entries, out.right.entries) == ((1, 2), (0, 3))
        assert out.external_multiplicity == 1

    def test_needs_u_less_than_w(self):
        d = DR((2, 2), (1, 3), 2)
        with pytest.raises(UsageError):
            subtraction_algorithm(d, d, 2)

    def test_needs_proper_inputs(self):
        with pytest.raises(UsageError):
            subtraction_algorithm(DR((1, 2, 5), (1, 3, 4)), DR((2, 2), (1, 3)), 2)


class TestExtension:
    def test_single_step(self):
        B = extend_bhk(S(1, 2, 3), 3, 1, 10)
        assert B.elements == (1, 2, 3, 10)
        assert is_bhk(B, 3, 1) and not is_bhk(B, 3, 2)

    def test_two_steps(self):
        B = extend_bhk(extend_bhk(S(1, 2, 3), 3, 1, 10), 3, 1, 31)
        assert B.elements == (1, 2, 3, 10, 31)
        assert is_bhk(B, 3, 1) and not is_bhk(B, 3, 2)

    @pytest.mark.parametrize(
        "A,h,k,b",
        [
            ((1, 2, 3), 3, 1, 9),  # b <= h max(A)
            ((1, 2, 3), 2, 1, 10),  # k < h/2 fails
            ((1, 3, 6, 7), 3, 1, 30),  # already in B_{3,2}
            ((1, 2, 3, 4, 5, 6, 7), 3, 1, 30),  # not in B_{3,1}
        ],
    )
    def test_hypotheses_enforced(self, A, h, k, b):
        with pytest.raises(UsageError):
            extend_bhk(S(*A), h, k, b)

    def test_cyclic_rejected(self):
        with pytest.raises(UsageError):
            extend_bhk(GroundSet.of([1, 2, 3], AmbientGroup(101)), 3, 1, 10)
