import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkp.bitvec import BitVec, ContractViolation
from hkp.gf2 import (
    Gf2Subspace,
    all_subspaces,
    character_sum,
    dot,
    nullspace,
    perp_involution_check,
    random_subspace,
    row_reduce,
)


def brute_annihilator(s: Gf2Subspace) -> set[int]:
    """Independent oracle: scan every vector for orthogonality to the span."""
    members = list(s.elements())
    return {
        g
        for g in range(1 << s.width)
        if all(dot(g, v) == 0 for v in members)
    }


class TestRowReduce:
    def test_dependent_rows(self):
        s = row_reduce([0b110, 0b011, 0b101], 3)
        assert s.dim == 2  # third row is the sum of the first two

    def test_empty(self):
        assert row_reduce([], 3).dim == 0

    def test_width_one(self):
        assert row_reduce([1], 1).dim == 1

    def test_canonical_form_is_span_invariant(self):
        a = row_reduce([0b110, 0b011], 3)
        b = row_reduce([0b101, 0b011, 0b110], 3)
        assert a == b

    def test_membership(self):
        s = row_reduce([0b110, 0b011], 3)
        assert 0b101 in s and 0b100 not in s

    def test_accepts_bitvecs(self):
        s = row_reduce([BitVec.from_string("110")], 3)
        assert s.basis == (0b110,)

    def test_bitvec_width_mismatch(self):
        with pytest.raises(ContractViolation):
            row_reduce([BitVec.from_string("11")], 3)


class TestNullspace:
    def test_self_dual_line(self):
        s = row_reduce([0b11], 2)
        assert nullspace(s) == s

    def test_empty_span_gives_everything(self):
        assert nullspace(row_reduce([], 3)).dim == 3

    def test_full_space_gives_zero(self):
        assert nullspace(row_reduce([0b10, 0b01], 2)).dim == 0

    def test_matches_brute_force_everywhere_small(self):
        for w in (1, 2, 3, 4):
            for s in all_subspaces(w):
                assert set(nullspace(s).elements()) == brute_annihilator(s)

    @given(st.data())
    @settings(max_examples=100)
    def test_perp_involution_random(self, data):
        w = data.draw(st.integers(1, 8))
        rows = data.draw(st.lists(st.integers(0, 2**w - 1), max_size=8))
        assert perp_involution_check(row_reduce(rows, w))

    def test_perp_involution_examples(self):
        assert perp_involution_check(row_reduce([0b110], 3))
        assert perp_involution_check(row_reduce([], 2))

    def test_rank_plus_nullity(self):
        rng = np.random.default_rng(17)
        for _ in range(500):
            w = int(rng.integers(1, 17))
            rows = [int(rng.integers(0, 1 << w)) for _ in range(int(rng.integers(0, 10)))]
            s = row_reduce(rows, w)
            assert s.dim + nullspace(s).dim == w


class TestCharacterSum:
    def test_line_width_two(self):
        d = row_reduce([0b11], 2)
        assert character_sum(d, 0b10) == 0
        assert character_sum(d, 0b11) == 2

    def test_zero_vector_counts_everything(self):
        for w in (1, 2, 3):
            for d in all_subspaces(w):
                assert character_sum(d, 0) == len(d)

    def test_dichotomy_exhaustive_width_four(self):
        subspaces = all_subspaces(4)
        assert len(subspaces) == 67
        for d in subspaces:
            ann = brute_annihilator(d)
            for g in range(16):
                expected = len(d) if g in ann else 0
                assert character_sum(d, g) == expected

    def test_width_mismatch(self):
        d = row_reduce([0b11], 2)
        with pytest.raises(ContractViolation):
            character_sum(d, BitVec.from_string("101"))

    def test_size_product(self):
        for w in (1, 2, 3, 4):
            for d in all_subspaces(w):
                assert len(d) * len(nullspace(d)) == 1 << w


class TestSubspaceEnumeration:
    def test_counts_match_gaussian_binomials(self):
        # number of k-dim subspaces of F2^w is the Gaussian binomial [w choose k]_2
        def gaussian(w, k):
            num = den = 1
            for i in range(k):
                num *= 2**w - 2**i
                den *= 2**k - 2**i
            return num // den

        for w, total in ((1, 2), (2, 5), (3, 16), (4, 67)):
            assert sum(gaussian(w, k) for k in range(w + 1)) == total
            assert len(all_subspaces(w)) == total

    def test_counts_match_brute_span_enumeration(self):
        for w in (1, 2, 3):
            spans = set()
            vectors = list(range(1, 1 << w))
            for picks in range(1 << len(vectors)):
                rows = [v for i, v in enumerate(vectors) if (picks >> i) & 1]
                spans.add(row_reduce(rows, w))
            assert spans == set(all_subspaces(w))

    def test_random_subspace_is_reduced(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            s = random_subspace(rng, 6)
            assert row_reduce(s.basis, 6) == s
