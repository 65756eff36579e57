import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkp.bitvec import (
    AND,
    AND_OR3,
    CONST0,
    CONST1,
    IFF,
    MAJ,
    NOT,
    OR,
    OR_AND3,
    XOR,
    XOR3,
    BitVec,
    Call,
    ContractViolation,
    TruthTable,
    Var,
    eval_op,
    eval_term,
    lift_pointwise,
    term_table,
)


def bv(s: str) -> BitVec:
    return BitVec.from_string(s)


class TestTruthTables:
    def test_catalog_tables(self):
        assert MAJ.to_string() == "00010111"
        assert AND.to_string() == "0001"
        assert OR.to_string() == "0111"
        assert XOR.to_string() == "0110"
        assert IFF.to_string() == "1001"
        assert NOT.to_string() == "10"
        assert XOR3.to_string() == "01101001"
        assert OR_AND3.to_string() == "00011111"
        assert AND_OR3.to_string() == "00000111"
        assert CONST0.to_string() == "0"
        assert CONST1.to_string() == "1"

    def test_string_roundtrip(self):
        for op in (MAJ, AND, NOT, CONST0, CONST1, XOR3):
            assert TruthTable.from_string(op.to_string()) == op

    def test_json_roundtrip(self):
        assert TruthTable.from_json(MAJ.to_json()) == MAJ
        assert MAJ.to_json() == {"arity": 3, "table": "00010111"}

    def test_json_inconsistent_arity(self):
        with pytest.raises(ContractViolation):
            TruthTable.from_json({"arity": 2, "table": "00010111"})

    def test_bad_strings(self):
        with pytest.raises(ContractViolation):
            TruthTable.from_string("012")
        with pytest.raises(ContractViolation):
            TruthTable.from_string("000")  # length not a power of two

    def test_arity_cap(self):
        with pytest.raises(ContractViolation):
            TruthTable(5, 0)


class TestEvalOp:
    def test_majority_example(self):
        assert eval_op(MAJ, (0, 1, 1)) == 1

    def test_and_example(self):
        assert eval_op(AND, (1, 1)) == 1

    def test_ternary_sum_example(self):
        assert eval_op(XOR3, (1, 1, 1)) == 1

    def test_row_order_first_argument_most_significant(self):
        # table "0001..." row 3 is (x1,x2) = (1,1)
        op = TruthTable.from_string("0100")
        assert eval_op(op, (0, 1)) == 1
        assert eval_op(op, (1, 0)) == 0

    def test_arity_mismatch(self):
        with pytest.raises(ContractViolation):
            eval_op(MAJ, (0, 1))

    def test_nonbit_argument(self):
        with pytest.raises(ContractViolation):
            eval_op(AND, (2, 0))


class TestEvalTerm:
    def test_majority_absorption_term(self):
        t = Call(MAJ, (Var(0), Var(1), Var(0)))
        assert eval_term(t, (0, 1)) == 0

    def test_projection(self):
        assert eval_term(Var(0), (1,)) == 1

    def test_and_of_or(self):
        t = Call(AND, (Var(0), Call(OR, (Var(1), Var(2)))))
        # direct truth-table evaluation of x and (y or z)
        for x in (0, 1):
            for y in (0, 1):
                for z in (0, 1):
                    assert eval_term(t, (x, y, z)) == (x & (y | z))
        assert eval_term(t, (1, 0, 1)) == 1

    def test_unbound_variable(self):
        with pytest.raises(ContractViolation):
            eval_term(Var(2), (0, 1))

    def test_single_variable_is_identity(self):
        for arity in (1, 2, 3):
            for i in range(arity):
                t = term_table(Var(i), arity)
                for row in range(1 << arity):
                    args = tuple((row >> (arity - 1 - j)) & 1 for j in range(arity))
                    assert eval_op(t, args) == args[i]

    def test_constants_as_nullary_calls(self):
        assert eval_term(Call(CONST1, ()), ()) == 1
        assert eval_term(Call(CONST0, ()), ()) == 0

    def test_call_arity_checked(self):
        with pytest.raises(ContractViolation):
            Call(MAJ, (Var(0), Var(1)))


class TestLiftPointwise:
    def test_and_is_bitwise(self):
        assert lift_pointwise(AND, (bv("011"), bv("110"))) == bv("010")

    def test_ternary_sum_coordinatewise(self):
        assert lift_pointwise(XOR3, (bv("01"), bv("01"), bv("11"))) == bv("11")

    def test_not_is_complement(self):
        assert lift_pointwise(NOT, (bv("0110"),)) == bv("1001")

    def test_nullary_needs_width(self):
        assert lift_pointwise(CONST1, (), n=3) == bv("111")
        with pytest.raises(ContractViolation):
            lift_pointwise(CONST1, ())

    def test_mixed_lengths_rejected(self):
        with pytest.raises(ContractViolation):
            lift_pointwise(AND, (bv("01"), bv("011")))

    def test_commutes_with_projection(self):
        args = (bv("0110"), bv("1100"), bv("1010"))
        lifted = lift_pointwise(MAJ, args)
        for i in range(4):
            assert lifted.bit(i) == eval_op(MAJ, tuple(a.bit(i) for a in args))

    @given(st.integers(0, 2**4 - 1), st.integers(0, 2**4 - 1))
    def test_majority_absorption_exhaustive_small(self, xv, yv):
        x, y = BitVec(4, xv), BitVec(4, yv)
        for args in ((y, x, x), (x, y, x), (x, x, y)):
            assert lift_pointwise(MAJ, args) == x

    @given(
        st.integers(5, 8).flatmap(
            lambda n: st.tuples(
                st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1)
            )
        )
    )
    @settings(max_examples=200)
    def test_majority_absorption_randomized_larger(self, nxy):
        n, xv, yv = nxy
        x, y = BitVec(n, xv), BitVec(n, yv)
        for args in ((y, x, x), (x, y, x), (x, x, y)):
            assert lift_pointwise(MAJ, args) == x


class TestBitVec:
    def test_string_roundtrip(self):
        assert bv("0101").to_string() == "0101"
        assert bv("0101").value == 5

    def test_leftmost_is_coordinate_one(self):
        v = bv("100")
        assert v.bit(0) == 1 and v.bit(1) == 0 and v.bit(2) == 0

    def test_flip(self):
        assert bv("000").flip(1) == bv("010")

    def test_xor(self):
        assert bv("0110") ^ bv("0011") == bv("0101")

    def test_width_cap(self):
        with pytest.raises(ContractViolation):
            BitVec(25, 0)
        with pytest.raises(ContractViolation):
            BitVec(2, 4)

    def test_ordering_is_integer_order(self):
        assert sorted([bv("10"), bv("01"), bv("00")]) == [bv("00"), bv("01"), bv("10")]
