"""Elements of {0,1}^n, Boolean operations as truth tables, term evaluation.

Conventions used throughout the package:

* A point of the power domain is rendered as a bitstring with coordinate 1
  leftmost; packed into an int, coordinate 1 is the most significant bit.
* A k-ary operation is stored as its 2^k-row truth table.  Row indices are
  obtained by reading the argument tuple as a binary number with the first
  argument most significant; bit r of the packed table is the output on
  row r.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

MAX_WIDTH = 24  # keeps 2^n element sweeps and 2^(n+m) amplitude vectors in memory
MAX_ARITY = 4


class ContractViolation(ValueError):
    """An operation was applied outside its stated contract."""


@dataclass(frozen=True, order=True)
class BitVec:
    """A point of {0,1}^n packed into an int (coordinate 1 is the top bit)."""

    n: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_WIDTH:
            raise ContractViolation(f"width must be in 1..{MAX_WIDTH}, got {self.n}")
        if not 0 <= self.value < 1 << self.n:
            raise ContractViolation(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def from_string(cls, bits: str) -> "BitVec":
        if not bits or set(bits) - {"0", "1"}:
            raise ContractViolation(f"not a bitstring: {bits!r}")
        return cls(len(bits), int(bits, 2))

    def to_string(self) -> str:
        return format(self.value, f"0{self.n}b")

    def bit(self, i: int) -> int:
        """Coordinate i, 0-based from the left."""
        if not 0 <= i < self.n:
            raise ContractViolation(f"coordinate {i} out of range for width {self.n}")
        return (self.value >> (self.n - 1 - i)) & 1

    def flip(self, i: int) -> "BitVec":
        if not 0 <= i < self.n:
            raise ContractViolation(f"coordinate {i} out of range for width {self.n}")
        return BitVec(self.n, self.value ^ (1 << (self.n - 1 - i)))

    def popcount(self) -> int:
        return self.value.bit_count()

    def __xor__(self, other: "BitVec") -> "BitVec":
        if not isinstance(other, BitVec):
            return NotImplemented
        if other.n != self.n:
            raise ContractViolation(f"width mismatch: {self.n} vs {other.n}")
        return BitVec(self.n, self.value ^ other.value)

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True, order=True)
class TruthTable:
    """A k-ary Boolean operation as a packed 2^k-bit table."""

    arity: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.arity <= MAX_ARITY:
            raise ContractViolation(f"arity must be in 0..{MAX_ARITY}, got {self.arity}")
        if not 0 <= self.bits < 1 << (1 << self.arity):
            raise ContractViolation(f"table does not fit arity {self.arity}")

    @property
    def rows(self) -> int:
        return 1 << self.arity

    @classmethod
    def from_string(cls, table: str) -> "TruthTable":
        length = len(table)
        if length == 0 or length & (length - 1) or set(table) - {"0", "1"}:
            raise ContractViolation(f"not a truth table string: {table!r}")
        arity = length.bit_length() - 1
        bits = 0
        for row, ch in enumerate(table):
            if ch == "1":
                bits |= 1 << row
        return cls(arity, bits)

    @classmethod
    def from_function(cls, arity: int, fn: Callable[..., int]) -> "TruthTable":
        bits = 0
        for row in range(1 << arity):
            args = tuple((row >> (arity - 1 - i)) & 1 for i in range(arity))
            if fn(*args) & 1:
                bits |= 1 << row
        return cls(arity, bits)

    def to_string(self) -> str:
        return "".join(str((self.bits >> row) & 1) for row in range(self.rows))

    def to_json(self) -> dict:
        return {"arity": self.arity, "table": self.to_string()}

    @classmethod
    def from_json(cls, data: dict) -> "TruthTable":
        table = data["table"]
        tt = cls.from_string(table)
        if tt.arity != data["arity"]:
            raise ContractViolation(
                f"table length {len(table)} inconsistent with arity {data['arity']}"
            )
        return tt

    def __call__(self, *args: int) -> int:
        return eval_op(self, args)

    def __str__(self) -> str:
        return f"{self.arity}:{self.to_string()}"


def eval_op(op: TruthTable, args: Sequence[int]) -> int:
    """Look up the table row selected by args (first argument most significant)."""
    if len(args) != op.arity:
        raise ContractViolation(f"operation has arity {op.arity}, got {len(args)} arguments")
    idx = 0
    for a in args:
        if a not in (0, 1):
            raise ContractViolation(f"arguments must be bits, got {a!r}")
        idx = (idx << 1) | a
    return (op.bits >> idx) & 1


def _lift_packed(arity: int, bits: int, vals: Sequence[int], mask: int) -> int:
    """Apply a truth table coordinatewise to packed bit-vectors.

    Expands the table through its one-rows: for each row with output 1 the
    conjunction of (possibly complemented) argument vectors contributes its
    coordinates to the result.  Also serves as table composition, where the
    "coordinates" are the rows of the composed table.
    """
    if arity == 0:
        return mask if bits & 1 else 0
    out = 0
    for row in range(1 << arity):
        if not (bits >> row) & 1:
            continue
        acc = mask
        for i in range(arity):
            v = vals[i]
            if (row >> (arity - 1 - i)) & 1:
                acc &= v
            else:
                acc &= mask & ~v
            if not acc:
                break
        out |= acc
    return out


def lift_pointwise(op: TruthTable, args: Sequence[BitVec], n: int | None = None) -> BitVec:
    """Apply op coordinatewise to bit-vectors of common length.

    For 0-ary operations the target width cannot be inferred from the
    arguments, so it must be passed explicitly.
    """
    if len(args) != op.arity:
        raise ContractViolation(f"operation has arity {op.arity}, got {len(args)} arguments")
    widths = {a.n for a in args}
    if len(widths) > 1:
        raise ContractViolation(f"mixed widths: {sorted(widths)}")
    if widths:
        if n is not None and n not in widths:
            raise ContractViolation(f"declared width {n} does not match arguments")
        n = widths.pop()
    elif n is None:
        raise ContractViolation("0-ary lift needs an explicit width")
    mask = (1 << n) - 1
    return BitVec(n, _lift_packed(op.arity, op.bits, [a.value for a in args], mask))


# --- term expressions -------------------------------------------------------


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ContractViolation("variable index must be nonnegative")


@dataclass(frozen=True)
class Call:
    op: TruthTable
    args: tuple["Term", ...]

    def __post_init__(self) -> None:
        if len(self.args) != self.op.arity:
            raise ContractViolation(
                f"operation has arity {self.op.arity}, got {len(self.args)} subterms"
            )


Term = Union[Var, Call]


def eval_term(t: Term, env: Sequence[int]) -> int:
    if isinstance(t, Var):
        if t.index >= len(env):
            raise ContractViolation(f"unbound variable x{t.index}")
        v = env[t.index]
        if v not in (0, 1):
            raise ContractViolation(f"assignments must be bits, got {v!r}")
        return v
    return eval_op(t.op, [eval_term(a, env) for a in t.args])


def term_table(t: Term, arity: int) -> TruthTable:
    """Tabulate a term as an operation of the given arity."""
    return TruthTable.from_function(arity, lambda *args: eval_term(t, args))


def subst(t: Term, mapping: dict[int, Term]) -> Term:
    """Substitute terms for variables (variables absent from mapping are kept)."""
    if isinstance(t, Var):
        return mapping.get(t.index, t)
    return Call(t.op, tuple(subst(a, mapping) for a in t.args))


# --- the standard operation tables ------------------------------------------

CONST0 = TruthTable(0, 0)
CONST1 = TruthTable(0, 1)
NOT = TruthTable.from_function(1, lambda x: 1 - x)
AND = TruthTable.from_function(2, lambda x, y: x & y)
OR = TruthTable.from_function(2, lambda x, y: x | y)
XOR = TruthTable.from_function(2, lambda x, y: x ^ y)
IFF = TruthTable.from_function(2, lambda x, y: 1 - (x ^ y))
XOR3 = TruthTable.from_function(3, lambda x, y, z: x ^ y ^ z)
MAJ = TruthTable.from_function(3, lambda x, y, z: (x & y) | (x & z) | (y & z))
OR_AND3 = TruthTable.from_function(3, lambda x, y, z: x | (y & z))
AND_OR3 = TruthTable.from_function(3, lambda x, y, z: x & (y | z))
