"""Query-counting oracles hiding a congruence behind a homomorphism.

The oracle realizes a map phi on {0,1}^n whose kernel (pairs with equal
values) is exactly a chosen congruence.  Solvers may only call ``query`` or
the reversible view; the hidden congruence itself is sealed behind a
verification-only accessor so solver code cannot cheat.
"""

from __future__ import annotations

import csv
import threading
from typing import Callable, IO

from .bitvec import BitVec, ContractViolation
from .clones import GeneratorSet
from .congruence import Congruence, is_congruence


class HiddenOracle:
    """Black box for a homomorphism with a chosen kernel; counts every query."""

    def __init__(self, hidden: Congruence, codeword: tuple[int, ...], m: int) -> None:
        self.n = hidden.n
        self.m = m
        self._codeword = codeword
        self._hidden = hidden
        self._queries = 0
        self._transcript: list[tuple[int, int]] = []
        self._lock = threading.Lock()

    @property
    def query_count(self) -> int:
        return self._queries

    def charge(self, k: int = 1) -> None:
        """Bill k oracle uses (one per circuit execution in the quantum model)."""
        if k < 0:
            raise ContractViolation("cannot charge a negative number of queries")
        with self._lock:
            self._queries += k

    def query(self, x: BitVec) -> BitVec:
        if x.n != self.n:
            raise ContractViolation(f"query width {x.n} does not match oracle width {self.n}")
        with self._lock:
            self._queries += 1
            value = self._codeword[x.value]
            self._transcript.append((x.value, value))
        return BitVec(self.m, value)

    def reversible_view(self) -> Callable[[BitVec, BitVec], tuple[BitVec, BitVec]]:
        """The XOR-on-second-register involution; each evaluation is one query."""

        def apply(x: BitVec, y: BitVec) -> tuple[BitVec, BitVec]:
            if x.n != self.n or y.n != self.m:
                raise ContractViolation(
                    f"register widths ({x.n},{y.n}) do not match oracle ({self.n},{self.m})"
                )
            self.charge(1)
            return x, BitVec(self.m, y.value ^ self._codeword[x.value])

        return apply

    def codeword_table(self) -> tuple[int, ...]:
        """The full value table, for building the oracle unitary.

        Reading the table is what one application of the unitary acts by;
        callers must bill that application through ``charge``.
        """
        return self._codeword

    def transcript(self) -> list[tuple[int, int]]:
        return list(self._transcript)


def make_hidden_oracle(theta: Congruence, gens: GeneratorSet | None = None) -> HiddenOracle:
    """Build the oracle whose kernel is theta.

    Blocks sorted by least member receive consecutive codewords starting at
    0.  When a generator set is supplied, theta is checked to actually be a
    congruence of that power algebra.
    """
    if gens is not None and not is_congruence(theta, gens):
        raise ContractViolation("partition is not a congruence of the given algebra")
    blocks = theta.blocks()
    m = max(1, (len(blocks) - 1).bit_length())
    codeword = [0] * (1 << theta.n)
    for index, block in enumerate(blocks):
        for x in block:
            codeword[x] = index
    return HiddenOracle(theta, tuple(codeword), m)


def hidden_congruence_for_verification(oracle: HiddenOracle) -> Congruence:
    """Unseal the hidden congruence.  Test harnesses only; never solver code."""
    return oracle._hidden


def export_transcript_csv(oracle: HiddenOracle, out: IO[str]) -> None:
    """Write the ordered (x, phi(x)) pairs of all classical queries."""
    writer = csv.writer(out)
    writer.writerow(["x", "phi"])
    for x, value in oracle.transcript():
        writer.writerow([format(x, f"0{oracle.n}b"), format(value, f"0{oracle.m}b")])
