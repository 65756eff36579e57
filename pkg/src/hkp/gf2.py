"""GF(2) linear algebra on bit-packed rows.

Rows are ints; bit positions follow the bitstring convention of
:mod:`hkp.bitvec` (coordinate 1 is the most significant bit of a
width-w row).  Subspaces are canonicalized to reduced row echelon form,
so structural equality is subspace equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .bitvec import BitVec, ContractViolation

MAX_GF2_WIDTH = 48  # pairs of width-24 vectors


def _as_row(v: "int | BitVec", width: int) -> int:
    if isinstance(v, BitVec):
        if v.n != width:
            raise ContractViolation(f"width mismatch: row has {v.n} bits, ambient is {width}")
        return v.value
    if not 0 <= v < 1 << width:
        raise ContractViolation(f"row {v} does not fit in width {width}")
    return v


def dot(a: int, b: int) -> int:
    """Dot product modulo 2 of two packed vectors."""
    return (a & b).bit_count() & 1


@dataclass(frozen=True, order=True)
class Gf2Subspace:
    """A subspace given by its reduced row echelon basis (pivots descending)."""

    width: int
    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.dim

    def reduce(self, v: "int | BitVec") -> int:
        """Residue of v after elimination against the basis (0 iff v in span)."""
        v = _as_row(v, self.width)
        for row in self.basis:
            pivot = row.bit_length() - 1
            if (v >> pivot) & 1:
                v ^= row
        return v

    def __contains__(self, v: "int | BitVec") -> bool:
        return self.reduce(v) == 0

    def elements(self) -> Iterator[int]:
        """All 2^dim members, in subset-of-basis order."""
        for picks in itertools.product((0, 1), repeat=self.dim):
            acc = 0
            for take, row in zip(picks, self.basis):
                if take:
                    acc ^= row
            yield acc


def row_reduce(rows: Iterable["int | BitVec"], width: int) -> Gf2Subspace:
    """Reduced row echelon span of the given rows."""
    if not 1 <= width <= MAX_GF2_WIDTH:
        raise ContractViolation(f"width must be in 1..{MAX_GF2_WIDTH}, got {width}")
    basis: list[int] = []
    for raw in rows:
        v = _as_row(raw, width)
        for row in basis:
            pivot = row.bit_length() - 1
            if (v >> pivot) & 1:
                v ^= row
        if v:
            basis.append(v)
    # back-substitute so each pivot appears in exactly one row
    basis.sort(reverse=True)
    for i, row in enumerate(basis):
        pivot = row.bit_length() - 1
        for j in range(i):
            if (basis[j] >> pivot) & 1:
                basis[j] ^= row
    return Gf2Subspace(width, tuple(sorted(basis, reverse=True)))


def nullspace(s: Gf2Subspace) -> Gf2Subspace:
    """Orthogonal complement: all v with v.b = 0 mod 2 for every basis row b."""
    w = s.width
    pivots = {row.bit_length() - 1 for row in s.basis}
    free = [p for p in range(w) if p not in pivots]
    gens = []
    for f in free:
        v = 1 << f
        for row in s.basis:
            pivot = row.bit_length() - 1
            if (row >> f) & 1:
                v |= 1 << pivot
        gens.append(v)
    return row_reduce(gens, w)


def perp_involution_check(s: Gf2Subspace) -> bool:
    return nullspace(nullspace(s)) == s


def character_sum(d: Gf2Subspace, g: "int | BitVec") -> int:
    """Sum of (-1)^(g.d) over all d in the subspace.

    Equals |D| when g annihilates every basis row and 0 otherwise; computed
    by enumeration, so it doubles as an independent check of that dichotomy.
    """
    if isinstance(g, BitVec) and g.n != d.width:
        raise ContractViolation(f"width mismatch: vector has {g.n} bits, subspace {d.width}")
    g = _as_row(g, d.width)
    total = 0
    for v in d.elements():
        total += 1 if dot(g, v) == 0 else -1
    return total


def all_subspaces(width: int) -> list[Gf2Subspace]:
    """Every subspace of F2^width, smallest dimensions first."""
    if not 1 <= width <= 6:
        raise ContractViolation("subspace enumeration supported for width 1..6")
    found = {row_reduce([], width)}
    frontier = list(found)
    while frontier:
        fresh = []
        for s in frontier:
            for v in range(1, 1 << width):
                if v in s:
                    continue
                t = row_reduce(s.basis + (v,), width)
                if t not in found:
                    found.add(t)
                    fresh.append(t)
        frontier = fresh
    return sorted(found, key=lambda s: (s.dim, s.basis))


def random_subspace(rng, width: int, max_dim: int | None = None) -> Gf2Subspace:
    """Span of uniformly random vectors (dimension count drawn uniformly)."""
    if max_dim is None:
        max_dim = width
    d = int(rng.integers(0, max_dim + 1))
    rows = [int(rng.integers(0, 1 << width)) for _ in range(d)]
    return row_reduce(rows, width)
