"""Congruences of powers of 2-element algebras.

A congruence is stored as a canonical partition of {0,1}^n: entry x of
``block_of`` is the least element of x's block.  Generated congruences are
computed by union-find closure under the basic unary translations
f(c_1,..,x,..,c_m) of the generators; chaining one-argument substitutions
through transitivity recovers full compatibility, so this closure is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .bitvec import BitVec, ContractViolation, _lift_packed
from .clones import GeneratorSet
from .gf2 import Gf2Subspace, row_reduce

PairLike = tuple["BitVec | int", "BitVec | int"]

_TRANSLATION_BUDGET = 500_000  # unary translation maps kept per (gens, n)


@dataclass(frozen=True, order=True)
class Congruence:
    """A partition of {0,1}^n, blocks labeled by their least member."""

    n: int
    block_of: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.block_of) != 1 << self.n:
            raise ContractViolation(
                f"partition has {len(self.block_of)} entries, expected {1 << self.n}"
            )
        for x, label in enumerate(self.block_of):
            if label > x or self.block_of[label] != label:
                raise ContractViolation("blocks must be labeled by their least member")

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def universal(cls, n: int) -> "Congruence":
        return cls(n, (0,) * (1 << n))

    @classmethod
    def from_labels(cls, n: int, labels: Sequence[int]) -> "Congruence":
        """Canonicalize an arbitrary consistent labeling to least-member labels."""
        least: dict[int, int] = {}
        for x, lab in enumerate(labels):
            least.setdefault(lab, x)
        return cls(n, tuple(least[lab] for lab in labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        labels = [-1] * (1 << n)
        for block in blocks:
            members = sorted(block)
            for x in members:
                if not 0 <= x < 1 << n or labels[x] != -1:
                    raise ContractViolation("blocks must partition the domain")
                labels[x] = members[0]
        if -1 in labels:
            raise ContractViolation("blocks must cover the domain")
        return cls(n, tuple(labels))

    def relates(self, x: "BitVec | int", y: "BitVec | int") -> bool:
        return self.block_of[_as_element(x, self.n)] == self.block_of[_as_element(y, self.n)]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        by_label: dict[int, list[int]] = {}
        for x, lab in enumerate(self.block_of):
            by_label.setdefault(lab, []).append(x)
        return tuple(tuple(by_label[lab]) for lab in sorted(by_label))

    def block_count(self) -> int:
        return len(set(self.block_of))

    def related_pairs(self) -> list[tuple[int, int]]:
        """All (a, b) with a < b in a common block."""
        out = []
        for block in self.blocks():
            for i, a in enumerate(block):
                for b in block[i + 1 :]:
                    out.append((a, b))
        return out

    def refines(self, other: "Congruence") -> bool:
        """Whether every block of self lies inside a block of other."""
        if other.n != self.n:
            raise ContractViolation(f"width mismatch: {self.n} vs {other.n}")
        ob = other.block_of
        return all(ob[x] == ob[lab] for x, lab in enumerate(self.block_of))

    def meet(self, other: "Congruence") -> "Congruence":
        if other.n != self.n:
            raise ContractViolation(f"width mismatch: {self.n} vs {other.n}")
        pairs = list(zip(self.block_of, other.block_of))
        least: dict[tuple[int, int], int] = {}
        for x, key in enumerate(pairs):
            least.setdefault(key, x)
        return Congruence(self.n, tuple(least[key] for key in pairs))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blocks": [
                [format(x, f"0{self.n}b") for x in block] for block in self.blocks()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Congruence":
        n = data["n"]
        blocks = [[int(s, 2) for s in block] for block in data["blocks"]]
        for block in data["blocks"]:
            for s in block:
                if len(s) != n or set(s) - {"0", "1"}:
                    raise ContractViolation(f"bad element string {s!r} for width {n}")
        return cls.from_blocks(n, blocks)


def _as_element(x: "BitVec | int", n: int) -> int:
    if isinstance(x, BitVec):
        if x.n != n:
            raise ContractViolation(f"width mismatch: element has {x.n} bits, ambient {n}")
        return x.value
    if not 0 <= x < 1 << n:
        raise ContractViolation(f"element {x} does not fit in {n} bits")
    return x


# --- translation closure ------------------------------------------------------


@lru_cache(maxsize=128)
def _translation_maps(gens: GeneratorSet, n: int) -> tuple[tuple[int, ...], ...]:
    """Every unary map x -> f(c_1,..,x,..,c_{m-1}) over the generators.

    Identity maps are dropped and duplicates merged; the identity argument
    (one substitution per step, chained by transitivity) makes closure under
    these maps equivalent to closure under all term translations.
    """
    size = 1 << n
    mask = size - 1
    cost = sum(g.arity * size ** (g.arity - 1) for g in gens if g.arity >= 1)
    if cost * size > _TRANSLATION_BUDGET * 16:
        raise ContractViolation(f"power {n} too large for generator arities")
    identity = tuple(range(size))
    maps: dict[tuple[int, ...], None] = {}
    for g in gens:
        m = g.arity
        if m == 0:
            continue
        for j in range(m):
            for consts in itertools.product(range(size), repeat=m - 1):
                row = tuple(
                    _lift_packed(m, g.bits, consts[:j] + (x,) + consts[j:], mask)
                    for x in range(size)
                )
                if row != identity:
                    maps.setdefault(row, None)
    return tuple(maps)


def is_congruence(p: Congruence, gens: GeneratorSet) -> bool:
    """Compatibility of a partition with every lifted generator, exhaustively."""
    maps = _translation_maps(gens, p.n)
    bo = p.block_of
    pairs = [(lab, x) for x, lab in enumerate(bo) if lab != x]
    for t in maps:
        for a, b in pairs:
            if bo[t[a]] != bo[t[b]]:
                return False
    return True


def cg(pairs: Iterable[PairLike], gens: GeneratorSet, n: int) -> Congruence:
    """Least congruence of the gens-power algebra containing the given pairs."""
    size = 1 << n
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    maps = _translation_maps(gens, n)
    work = [(_as_element(a, n), _as_element(b, n)) for a, b in pairs]
    while work:
        a, b = work.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for t in maps:
            ta, tb = t[a], t[b]
            if find(ta) != find(tb):
                work.append((ta, tb))
    least: dict[int, int] = {}
    labels = []
    for x in range(size):
        r = find(x)
        least.setdefault(r, x)
        labels.append(least[r])
    return Congruence(n, tuple(labels))


def join(t1: Congruence, t2: Congruence, gens: GeneratorSet) -> Congruence:
    """Lattice join: the generated congruence of the union of both relations."""
    if t1.n != t2.n:
        raise ContractViolation(f"width mismatch: {t1.n} vs {t2.n}")
    if t1.refines(t2):
        return t2
    if t2.refines(t1):
        return t1
    seeds = [(lab, x) for bo in (t1.block_of, t2.block_of) for x, lab in enumerate(bo) if lab != x]
    return cg(seeds, gens, t1.n)


@lru_cache(maxsize=64)
def enumerate_congruences(gens: GeneratorSet, n: int) -> tuple[Congruence, ...]:
    """The full congruence lattice of the gens-power algebra.

    Principal congruences of all element pairs, closed under pairwise join,
    plus the identity; complete because every congruence is the join of the
    principal congruences of its pairs.
    """
    if n > 4:
        raise ContractViolation("congruence enumeration supported for n <= 4")
    size = 1 << n
    found: set[Congruence] = {Congruence.identity(n)}
    principals = {
        cg([(a, b)], gens, n) for a in range(size) for b in range(a + 1, size)
    }
    found |= principals
    frontier = list(principals)
    while frontier:
        fresh: list[Congruence] = []
        snapshot = list(found)
        for t1 in frontier:
            for t2 in snapshot:
                j = join(t1, t2, gens)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    return tuple(sorted(found, key=lambda c: c.block_of))


def min_generating_pairs(
    theta: Congruence, gens: GeneratorSet, budget: int = 3
) -> int | None:
    """Smallest k <= budget with cg(some k-subset of theta) = theta, else None."""
    if theta.n > 4:
        raise ContractViolation("minimal generator search supported for n <= 4")
    if budget > 3:
        raise ContractViolation("search budget capped at 3 pairs")
    related = theta.related_pairs()
    for k in range(budget + 1):
        for combo in itertools.combinations(related, k):
            if cg(combo, gens, theta.n) == theta:
                return k
    return None


# --- power-of-Z2 congruences --------------------------------------------------


def zero_block(theta: Congruence) -> tuple[int, ...]:
    """Members of the block containing the all-zeros element."""
    return tuple(x for x, lab in enumerate(theta.block_of) if lab == 0)


def is_xor_congruence(theta: Congruence) -> bool:
    """Whether the blocks are exactly the cosets of a subspace of F2^n."""
    members = zero_block(theta)
    span = row_reduce(members, theta.n)
    if len(span) != len(members):
        return False
    bo = theta.block_of
    size = 1 << theta.n
    for h in span.basis:
        if any(bo[x ^ h] != bo[x] for x in range(size)):
            return False
    return all(len(block) == len(members) for block in theta.blocks())


def congruence_of_subspace(sub: Gf2Subspace, n: int) -> Congruence:
    """The coset partition of a subspace of F2^n."""
    if sub.width != n:
        raise ContractViolation(f"subspace width {sub.width} does not match n={n}")
    size = 1 << n
    members = list(sub.elements())
    labels = [-1] * size
    for x in range(size):
        if labels[x] == -1:
            for h in members:
                labels[x ^ h] = x
    return Congruence(n, tuple(labels))


def subspace_of_congruence(theta: Congruence) -> Gf2Subspace:
    if not is_xor_congruence(theta):
        raise ContractViolation("partition is not a coset partition of a subspace")
    return row_reduce(zero_block(theta), theta.n)
