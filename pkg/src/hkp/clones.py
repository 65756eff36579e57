"""Boolean clones: closure of generator sets, comparison, catalog, classification.

Clone membership on the 2-element domain is decided by arity-bounded
closure: the k-ary part of the clone generated by F is the least set of
2^k-bit value tables containing the projections (and constants supplied by
0-ary generators) that is closed under composition with the generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .bitvec import (
    AND,
    AND_OR3,
    CONST0,
    CONST1,
    IFF,
    MAJ,
    MAX_ARITY,
    NOT,
    OR,
    OR_AND3,
    XOR,
    XOR3,
    Call,
    ContractViolation,
    Term,
    TruthTable,
    Var,
    _lift_packed,
    subst,
    term_table,
)


@dataclass(frozen=True)
class GeneratorSet:
    """A finite set of truth tables generating a clone."""

    ops: frozenset[TruthTable]

    def __post_init__(self) -> None:
        for op in self.ops:
            if op.arity > MAX_ARITY:
                raise ContractViolation(f"generator arity {op.arity} exceeds {MAX_ARITY}")

    @classmethod
    def of(cls, *ops: TruthTable) -> "GeneratorSet":
        return cls(frozenset(ops))

    def sorted_ops(self) -> list[TruthTable]:
        return sorted(self.ops)

    def __iter__(self) -> Iterator[TruthTable]:
        return iter(self.sorted_ops())

    def __len__(self) -> int:
        return len(self.ops)

    def __contains__(self, op: TruthTable) -> bool:
        return op in self.ops

    def to_json(self) -> list[dict]:
        return [op.to_json() for op in self]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "GeneratorSet":
        return cls(frozenset(TruthTable.from_json(d) for d in data))


# --- the labeled clones of the 2-element lattice ------------------------------

_NAMED: dict[str, tuple[TruthTable, ...]] = {
    "BOT": (),
    "MEET": (AND, CONST0, CONST1),
    "JOIN": (OR, CONST0, CONST1),
    "U": (NOT, CONST0),
    "MPT0": (OR_AND3,),
    "MPT1": (AND_OR3,),
    "AP": (XOR3,),
    "AP0": (XOR,),
    "A": (IFF, CONST0),
    "DM": (MAJ,),
    "TOP": (OR, NOT),
}

NAMED_CLONE_IDS: tuple[str, ...] = tuple(_NAMED)


def named_clone(clone_id: str) -> GeneratorSet:
    try:
        return GeneratorSet(frozenset(_NAMED[clone_id]))
    except KeyError:
        raise ContractViolation(
            f"unknown clone id {clone_id!r}; expected one of {', '.join(NAMED_CLONE_IDS)}"
        ) from None


# --- closure engine -----------------------------------------------------------


def _proj_bits(k: int) -> list[int]:
    tables = []
    for i in range(k):
        bits = 0
        for row in range(1 << k):
            if (row >> (k - 1 - i)) & 1:
                bits |= 1 << row
        tables.append(bits)
    return tables


def _gens_key(gens: GeneratorSet) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((g.arity, g.bits) for g in gens.ops))


_FULL_CLOSURES: dict[tuple, frozenset[int]] = {}


def _closure_bits(
    gens: GeneratorSet, k: int, targets: frozenset[int] | None = None
) -> tuple[frozenset[int], bool]:
    """k-ary members of the generated clone as packed tables.

    With targets given, stops as soon as every target has appeared; the
    second component tells whether the returned set is the full closure.
    """
    key = (_gens_key(gens), k)
    cached = _FULL_CLOSURES.get(key)
    if cached is not None:
        return cached, True

    mask = (1 << (1 << k)) - 1
    current: set[int] = set(_proj_bits(k))
    for g in gens:
        if g.arity == 0:
            current.add(mask if g.bits & 1 else 0)
    remaining = set(targets) - current if targets is not None else None
    if remaining is not None and not remaining:
        return frozenset(current), False

    ops = [(g.arity, g.bits) for g in gens if g.arity >= 1]
    frontier = list(current)
    while frontier:
        fresh: set[int] = set()
        members = list(current)
        for arity, bits in ops:
            for j in range(arity):
                pools = [frontier if i == j else members for i in range(arity)]
                for parts in itertools.product(*pools):
                    h = _lift_packed(arity, bits, parts, mask)
                    if h in current or h in fresh:
                        continue
                    fresh.add(h)
                    if remaining is not None:
                        remaining.discard(h)
                        if not remaining:
                            return frozenset(current | fresh), False
        if not fresh:
            break
        current |= fresh
        frontier = list(fresh)

    result = frozenset(current)
    _FULL_CLOSURES[key] = result
    return result, True


def term_closure(gens: GeneratorSet, k: int) -> frozenset[TruthTable]:
    """All k-ary operations of the clone generated by gens."""
    if not 0 <= k <= MAX_ARITY:
        raise ContractViolation(f"arity must be in 0..{MAX_ARITY}, got {k}")
    bits, _ = _closure_bits(gens, k)
    return frozenset(TruthTable(k, b) for b in bits)


_UNARY_CONST = {0: 0b00, 1: 0b11}


def clone_leq(F: GeneratorSet, G: GeneratorSet) -> bool:
    """Whether the clone generated by F is contained in the one generated by G.

    0-ary constants are identified with their unary constant tables, so the
    comparison is insensitive to how a catalog models constants.
    """
    by_arity: dict[int, set[int]] = {}
    for f in F:
        if f.arity == 0:
            by_arity.setdefault(1, set()).add(_UNARY_CONST[f.bits & 1])
        else:
            by_arity.setdefault(f.arity, set()).add(f.bits)
    for k, wanted in sorted(by_arity.items()):
        closure, _ = _closure_bits(G, k, frozenset(wanted))
        if not wanted <= closure:
            return False
    return True


# --- Jonsson identities -------------------------------------------------------


def verify_jonsson(terms: Sequence[Term]) -> bool:
    """Check the chain of ternary distributivity identities on all 8 assignments.

    For terms J_1..J_{2m+1} the identities are J_1(x,x,y)=x, J_{2m+1}(x,y,y)=y,
    J_i(x,y,x)=x for every i, and the alternating gluings
    J_{2j-1}(x,y,y)=J_{2j}(x,y,y), J_{2j}(x,x,y)=J_{2j+1}(x,x,y) for j in 1..m.
    """
    J = list(terms)
    if len(J) % 2 == 0 or not J:
        raise ContractViolation(f"need an odd number of terms, got {len(J)}")
    m = (len(J) - 1) // 2
    x, y = Var(0), Var(1)

    def tbl(t: Term) -> TruthTable:
        return term_table(t, 3)

    xxy = {0: x, 1: x, 2: y}
    xyy = {0: x, 1: y, 2: y}
    xyx = {0: x, 1: y, 2: x}

    if tbl(subst(J[0], xxy)) != tbl(x):
        return False
    if tbl(subst(J[-1], xyy)) != tbl(y):
        return False
    for t in J:
        if tbl(subst(t, xyx)) != tbl(x):
            return False
    for j in range(1, m + 1):
        if tbl(subst(J[2 * j - 2], xyy)) != tbl(subst(J[2 * j - 1], xyy)):
            return False
        if tbl(subst(J[2 * j - 1], xxy)) != tbl(subst(J[2 * j], xxy)):
            return False
    return True


_X, _Y, _Z = Var(0), Var(1), Var(2)


def jonsson_terms(witness: str) -> tuple[Term, ...]:
    """A term chain witnessing distributivity for each tractable-dispatch anchor.

    Each chain is built from operations available in the named clone, so its
    members all lie in that clone's ternary part.
    """
    if witness == "DM":
        return (Call(MAJ, (_X, _Y, _Z)),)
    if witness == "MPT0":
        return (
            Call(OR_AND3, (_X, _Y, _Z)),
            Call(OR_AND3, (_X, _Z, _Z)),
            Call(OR_AND3, (_Z, _X, _Y)),
        )
    if witness == "MPT1":
        return (
            Call(AND_OR3, (_X, _Y, _Z)),
            Call(AND_OR3, (_X, _Z, _Z)),
            Call(AND_OR3, (_Z, _X, _Y)),
        )
    raise ContractViolation(f"no term chain catalogued for witness {witness!r}")


# --- classification -----------------------------------------------------------


class Tractability(Enum):
    BOTH_POLY = "BothPoly"
    QUANTUM_ONLY = "QuantumOnlySpeedup"
    INTRACTABLE = "Intractable"


@dataclass(frozen=True)
class ClassificationCase:
    case: Tractability
    witnesses: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.witnesses:
            raise ContractViolation("a classification must carry at least one witness")

    def to_json(self) -> dict:
        return {"case": self.case.value, "witnesses": list(self.witnesses)}


class UnclassifiedCloneError(Exception):
    """No classification case matched; surfaced instead of guessing."""

    def __init__(self, gens: GeneratorSet) -> None:
        super().__init__(f"generator set fell outside every classification case: {gens}")
        self.gens = gens


def classify(gens: GeneratorSet) -> ClassificationCase:
    """Three-way tractability of the hidden kernel problem on powers of gens.

    Tests run in a fixed order so clones lying in several intervals get the
    strongest label: solvable both ways, then quantum-only, then intractable.
    """
    upward = [w for w in ("MPT0", "MPT1", "DM") if clone_leq(named_clone(w), gens)]
    if upward:
        return ClassificationCase(
            Tractability.BOTH_POLY, tuple(f"{w}<=gens" for w in upward)
        )
    if clone_leq(named_clone("AP"), gens) and clone_leq(gens, named_clone("A")):
        return ClassificationCase(Tractability.QUANTUM_ONLY, ("AP<=gens", "gens<=A"))
    downward = [w for w in ("MEET", "JOIN", "U") if clone_leq(gens, named_clone(w))]
    if downward:
        return ClassificationCase(
            Tractability.INTRACTABLE, tuple(f"gens<={w}" for w in downward)
        )
    raise UnclassifiedCloneError(gens)
