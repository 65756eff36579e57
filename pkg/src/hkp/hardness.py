"""Constructions behind the exponential lower bounds, at desk scale.

The three congruence families (antichain-generated in the meet algebra,
single-XOR-shift in the biconditional algebra, paired-negation in the
negation algebra) are built as executable generators, and the collision
experiment measures how often a bounded probe set distinguishes a random
XOR-shift kernel from the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .bitvec import BitVec, ContractViolation
from .clones import GeneratorSet, named_clone
from .congruence import Congruence, cg, congruence_of_subspace
from .gf2 import random_subspace
from .oracle import make_hidden_oracle
from .solvers import solve_exhaustive, solve_simon


@dataclass(frozen=True)
class Antichain:
    """Pairwise order-incomparable points of {0,1}^n."""

    n: int
    members: tuple[int, ...]


def middle_layer(n: int) -> Antichain:
    """All points with exactly floor(n/2) zero coordinates."""
    if not 2 <= n <= 16:
        raise ContractViolation(f"middle layer supported for n in 2..16, got {n}")
    ones = n - n // 2
    members = tuple(x for x in range(1 << n) if x.bit_count() == ones)
    return Antichain(n, members)


def stirling_middle_estimate(n: int) -> float:
    """The 2^n / sqrt(n) growth estimate for the middle layer (report only)."""
    return 2.0**n / math.sqrt(n)


def theta_Z(Z: Sequence[int], n: int) -> Congruence:
    """Congruence generated by collapsing an antichain subset, in the meet algebra."""
    if n > 4:
        raise ContractViolation("antichain congruences supported for n <= 4")
    layer = set(middle_layer(n).members)
    zs = sorted(set(Z))
    if not set(zs) <= layer:
        raise ContractViolation("generating set must lie inside the middle layer")
    pairs = [(a, b) for a, b in combinations(zs, 2)]
    return cg(pairs, named_clone("MEET"), n)


def theta_z_xor(z: "BitVec | int", n: int) -> Congruence:
    """Partition into pairs {x, x XOR z}; the kernel hiding a single shift."""
    value = z.value if isinstance(z, BitVec) else z
    if isinstance(z, BitVec) and z.n != n:
        raise ContractViolation(f"shift width {z.n} does not match n={n}")
    if not 0 < value < 1 << n:
        raise ContractViolation("shift must be a nonzero element of the domain")
    return Congruence(n, tuple(min(x, x ^ value) for x in range(1 << n)))


def negation_pairing(n: int) -> tuple[tuple[int, int], ...]:
    """The canonical matched pairs (a_i, b_i) used by the negation family.

    Points with first coordinate 0, ordered by value: the first half are the
    a_i, the second half the b_i, matched by rank.
    """
    if n < 2:
        raise ContractViolation("the four-set partition needs n >= 2")
    quarter = 1 << (n - 2)
    return tuple((i, quarter + i) for i in range(quarter))


def theta_Y_neg(Y: Sequence[tuple[int, int]], n: int) -> Congruence:
    """Congruence pairing chosen (a_i, b_i) and their complements, else identity."""
    pairing = negation_pairing(n)
    chosen = set(Y)
    if not chosen <= set(pairing):
        raise ContractViolation("pairs must come from the canonical pairing")
    full = (1 << n) - 1
    labels = list(range(1 << n))
    for a, b in sorted(chosen):
        labels[b] = a
        labels[full ^ a] = min(full ^ a, full ^ b)
        labels[full ^ b] = min(full ^ a, full ^ b)
    return Congruence(n, tuple(labels))


# --- collision experiment -----------------------------------------------------


@dataclass(frozen=True)
class CollisionStats:
    """Observed vs predicted probability that a probe set reveals the shift."""

    n: int
    probe_count: int
    trials: int
    empirical_success: float
    predicted: float
    strategy: str
    seed: int

    def sigma(self) -> float:
        return math.sqrt(self.predicted * (1.0 - self.predicted) / self.trials)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "probe_count": self.probe_count,
            "trials": self.trials,
            "empirical_success": self.empirical_success,
            "predicted": self.predicted,
            "sigma": self.sigma(),
            "strategy": self.strategy,
            "seed": self.seed,
        }


def _gf16_mul(a: int, b: int) -> int:
    # carry-less product reduced by x^4 + x + 1
    p = 0
    while b:
        if b & 1:
            p ^= a
        a <<= 1
        if a & 0x10:
            a ^= 0x13
        b >>= 1
    return p


def _cube_probe_base() -> list[int]:
    # (x, x^3) over the 16-element field: any two distinct pairs have
    # distinct XOR, so every pairwise probe sum is unique
    return [(x << 4) | _gf16_mul(x, _gf16_mul(x, x)) for x in range(16)]


def sum_distinct_probes(n: int, k: int, seed: int = 0) -> list[int]:
    """k probes whose pairwise XORs are all distinct (the adversary's plan).

    With distinct pairwise sums the chance a uniform nonzero shift is
    revealed is exactly C(k,2)/(2^n - 1).  For n >= 8, k <= 16 the field
    construction is used; otherwise a seeded greedy search.
    """
    if k > 1 << n:
        raise ContractViolation("more probes than domain elements")
    if k <= 1:
        return list(range(k))
    if n >= 8 and k <= 16:
        return _cube_probe_base()[:k]
    rng = np.random.default_rng(seed)
    for _ in range(200):
        order = rng.permutation(1 << n)
        chosen: list[int] = []
        sums: set[int] = set()
        for x in map(int, order):
            new = {x ^ e for e in chosen}
            if len(new) == len(chosen) and not new & sums:
                chosen.append(x)
                sums |= new
                if len(chosen) == k:
                    return sorted(chosen)
    raise ContractViolation(f"no {k} sum-distinct probes found in width {n}")


def collision_experiment(
    n: int,
    probe_count: int,
    trials: int,
    seed: int,
    probe_strategy: str = "distinct-random",
) -> CollisionStats:
    """Estimate the probability that probing reveals a random XOR-shift kernel.

    Each trial draws a nonzero shift, hides its pair partition behind an
    oracle, evaluates the oracle on the probe set, and records whether two
    probes collided.  The prediction C(|E|,2)/(2^n - 1) counts probe pairs;
    it is exact when all pairwise probe sums are distinct, which the
    adversarial-sequential strategy guarantees.
    """
    if probe_strategy not in ("distinct-random", "adversarial-sequential"):
        raise ContractViolation(f"unknown probe strategy {probe_strategy!r}")
    if not 1 <= probe_count <= 1 << n:
        raise ContractViolation("probe count must be between 1 and 2^n")
    if trials < 1:
        raise ContractViolation("need at least one trial")
    rng = np.random.default_rng(seed)
    size = 1 << n
    fixed_probes: list[int] | None = None
    if probe_count == size:
        fixed_probes = list(range(size))
    elif probe_strategy == "adversarial-sequential":
        fixed_probes = sum_distinct_probes(n, probe_count, seed)

    hits = 0
    for _ in range(trials):
        z = int(rng.integers(1, size))
        oracle = make_hidden_oracle(theta_z_xor(z, n))
        if fixed_probes is not None:
            probes = fixed_probes
        else:
            probes = [int(x) for x in rng.choice(size, size=probe_count, replace=False)]
        values = {oracle.query(BitVec(n, x)).value for x in probes}
        if len(values) < probe_count:
            hits += 1
    predicted = probe_count * (probe_count - 1) / (2.0 * (size - 1))
    return CollisionStats(
        n=n,
        probe_count=probe_count,
        trials=trials,
        empirical_success=hits / trials,
        predicted=min(predicted, 1.0),
        strategy=probe_strategy,
        seed=seed,
    )


# --- the speedup exhibit ------------------------------------------------------


def speedup_table(
    n_values: Sequence[int], seed: int = 0, tau: int | None = None
) -> list[dict]:
    """Query counts of the circuit solver vs the exhaustive scan on XOR powers.

    For each n a random subspace kernel is hidden; the circuit solver runs
    with tau = 2^n (so 2n samples) against the 2^n-query scan.
    """
    rows = []
    for i, n in enumerate(n_values):
        rng = np.random.default_rng(seed + 1000 * i)
        theta = congruence_of_subspace(random_subspace(rng, n), n)
        quantum_oracle = make_hidden_oracle(theta)
        t = tau if tau is not None else 1 << n
        report = solve_simon(quantum_oracle, t, seed=seed + 1000 * i + 1)
        classical_oracle = make_hidden_oracle(theta)
        baseline = solve_exhaustive(classical_oracle)
        rows.append(
            {
                "n": n,
                "tau": t,
                "simon_queries": report.queries,
                "simon_succeeded": report.result == theta,
                "exhaustive_queries": baseline.queries,
                "exhaustive_exact": baseline.result == theta,
            }
        )
    return rows
