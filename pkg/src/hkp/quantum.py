"""Exact statevector simulation of the two-register interference circuit.

The circuit prepares |0..0> on n+m qubits, applies H on the first register,
the oracle XOR-unitary, H on the first register again, and measures the
first register.  Pure-state simulation suffices: the measurement statistics
are the marginal of |amplitude|^2 over the second register, so no density
matrices are kept.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitvec import BitVec, ContractViolation, MAX_WIDTH
from .gf2 import Gf2Subspace, nullspace
from .oracle import HiddenOracle

NORM_TOL = 1e-12
DIST_TOL = 1e-9


@dataclass(frozen=True)
class QuantumState:
    """Amplitudes over n+m qubits; basis index is (x << m) | y."""

    n: int
    m: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        if self.n + self.m > MAX_WIDTH:
            raise ContractViolation(f"qubit count {self.n + self.m} exceeds {MAX_WIDTH}")
        if self.amps.shape != (1 << (self.n + self.m),):
            raise ContractViolation("amplitude vector has the wrong length")
        if abs(self.norm() - 1.0) > NORM_TOL:
            raise ContractViolation(f"state is not normalized: |a| = {self.norm()}")

    @classmethod
    def zero(cls, n: int, m: int) -> "QuantumState":
        amps = np.zeros(1 << (n + m), dtype=np.complex128)
        amps[0] = 1.0
        return cls(n, m, amps)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amps) ** 2)))

    def amplitude(self, x: int, y: int) -> complex:
        return complex(self.amps[(x << self.m) | y])


def apply_hadamard_first_register(state: QuantumState) -> QuantumState:
    """H on each of the first n qubits, identity on the rest."""
    n, m = state.n, state.m
    v = state.amps.reshape(1 << n, 1 << m).copy()
    h = 1
    while h < 1 << n:
        v = v.reshape(-1, 2 * h, 1 << m)
        top = v[:, :h, :].copy()
        bot = v[:, h:, :].copy()
        v[:, :h, :] = top + bot
        v[:, h:, :] = top - bot
        v = v.reshape(1 << n, 1 << m)
        h *= 2
    v = v * 2 ** (-n / 2)
    return QuantumState(n, m, v.reshape(-1))


def apply_oracle_unitary(state: QuantumState, oracle: HiddenOracle) -> QuantumState:
    """The permutation |x,y> -> |x, y XOR phi(x)>; bills one oracle query."""
    if state.n != oracle.n or state.m != oracle.m:
        raise ContractViolation(
            f"state registers ({state.n},{state.m}) do not match oracle "
            f"({oracle.n},{oracle.m})"
        )
    n, m = state.n, state.m
    table = np.fromiter(oracle.codeword_table(), dtype=np.int64, count=1 << n)
    oracle.charge(1)
    idx = np.arange(1 << (n + m), dtype=np.int64)
    x = idx >> m
    y = idx & ((1 << m) - 1)
    src = (x << m) | (y ^ table[x])
    return QuantumState(n, m, state.amps[src])


@dataclass(frozen=True)
class OutcomeDistribution:
    """Exact first-register measurement probabilities."""

    n: int
    probs: np.ndarray

    def __post_init__(self) -> None:
        if self.probs.shape != (1 << self.n,):
            raise ContractViolation("probability vector has the wrong length")
        if np.any(self.probs < -DIST_TOL) or abs(float(self.probs.sum()) - 1.0) > DIST_TOL:
            raise ContractViolation("probabilities must be nonnegative and sum to 1")

    def prob(self, x: "BitVec | int") -> float:
        value = x.value if isinstance(x, BitVec) else x
        return float(self.probs[value])

    def support(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.nonzero(self.probs > DIST_TOL)[0])

    def as_dict(self, eps: float = 1e-12) -> dict[str, float]:
        return {
            format(x, f"0{self.n}b"): float(p)
            for x, p in enumerate(self.probs)
            if p > eps
        }

    def sample(self, rng: np.random.Generator, count: int) -> list[BitVec]:
        p = np.clip(self.probs, 0.0, None)
        p = p / p.sum()
        draws = rng.choice(1 << self.n, size=count, p=p)
        return [BitVec(self.n, int(d)) for d in draws]


def simon_distribution(oracle: HiddenOracle) -> OutcomeDistribution:
    """Run the circuit once and return the exact first-register marginal."""
    state = QuantumState.zero(oracle.n, oracle.m)
    state = apply_hadamard_first_register(state)
    state = apply_oracle_unitary(state, oracle)
    state = apply_hadamard_first_register(state)
    probs = (np.abs(state.amps) ** 2).reshape(1 << oracle.n, 1 << oracle.m).sum(axis=1)
    return OutcomeDistribution(oracle.n, probs)


def simon_sample(oracle: HiddenOracle, seed: int, count: int) -> list[BitVec]:
    """I.i.d. outcomes of repeated circuit executions; one query each.

    The pre-measurement state is identical across executions, so the
    distribution is computed once and the remaining executions are billed
    directly.
    """
    if count <= 0:
        return []
    dist = simon_distribution(oracle)
    oracle.charge(count - 1)
    rng = np.random.default_rng(seed)
    return dist.sample(rng, count)


def uniform_on_dual(zero_block_span: Gf2Subspace) -> OutcomeDistribution:
    """Closed-form prediction: uniform over the annihilator of the 0-block."""
    n = zero_block_span.width
    dual = nullspace(zero_block_span)
    probs = np.zeros(1 << n)
    weight = 1.0 / len(dual)
    for v in dual.elements():
        probs[v] = weight
    return OutcomeDistribution(n, probs)
