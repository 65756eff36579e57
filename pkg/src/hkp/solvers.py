"""Solution procedures for the hidden kernel problem, plus the dispatcher.

Three routes: sampling the interference circuit and solving a linear system
(valid whenever every hidden kernel is a coset partition of a subspace of
F2^n), the coordinate-probe procedure for congruence-distributive powers
(every kernel is a projection kernel), and the exhaustive scan used as the
classical baseline.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitvec import BitVec, ContractViolation
from .clones import ClassificationCase, GeneratorSet, Tractability, classify
from .congruence import Congruence, congruence_of_subspace
from .gf2 import nullspace, row_reduce
from .oracle import HiddenOracle
from .quantum import simon_sample

EXHAUSTIVE_MAX_N = 12


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve: the congruence found (if any) and the query bill."""

    method: str
    queries: int
    result: Congruence | None = None
    case: ClassificationCase | None = None
    samples: int | None = None
    success_target: float | None = None

    def to_json(self) -> dict:
        data: dict = {"method": self.method, "queries": self.queries}
        data["result"] = self.result.to_json() if self.result is not None else None
        if self.case is not None:
            data["classification"] = self.case.to_json()
        if self.samples is not None:
            data["samples"] = self.samples
        if self.success_target is not None:
            data["success_target"] = self.success_target
        return data


def _ceil_lg(tau: int) -> int:
    if tau < 1:
        raise ContractViolation(f"confidence parameter must be >= 1, got {tau}")
    return (tau - 1).bit_length()


def solve_simon(
    oracle: HiddenOracle,
    tau: int,
    *,
    seed: int = 0,
    case: ClassificationCase | None = None,
) -> SolveReport:
    """Circuit-sampling solver; succeeds with probability at least 1 - 1/tau.

    Draws n + ceil(lg tau) outcomes, spans them, and takes the annihilator
    of the span as the 0-block of the answer.  Requires the hidden kernel to
    be a coset partition of a subspace of F2^n, which the dispatcher
    guarantees.  No retries: callers repeat with a larger tau.
    """
    n = oracle.n
    k = n + _ceil_lg(tau)
    before = oracle.query_count
    outcomes = simon_sample(oracle, seed, k)
    span = row_reduce([v.value for v in outcomes], n)
    theta = congruence_of_subspace(nullspace(span), n)
    return SolveReport(
        method="simon",
        queries=oracle.query_count - before,
        result=theta,
        case=case,
        samples=k,
        success_target=1.0 - 1.0 / tau,
    )


def solve_cd(
    oracle: HiddenOracle, *, case: ClassificationCase | None = None
) -> SolveReport:
    """Coordinate-probe solver: exactly n+1 queries, always exact.

    Probes the all-zeros point, then each single-coordinate flip; the
    coordinates whose flip changes the answer index the projection whose
    kernel is returned.
    """
    n = oracle.n
    before = oracle.query_count
    base = oracle.query(BitVec(n, 0))
    mask = 0
    for i in range(n):
        if oracle.query(BitVec(n, 1 << (n - 1 - i))) != base:
            mask |= 1 << (n - 1 - i)
    theta = Congruence(n, tuple(x & mask for x in range(1 << n)))
    return SolveReport(
        method="cd", queries=oracle.query_count - before, result=theta, case=case
    )


def solve_exhaustive(
    oracle: HiddenOracle, *, case: ClassificationCase | None = None
) -> SolveReport:
    """Classical baseline: query every element and read the kernel off directly."""
    n = oracle.n
    if n > EXHAUSTIVE_MAX_N:
        raise ContractViolation(f"exhaustive scan capped at n <= {EXHAUSTIVE_MAX_N}")
    before = oracle.query_count
    values = [oracle.query(BitVec(n, x)).value for x in range(1 << n)]
    least: dict[int, int] = {}
    labels = []
    for x, v in enumerate(values):
        least.setdefault(v, x)
        labels.append(least[v])
    theta = Congruence(n, tuple(labels))
    return SolveReport(
        method="exhaustive", queries=oracle.query_count - before, result=theta, case=case
    )


def solve_hkp(
    gens: GeneratorSet,
    oracle: HiddenOracle,
    tau: int | None = None,
    *,
    seed: int = 0,
    exhaustive: bool = False,
) -> SolveReport:
    """Classify the algebra and dispatch to the matching solver.

    Intractable powers get a verdict report (no result) unless the
    exhaustive fallback is explicitly requested and n is small enough.
    """
    case = classify(gens)
    if case.case is Tractability.BOTH_POLY:
        return solve_cd(oracle, case=case)
    if case.case is Tractability.QUANTUM_ONLY:
        if tau is None:
            tau = 1 << oracle.n
        return solve_simon(oracle, tau, seed=seed, case=case)
    if exhaustive:
        return solve_exhaustive(oracle, case=case)
    return SolveReport(method="none", queries=0, result=None, case=case)
