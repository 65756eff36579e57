"""Re-runnable verification batteries behind ``hkp verify``.

Each battery returns (name, ok, detail) tuples so the CLI can print one
line per fact.  The heavy statistical checks live in the test suite; these
are the exact, finite claims.
"""

from __future__ import annotations

import math
from itertools import combinations

from .bitvec import AND, AND_OR3, OR, OR_AND3, Call, Var
from .clones import GeneratorSet, jonsson_terms, named_clone, verify_jonsson
from .congruence import (
    Congruence,
    enumerate_congruences,
    is_congruence,
    is_xor_congruence,
)
from .gf2 import all_subspaces, character_sum, nullspace, perp_involution_check
from .hardness import middle_layer, negation_pairing, theta_Y_neg, theta_Z, cg

CheckResult = tuple[str, bool, str]


def check_simon_dual() -> list[CheckResult]:
    results: list[CheckResult] = []
    width = 4
    subspaces = all_subspaces(width)
    results.append(
        (f"subspace count width {width}", len(subspaces) == 67, f"{len(subspaces)} found")
    )
    dichotomy = True
    sizes = True
    involution = True
    for d in subspaces:
        dual = nullspace(d)
        sizes &= len(d) * len(dual) == 1 << width
        involution &= perp_involution_check(d)
        for g in range(1 << width):
            expected = len(d) if g in dual else 0
            dichotomy &= character_sum(d, g) == expected
    results.append(("character sum dichotomy", dichotomy, "all subspaces, all vectors"))
    results.append(("|D| * |D perp| = 2^w", sizes, "all subspaces"))
    results.append(("perp involution", involution, "all subspaces"))
    return results


def _projection_kernels(n: int) -> set[Congruence]:
    kernels = set()
    for bits in range(1 << n):
        mask = 0
        for i in range(n):
            if (bits >> i) & 1:
                mask |= 1 << i
        kernels.add(Congruence(n, tuple(x & mask for x in range(1 << n))))
    return kernels


def check_cd_projections() -> list[CheckResult]:
    results: list[CheckResult] = []
    for clone_id in ("DM", "MPT0"):
        gens = named_clone(clone_id)
        counts = []
        shape_ok = True
        for n in (1, 2, 3):
            cons = set(enumerate_congruences(gens, n))
            counts.append(len(cons))
            shape_ok &= cons == _projection_kernels(n)
        results.append(
            (
                f"{clone_id} power congruences are projection kernels",
                shape_ok and counts == [2, 4, 8],
                f"counts {counts} for n=1,2,3",
            )
        )
    return results


def check_ap_cong() -> list[CheckResult]:
    gens = named_clone("AP")
    counts = []
    all_xor = True
    for n in (1, 2, 3):
        cons = enumerate_congruences(gens, n)
        counts.append(len(cons))
        all_xor &= all(is_xor_congruence(theta) for theta in cons)
    return [
        (
            "ternary-sum power congruences are subspace cosets",
            all_xor and counts == [2, 5, 16],
            f"counts {counts} for n=1,2,3",
        )
    ]


def check_jonsson() -> list[CheckResult]:
    x, y, z = Var(0), Var(1), Var(2)
    meet_triple = (
        Call(AND_OR3, (x, y, z)),
        Call(AND, (x, z)),
        Call(AND_OR3, (z, x, y)),
    )
    join_triple = (
        Call(OR_AND3, (x, y, z)),
        Call(OR, (x, z)),
        Call(OR_AND3, (z, x, y)),
    )
    return [
        ("majority chain", verify_jonsson(jonsson_terms("DM")), "single-term chain"),
        ("meet-over-join triple", verify_jonsson(meet_triple), "3-term chain"),
        ("join-over-meet triple", verify_jonsson(join_triple), "3-term chain"),
        ("projection alone fails", not verify_jonsson((x,)), "negative control"),
    ]


def check_hardness() -> list[CheckResult]:
    results: list[CheckResult] = []

    layer_ok = all(
        len(middle_layer(n).members) == math.comb(n, n // 2) for n in range(2, 9)
    )
    results.append(("middle layer sizes", layer_ok, "n = 2..8"))

    incomparable = True
    for n in (2, 3, 4):
        members = middle_layer(n).members
        for a, b in combinations(members, 2):
            if a & b == a or a & b == b:
                incomparable = False
    results.append(("middle layer is an antichain", incomparable, "n = 2..4"))

    n = 4
    layer = middle_layer(n).members
    above_ok = True
    for Z in [layer[:2], layer[:3], (layer[0], layer[3])]:
        theta = theta_Z(Z, n)
        for zv in Z:
            for gamma in range(1 << n):
                if gamma != zv and gamma & zv == zv and theta.relates(zv, gamma):
                    above_ok = False
    results.append(
        ("collapsed antichain points relate to nothing above them", above_ok, "n = 4 samples")
    )

    neg_ok = True
    for n in (2, 3, 4):
        pairing = negation_pairing(n)
        seen = set()
        gens = named_clone("U")
        for r in range(len(pairing) + 1):
            for Y in combinations(pairing, r):
                theta = theta_Y_neg(Y, n)
                neg_ok &= is_congruence(theta, gens)
                neg_ok &= theta == cg(list(Y), gens, n)
                seen.add(theta)
        neg_ok &= len(seen) == 1 << len(pairing)
    results.append(
        ("negation family: distinct, compatible, generated", neg_ok, "n = 2..4, all subsets")
    )
    return results


SUITES = {
    "simon-dual": check_simon_dual,
    "cd-projections": check_cd_projections,
    "ap-cong": check_ap_cong,
    "jonsson": check_jonsson,
    "hardness": check_hardness,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        out: list[CheckResult] = []
        for suite in SUITES.values():
            out.extend(suite())
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
