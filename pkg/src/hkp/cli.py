"""Command-line entry point: classify, solve, simulate, enumerate, verify, experiment.

Reports are JSON with a stable key order; everything except the ``meta``
block is a pure function of the config, so two runs with the same flags are
byte-identical there.  The seed always appears in the config echo, and
HKP_SEED in the environment overrides --seed.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .bitvec import BitVec, ContractViolation
from .checks import SUITES, run_suite
from .clones import (
    GeneratorSet,
    NAMED_CLONE_IDS,
    Tractability,
    UnclassifiedCloneError,
    classify,
    named_clone,
)
from .congruence import Congruence, congruence_of_subspace, enumerate_congruences
from .gf2 import random_subspace
from .hardness import (
    collision_experiment,
    middle_layer,
    negation_pairing,
    speedup_table,
    theta_Y_neg,
    theta_Z,
    theta_z_xor,
)
from .oracle import make_hidden_oracle
from .quantum import simon_distribution, simon_sample
from .solvers import solve_hkp

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2
EXIT_UNSOLVED = 3

SCHEMA_VERSION = "v1"


def _resolve_seed(args: argparse.Namespace) -> int:
    env = os.environ.get("HKP_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ContractViolation(f"HKP_SEED must be an integer, got {env!r}") from None
    return getattr(args, "seed", 0)


def _parse_gens(args: argparse.Namespace) -> tuple[GeneratorSet, str]:
    if getattr(args, "clone", None):
        if args.clone not in NAMED_CLONE_IDS:
            raise ContractViolation(
                f"unknown clone id {args.clone!r}; expected one of {', '.join(NAMED_CLONE_IDS)}"
            )
        return named_clone(args.clone), args.clone
    raw = getattr(args, "gens", None)
    if not raw:
        raise ContractViolation("provide --clone ID or --gens JSON")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ContractViolation(f"malformed generator JSON: {exc}") from None
    if not isinstance(data, list):
        raise ContractViolation("generator JSON must be a list of truth tables")
    return GeneratorSet.from_json(data), "custom"


def _parse_hidden(spec: str, n: int, gens: GeneratorSet, seed: int) -> Congruence:
    if spec == "zero":
        return Congruence.identity(n)
    if spec == "one":
        return Congruence.universal(n)
    if spec.startswith("proj:"):
        coords = spec[len("proj:") :]
        mask = 0
        if coords:
            for part in coords.split(","):
                i = int(part)
                if not 1 <= i <= n:
                    raise ContractViolation(f"projection coordinate {i} out of 1..{n}")
                mask |= 1 << (n - i)
        return Congruence(n, tuple(x & mask for x in range(1 << n)))
    if spec.startswith("xor:"):
        return theta_z_xor(BitVec.from_string(spec[len("xor:") :]), n)
    if spec.startswith("random:"):
        return _random_hidden(n, gens, int(spec[len("random:") :]) + seed)
    path = Path(spec)
    if not path.is_file():
        raise ContractViolation(f"hidden-congruence file not found: {spec}")
    data = json.loads(path.read_text())
    theta = Congruence.from_json(data)
    if theta.n != n:
        raise ContractViolation(f"file congruence has n={theta.n}, expected {n}")
    return theta


def _random_hidden(n: int, gens: GeneratorSet, seed: int) -> Congruence:
    """Draw a hidden congruence of the gens-power algebra.

    Small powers draw uniformly from the full congruence lattice; larger
    powers draw from the construction family matching the classification
    (projection kernels, subspace cosets, or the hardness families).
    """
    rng = np.random.default_rng(seed)
    if n <= 3:
        cons = enumerate_congruences(gens, n)
        return cons[int(rng.integers(0, len(cons)))]
    case = classify(gens)
    if case.case is Tractability.BOTH_POLY:
        mask = 0
        for i in range(n):
            if rng.integers(0, 2):
                mask |= 1 << i
        return Congruence(n, tuple(x & mask for x in range(1 << n)))
    if case.case is Tractability.QUANTUM_ONLY:
        return congruence_of_subspace(random_subspace(rng, n), n)
    witness = case.witnesses[0]
    if witness == "gens<=U" and n >= 2:
        pairing = negation_pairing(n)
        chosen = [p for p in pairing if rng.integers(0, 2)]
        return theta_Y_neg(chosen, n)
    if n <= 4:
        layer = middle_layer(n).members
        chosen = [z for z in layer if rng.integers(0, 2)]
        theta = theta_Z(chosen, n)
        if witness == "gens<=JOIN":
            full = (1 << n) - 1
            relabeled = [0] * (1 << n)
            least: dict[int, int] = {}
            for x in range(1 << n):
                lab = theta.block_of[full ^ x]
                least.setdefault(lab, x)
                relabeled[x] = least[lab]
            return Congruence(n, tuple(relabeled))
        return theta
    raise ContractViolation(
        "random hidden congruences for intractable powers need n <= 4; "
        "pass an explicit congruence file instead"
    )


def _emit(report: dict, args: argparse.Namespace) -> None:
    report = dict(report)
    report["schema"] = SCHEMA_VERSION
    report["meta"] = {"generated_at": datetime.now(timezone.utc).isoformat()}
    text = json.dumps(report, indent=2, sort_keys=True)
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _write_csv(path: str, rows: list[dict]) -> None:
    if not rows:
        return
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


# --- subcommands ---------------------------------------------------------------


def _cmd_classify(args: argparse.Namespace) -> int:
    gens, label = _parse_gens(args)
    case = classify(gens)
    _emit(
        {
            "command": "classify",
            "config": {"algebra": label, "generators": gens.to_json()},
            "case": case.case.value,
            "witnesses": list(case.witnesses),
        },
        args,
    )
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    gens, label = _parse_gens(args)
    seed = _resolve_seed(args)
    hidden = _parse_hidden(args.hidden, args.n, gens, seed)
    oracle = make_hidden_oracle(hidden)
    report = solve_hkp(
        gens, oracle, args.tau, seed=seed, exhaustive=args.exhaustive
    )
    payload = {
        "command": "solve",
        "config": {
            "algebra": label,
            "generators": gens.to_json(),
            "n": args.n,
            "hidden": args.hidden,
            "tau": args.tau,
            "exhaustive": args.exhaustive,
            "seed": seed,
        },
        "report": report.to_json(),
    }
    _emit(payload, args)
    if report.result is None:
        return EXIT_UNSOLVED
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    gens, label = _parse_gens(args)
    seed = _resolve_seed(args)
    hidden = _parse_hidden(args.oracle, args.n, gens, seed)
    oracle = make_hidden_oracle(hidden)
    dist = simon_distribution(oracle)
    samples = simon_sample(oracle, seed, args.samples)
    _emit(
        {
            "command": "simulate",
            "config": {
                "algebra": label,
                "n": args.n,
                "oracle": args.oracle,
                "samples": args.samples,
                "seed": seed,
            },
            "distribution": dist.as_dict(),
            "samples": [s.to_string() for s in samples],
            "queries": oracle.query_count,
        },
        args,
    )
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    gens, label = _parse_gens(args)
    cons = enumerate_congruences(gens, args.n)
    _emit(
        {
            "command": "enumerate",
            "config": {"algebra": label, "generators": gens.to_json(), "n": args.n},
            "count": len(cons),
            "congruences": [c.to_json() for c in cons],
        },
        args,
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = run_suite(args.suite)
    except KeyError:
        raise ContractViolation(
            f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)} or all"
        ) from None
    for name, ok, detail in results:
        print(f"{'ok  ' if ok else 'FAIL'} {name} ({detail})")
    failed = [name for name, ok, _ in results if not ok]
    _emit(
        {
            "command": "verify",
            "config": {"suite": args.suite},
            "passed": len(results) - len(failed),
            "failed": failed,
        },
        args,
    )
    return EXIT_FAILED_CHECK if failed else EXIT_OK


def _cmd_experiment(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    name = args.name
    rows: list[dict]
    if name == "collision":
        probe_counts = [int(p) for p in args.probes.split(",")]
        rows = [
            collision_experiment(args.n, k, args.trials, seed, args.strategy).to_json()
            for k in probe_counts
        ]
    elif name == "antichain":
        layer = middle_layer(args.n).members
        from itertools import combinations

        rows = []
        for size in range(len(layer) + 1):
            thetas = {theta_Z(Z, args.n) for Z in combinations(layer, size)}
            from math import comb

            rows.append(
                {
                    "n": args.n,
                    "subset_size": size,
                    "subsets": comb(len(layer), size),
                    "distinct_congruences": len(thetas),
                }
            )
    elif name == "negation":
        from itertools import combinations

        pairing = negation_pairing(args.n)
        thetas = set()
        for r in range(len(pairing) + 1):
            for Y in combinations(pairing, r):
                thetas.add(theta_Y_neg(Y, args.n))
        rows = [
            {
                "n": args.n,
                "pairs": len(pairing),
                "subsets": 1 << len(pairing),
                "distinct_congruences": len(thetas),
            }
        ]
    elif name == "speedup":
        n_values = list(range(args.n_min, args.n_max + 1))
        rows = speedup_table(n_values, seed)
    else:
        raise ContractViolation(
            f"unknown experiment {name!r}; expected antichain, collision, negation or speedup"
        )
    if args.csv:
        _write_csv(args.csv, rows)
    _emit(
        {
            "command": "experiment",
            "config": {
                "name": name,
                "n": getattr(args, "n", None),
                "trials": getattr(args, "trials", None),
                "seed": seed,
            },
            "rows": rows,
        },
        args,
    )
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def _add_algebra_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--clone", help=f"named clone id: {', '.join(NAMED_CLONE_IDS)}")
    p.add_argument("--gens", help="generator set as a JSON list of truth tables")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkp",
        description="Classify, solve and verify hidden kernel problems on powers "
        "of 2-element algebras.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved; the orchestration layer is single-threaded (default 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="three-way tractability of an algebra")
    _add_algebra_flags(p)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("solve", help="recover a hidden congruence through an oracle")
    _add_algebra_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--hidden",
        required=True,
        help="congruence file, random:SEED, zero, one, proj:i,j or xor:BITS",
    )
    p.add_argument("--tau", type=int, default=None, help="confidence parameter")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("simulate", help="exact circuit distribution and samples")
    _add_algebra_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", required=True, help="hidden-congruence spec (as for solve)")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("enumerate", help="the full congruence lattice of a power")
    _add_algebra_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a finite verification battery")
    p.add_argument("--suite", required=True, help=f"{', '.join(SUITES)} or all")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("experiment", help="hardness and speedup experiments")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--probes", default="4,8,16")
    p.add_argument("--strategy", default="adversarial-sequential")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="also write rows to this CSV file")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except UnclassifiedCloneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSOLVED
    except (ContractViolation, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
