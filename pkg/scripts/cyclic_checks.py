"""Randomised checks of the cyclic cochain calculus on the dihedral group.

Draws seeded structured 1-cocycles and 0-cochains, solves for primitives and
confirms b1 b0 = 0; then checks the psi_k family and the psi_0 obstruction.

    python3 scripts/cyclic_checks.py --trials 50 --seed 7
"""

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass

from ncgroups.cyclic import (
    Cochain0,
    S0,
    b0,
    b1,
    coboundary_feasible,
    cocycle1_from_cd,
    make_psi,
    make_psi_k,
    residual_1,
    solve_1coboundary,
    solve_2coboundary_psik,
)
from ncgroups.scalar import Gaussian


@dataclass
class CyclicConfig:
    trials: int = 50
    seed: int = 0
    support: int = 8
    solve_bound: int = 16
    calculus_bound: int = 8
    k_max: int = 6
    psik_bound: int = 12
    feasible_bound: int = 8


def random_cd(rng, support):
    c = {rng.randint(-support, support): rng.randint(-6, 6) for _ in range(rng.randint(0, 6))}
    d = {}
    for _ in range(rng.randint(0, 4)):
        n, v = rng.randint(1, support), rng.randint(-6, 6)
        d[n], d[-n] = v, -v
    return c, d


def random_cochain0(rng, support):
    def part():
        return {
            rng.randint(-support, support): Gaussian(rng.randint(-4, 4), rng.randint(-1, 1))
            for _ in range(rng.randint(0, 5))
        }
    return Cochain0(part(), part())


def run(cfg: CyclicConfig) -> dict:
    rng = random.Random(cfg.seed)
    out = {"config": asdict(cfg)}

    start = time.perf_counter()
    failures = 0
    for _ in range(cfg.trials):
        phi = cocycle1_from_cd(*random_cd(rng, cfg.support))
        psi = solve_1coboundary(phi, cfg.solve_bound, verify=False)
        failures += bool(residual_1(psi, phi, cfg.solve_bound))
    out["solve1"] = {"failures": failures, "seconds": round(time.perf_counter() - start, 2)}

    start = time.perf_counter()
    nonzero = 0
    for _ in range(cfg.trials):
        psi = random_cochain0(rng, cfg.support)
        nonzero += not b1(b0(psi, 2 * cfg.calculus_bound), cfg.calculus_bound).is_zero()
    out["b1b0"] = {"nonzero": nonzero, "seconds": round(time.perf_counter() - start, 2)}

    psik = {}
    for k in range(1, cfg.k_max + 1):
        phi = solve_2coboundary_psik(k)
        psik[k] = (b1(phi, cfg.psik_bound) - S0(make_psi_k(k), cfg.psik_bound)).is_zero()
    out["psik_coboundary"] = psik

    res = coboundary_feasible(S0(make_psi(0), cfg.feasible_bound), cfg.feasible_bound)
    out["psi0"] = {
        "feasible": res.feasible,
        "certificate_checked": res.certificate_checked,
        "rank_at_contradiction": res.rank,
        "equations": res.n_equations,
        "unknowns": res.n_unknowns,
    }
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--support", type=int, default=8)
    ap.add_argument("--k-max", type=int, default=6)
    args = ap.parse_args()
    cfg = CyclicConfig(trials=args.trials, seed=args.seed, support=args.support, k_max=args.k_max)
    print(json.dumps(run(cfg), indent=2, default=str))


if __name__ == "__main__":
    main()
