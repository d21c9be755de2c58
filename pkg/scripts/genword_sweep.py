"""Random generator words: how close expanded tables come to the depth
bound c|w|, and whether the bounded deciders agree with the table deciders."""
from __future__ import annotations

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from thmonoid.core import code_depth
from thmonoid.genwords import depth_bound, expand_to_table, is_surjective_program, r_leq_pi2
from thmonoid.green import is_surjective_elem, r_leq
from thmonoid.hom import image_code
from thmonoid.sampling import random_gamma, random_genword


@dataclass
class SweepConfig:
    words: int = 500
    k: int = 2
    gens: int = 2
    gen_depth: int = 2
    max_atoms: int = 8
    max_tau: int = 3
    seed: int = 0


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    ratios, disagreements, surjective = [], 0, 0
    start = time.perf_counter()
    for _ in range(cfg.words):
        gamma = random_gamma(rng, cfg.k, cfg.gens, cfg.gen_depth)
        w = random_genword(rng, gamma, cfg.max_atoms, cfg.max_tau)
        v = random_genword(rng, gamma, cfg.max_atoms, cfg.max_tau)
        t, u = expand_to_table(w), expand_to_table(v)
        reach = max(code_depth(t.domain), code_depth(image_code(t)))
        if depth_bound(w):
            ratios.append(reach / depth_bound(w))
        surj = is_surjective_program(w)
        surjective += surj
        disagreements += surj != is_surjective_elem(t)
        disagreements += r_leq_pi2(w, v) != r_leq(t, u)
    return {
        "words": cfg.words,
        "surjective": surjective,
        "disagreements": disagreements,
        "depth/bound mean": round(statistics.mean(ratios), 3) if ratios else None,
        "depth/bound max": round(max(ratios), 3) if ratios else None,
        "seconds": round(time.perf_counter() - start, 2),
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(SweepConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(p.parse_args()))
    for key, val in sweep(cfg).items():
        print(f"{key}: {val}")


if __name__ == "__main__":
    main()
