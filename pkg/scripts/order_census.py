"""Count R/L comparabilities, Green classes and density witnesses over the
small exhaustive element family (k=2)."""
from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from thmonoid.density import CONSTRUCTORS, applicable, verify_between
from thmonoid.green import l_leq, r_leq
from thmonoid.sampling import small_elements


@dataclass
class CensusConfig:
    k: int = 2
    density: bool = True
    json: bool = False


def classes(elems, leq) -> list[int]:
    """Sizes of the equivalence classes of a preorder, largest first."""
    seen: set[int] = set()
    sizes = []
    for i, a in enumerate(elems):
        if i in seen:
            continue
        cls = {j for j, b in enumerate(elems) if leq(a, b) and leq(b, a)}
        seen |= cls
        sizes.append(len(cls))
    return sorted(sizes, reverse=True)


def census(cfg: CensusConfig) -> dict:
    start = time.perf_counter()
    elems = small_elements(cfg.k)
    pairs = [(psi, phi) for psi in elems for phi in elems]
    out = {
        "config": asdict(cfg),
        "elements": len(elems),
        "r_leq_pairs": sum(r_leq(psi, phi) for psi, phi in pairs),
        "l_leq_pairs": sum(l_leq(psi, phi) for psi, phi in pairs),
        "r_classes": Counter(classes(elems, r_leq)),
        "l_classes": Counter(classes(elems, l_leq)),
    }
    if cfg.density:
        built, bad = Counter(), 0
        for phi, psi in pairs:
            for kind, build in CONSTRUCTORS.items():
                if applicable(kind, phi, psi):
                    built[kind] += 1
                    bad += not verify_between(kind, phi, psi, build(phi, psi))
        out["density_witnesses"] = dict(built)
        out["density_failures"] = bad
    out["seconds"] = round(time.perf_counter() - start, 2)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, default=CensusConfig.k)
    p.add_argument("--no-density", dest="density", action="store_false")
    p.add_argument("--json", action="store_true")
    cfg = CensusConfig(**vars(p.parse_args()))
    res = census(cfg)
    if cfg.json:
        print(json.dumps({k: dict(v) if isinstance(v, Counter) else v for k, v in res.items()}, indent=2))
        return
    for key, val in res.items():
        if isinstance(val, Counter):
            val = ", ".join(f"{n} of size {s}" for s, n in sorted(val.items(), reverse=True))
        print(f"{key}: {val}")


if __name__ == "__main__":
    main()
