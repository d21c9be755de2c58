"""Injectivity gadget on B = x1 v ... v xn, which is false only at 0^n:
the (0,...,0,1) else-output leaves F the identity, the 0^{n+1} else-output
exposes the collision."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from thmonoid.circuits import Or, gadget_inj, is_injective_fun, is_tautology, to_element, var
from thmonoid.green import is_monomorphism


@dataclass
class FamilyConfig:
    max_n: int = 6


def rows(cfg: FamilyConfig):
    for n in range(1, cfg.max_n + 1):
        xs = [f"x{i}" for i in range(1, n + 1)]
        B = Or(*map(var, xs)) if n > 1 else var("x1")
        else_one = gadget_inj(B, n, xs, else_ends_in_one=True)
        fixed = gadget_inj(B, n, xs)
        yield n, is_tautology(B, xs), is_injective_fun(else_one), is_injective_fun(fixed), is_monomorphism(to_element(fixed))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=FamilyConfig.max_n)
    cfg = FamilyConfig(**vars(p.parse_args()))
    print("n  tautology  else-0..01-injective  else-0..00-injective  else-0..00-mono")
    for n, taut, pr, fx, mono in rows(cfg):
        print(f"{n:<2} {taut!s:<10} {pr!s:<18} {fx!s:<20} {mono}")


if __name__ == "__main__":
    main()
