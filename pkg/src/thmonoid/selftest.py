"""Randomised cross-checks of the deciders against the brute-force oracles."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import circuits as C
from .congruence import cong_max, func, part, refines_end
from .core import ends_subset, is_maximal_kraft, is_maximal_saturated, code_depth, words_of_length
from .genwords import GammaSet, Gen, GenWord, apply, depth_bound, expand_raw, expand_to_table, is_surjective_program
from .green import (
    is_monomorphism,
    is_surjective_elem,
    l_leq,
    l_leq_by_idempotents,
    l_multiplier,
    r_leq,
    r_multiplier,
)
from .hom import compose, eq_in_M, evaluate, max_extend
from .oracles import composite_pointwise, ends_subset_by_paths, refines_by_ends, same_element
from .sampling import random_code, random_congruence, random_formula, random_gamma, random_genword, random_hom


@dataclass
class CheckResult:
    name: str
    trials: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _run(name: str, trials: int, body: Callable[[random.Random], bool], rng: random.Random) -> CheckResult:
    bad = sum(0 if body(rng) else 1 for _ in range(trials))
    return CheckResult(name, trials, bad)


def _ends(rng):
    k = rng.choice((2, 3))
    P, Q = random_code(rng, k, 3), random_code(rng, k, 3)
    return ends_subset(Q, P, k) == ends_subset_by_paths(Q, P, k)


def _normal_form(rng):
    k = rng.choice((2, 3))
    h = random_hom(rng, k, 3)
    return max_extend(h) == max_extend(h, rng) and same_element(h, max_extend(h))


def _compose(rng):
    k = rng.choice((2, 3))
    f, g = random_hom(rng, k, 3), random_hom(rng, k, 3)
    return composite_pointwise(f, g, compose(f, g))


def _r_mult(rng):
    k = 2
    psi, phi = random_hom(rng, k, 2), random_hom(rng, k, 2)
    if not r_leq(psi, phi):
        return True
    return eq_in_M(psi, compose(phi, r_multiplier(psi, phi)))


def _l_order(rng):
    k = rng.choice((2, 3))
    psi, phi = random_hom(rng, k, 2), random_hom(rng, k, 2)
    yes = l_leq(psi, phi)
    if yes != l_leq_by_idempotents(psi, phi):
        return False
    return not yes or eq_in_M(psi, compose(l_multiplier(psi, phi), phi))


def _refines(rng):
    k = 2
    c1, c2 = random_congruence(rng, k, 3), random_congruence(rng, k, 3)
    return refines_end(c2, c1) == refines_by_ends(cong_max(c2), cong_max(c1))


def _func_part(rng):
    c = cong_max(random_congruence(rng, 2, 2))
    return all(cong_max(part(func(c, j))) == c for j in (0, 1)) if c.blocks else True


def _gadgets(rng):
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    names = C.block_variables(m, n)
    beta = C.qbf1_transform(random_formula(rng, names, 6), "y0")
    names = names + ["y0"]
    truth = C.forall_exists_eval(beta, n + 1, m, names)
    gadget = C.gadget_surj(beta, m, n + 1, names)
    elem = C.to_element(gadget)
    prog = GenWord(GammaSet(2, {"C": elem}), (Gen("C"),))
    if not (truth == C.is_surjective_fun(gadget) == is_surjective_elem(elem) == is_surjective_program(prog)):
        return False
    xs = [f"x{i}" for i in range(1, m + 1)]
    B = random_formula(rng, xs, 5)
    taut = C.is_tautology(B, xs)
    F = C.gadget_inj(B, m, xs)
    return taut == C.is_injective_fun(F) == is_monomorphism(C.to_element(F)) == C.zero_word_check(B, xs)


def _kraft(rng):
    k = rng.choice((2, 3))
    P = random_code(rng, k, 3)
    return is_maximal_kraft(P, k) == is_maximal_saturated(P, k)


def _expand(rng):
    gamma = random_gamma(rng, 2)
    w = random_genword(rng, gamma, 5)
    raw, t = expand_raw(w), expand_to_table(w)
    L = max(code_depth(raw.domain), code_depth(t.domain))
    if L > depth_bound(w):
        return False
    return all(apply(w, z) == evaluate(t, z) for z in words_of_length(2, L))


CHECKS = [
    ("ends_subset vs path oracle", _ends),
    ("normal form confluence", _normal_form),
    ("composition vs pointwise oracle", _compose),
    ("R multiplier verifies", _r_mult),
    ("L order two methods and multiplier", _l_order),
    ("end refinement vs ends oracle", _refines),
    ("func/part roundtrip", _func_part),
    ("gadget chains", _gadgets),
    ("Kraft vs saturation", _kraft),
    ("word expansion vs apply", _expand),
]


def run_selftest(seed: int = 0, trials: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    return [_run(name, trials, body, rng) for name, body in CHECKS]
