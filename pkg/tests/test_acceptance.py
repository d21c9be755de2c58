"""Acceptance suite: ten criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import sys
import time
from collections import Counter
from fractions import Fraction
from functools import partial
from itertools import product

import pytest

from thmonoid.circuits import (
    Or,
    block_variables,
    forall_exists_eval,
    gadget_inj,
    gadget_surj,
    is_injective_fun,
    is_surjective_fun,
    is_tautology,
    qbf1_transform,
    to_element,
    var,
    zero_word_check,
)
from thmonoid.congruence import func, part
from thmonoid.core import (
    all_prefix_codes,
    code_depth,
    ends_subset,
    is_maximal_kraft,
    is_maximal_saturated,
    kraft_sum,
)
from thmonoid.density import CONSTRUCTORS, applicable, verify_between
from thmonoid.genwords import (
    GammaSet,
    Gen,
    GenWord,
    apply,
    atom_table,
    depth_bound,
    expand_raw,
    expand_to_table,
    is_surjective_program,
    r_leq_pi2,
    r_upper_bound_check,
)
from thmonoid.green import (
    idempotent_leq,
    is_monomorphism,
    is_surjective_elem,
    l_leq,
    l_leq_by_idempotents,
    l_multiplier,
    r_leq,
    r_multiplier,
)
from thmonoid.hom import (
    Hom,
    compose,
    eq_in_M,
    is_pc_preserving,
    max_extend,
    restrict_step,
    restrict_to_pc_preserving,
)
from thmonoid.oracles import ends_subset_by_paths, word_agrees_with_table
from thmonoid.sampling import (
    all_congruences,
    random_code,
    random_formula,
    random_gamma,
    random_genword,
    random_hom,
    small_elements,
)

SEED = 20240601
RESULTS: dict[int, tuple[bool, str, float]] = {}


def _random_pair(rng: random.Random, depth: int = 3) -> tuple[Hom, Hom]:
    """(psi, phi) over k in {2, 3}; two thirds of the pairs are built comparable."""
    k = rng.choice((2, 3))
    phi, alpha = random_hom(rng, k, depth), random_hom(rng, k, depth)
    r = rng.random()
    if r < 1 / 3:
        return compose(phi, alpha), phi
    if r < 2 / 3:
        return compose(alpha, phi), phi
    return alpha, phi


def criterion_1():
    codes = all_prefix_codes(2, 3)
    bad = sum(ends_subset(Q, P, 2) != ends_subset_by_paths(Q, P, 2) for Q in codes for P in codes)
    return bad == 0, f"{len(codes)}^2 code pairs, {bad} mismatches"


def criterion_2():
    rng = random.Random(SEED + 2)
    bad = 0
    n = 1000
    for _ in range(n):
        k = rng.choice((2, 3))
        h = random_hom(rng, k, 3)
        nf = max_extend(h)
        # rewrite orders: random extension order, and a random restriction chain first
        if any(max_extend(h, random.Random(rng.random())) != nf for _ in range(3)):
            bad += 1
            continue
        cur = h
        for _ in range(rng.randint(1, 4)):
            if not cur.table:
                break
            cur = restrict_step(cur, rng.choice(sorted(cur.domain)))
        if max_extend(cur, random.Random(rng.random())) != nf:
            bad += 1
            continue
        f, g = random_hom(rng, k, 3), random_hom(rng, k, 3)
        if not eq_in_M(compose(compose(f, g), h), compose(f, compose(g, h))):
            bad += 1
    return bad == 0, f"{n} tables and {n} triples, {bad} failures"


def criterion_3():
    phi = Hom.from_pairs(2, [("a", "aa"), ("b", "a")])
    want = Hom.from_pairs(2, [("a", "aa"), ("ba", "aa"), ("bb", "ab")])
    r = restrict_to_pc_preserving(phi)
    blocks = [list(b) for b in part(phi).blocks]
    ok = not is_pc_preserving(phi) and r == want and blocks == [["a", "ba"], ["bb"]]
    images = " ".join(y for _, y in r.table)
    return ok, f"restriction {r.table}, images '{images}', part {blocks}"


def _check_multipliers(psi: Hom, phi: Hom) -> tuple[int, int]:
    done = bad = 0
    if r_leq(psi, phi):
        done += 1
        bad += not eq_in_M(psi, compose(phi, r_multiplier(psi, phi)))
    if l_leq(psi, phi):
        done += 1
        bad += not eq_in_M(psi, compose(l_multiplier(psi, phi), phi))
    return done, bad


def criterion_4():
    elems = small_elements(2)
    done = bad = 0
    for psi in elems:
        for phi in elems:
            d, b = _check_multipliers(psi, phi)
            done, bad = done + d, bad + b
    rng = random.Random(SEED + 4)
    for _ in range(10_000):
        d, b = _check_multipliers(*_random_pair(rng))
        done, bad = done + d, bad + b
    return bad == 0, f"{len(elems)}^2 exhaustive + 10^4 random pairs, {done} multipliers built, {bad} failures"


def criterion_5():
    rng = random.Random(SEED + 5)
    disagree = 0
    n = 10_000
    for _ in range(n):
        psi, phi = _random_pair(rng)
        if l_leq(psi, phi) != l_leq_by_idempotents(psi, phi):
            disagree += 1
    m = 2000
    embed_bad = 0
    for _ in range(m):
        psi, phi = _random_pair(rng)
        want = l_leq(psi, phi)
        for j in (0, 1):
            embed_bad += idempotent_leq(func(part(psi), j), func(part(phi), j)) != want
    ok = disagree == 0 and embed_bad == 0
    return ok, f"{n} pairs two-method ({disagree} disagreements), {m} pairs x 2 embeddings ({embed_bad} disagreements)"


def criterion_6():
    congs = all_congruences(2, 2)
    bad = sum(part(func(c, j)) != c for c in congs for j in (0, 1))
    return bad == 0, f"{len(congs)} congruences x 2, {bad} failures"


def criterion_7():
    elems = small_elements(2)
    built = Counter()
    bad = 0
    for phi in elems:
        for psi in elems:
            for kind, build in CONSTRUCTORS.items():
                if applicable(kind, phi, psi):
                    built[kind] += 1
                    bad += not verify_between(kind, phi, psi, build(phi, psi))
    counts = ", ".join(f"{k}={built[k]}" for k in CONSTRUCTORS)
    return bad == 0 and all(built.values()), f"witnesses {counts}; {bad} failures"


def criterion_8():
    rng = random.Random(SEED + 8)
    bad = 0
    n = 600
    for _ in range(n):
        m = rng.randint(1, 3)
        n_forall = rng.randint(0, 5 - m)
        names = block_variables(m, n_forall)
        beta = random_formula(rng, names, rng.randint(1, 9))
        beta1 = qbf1_transform(beta, "b")
        names1 = names + ["b"]
        truth = forall_exists_eval(beta, n_forall, m, names)
        if forall_exists_eval(beta1, n_forall + 1, m, names1) != truth:
            bad += 1
            continue
        c = gadget_surj(beta1, m, n_forall + 1, names1)
        elem = to_element(c)
        word = GenWord(GammaSet(2, {"C": elem}), (Gen("C"),))
        if not (truth == is_surjective_fun(c) == is_surjective_elem(elem) == is_surjective_program(word)):
            bad += 1
            continue
        xs = [f"x{i}" for i in range(1, rng.randint(1, 6) + 1)]
        B = random_formula(rng, xs, rng.randint(1, 10))
        taut = is_tautology(B, xs)
        F = gadget_inj(B, len(xs), xs)
        if not (taut == is_injective_fun(F) == is_monomorphism(to_element(F)) == zero_word_check(B, xs)):
            bad += 1
    family_ok = True
    for size in range(1, 6):
        xs = [f"x{i}" for i in range(1, size + 1)]
        B = Or(*map(var, xs)) if size > 1 else var("x1")
        else_one = is_injective_fun(gadget_inj(B, size, xs, else_ends_in_one=True))
        else_zero = is_injective_fun(gadget_inj(B, size, xs))
        family_ok &= else_one and not else_zero and not is_tautology(B, xs)
    ok = bad == 0 and family_ok
    return ok, f"{n} formula pairs, {bad} failures; 0..01 else-output F fails and 0^(n+1) F succeeds on B = x1 v..v xn (n<=5): {family_ok}"


def _genword_ok(w: GenWord, other: GenWord, alpha: Hom) -> bool:
    raw, table = expand_raw(w), expand_to_table(w)
    bound = depth_bound(w)
    L0 = max(code_depth(raw.domain), code_depth(table.domain))
    if max(L0, code_depth(raw.images), code_depth(table.images)) > bound:
        return False
    steps = [atom_table(w.gamma, a) for a in reversed(w.atoms)]
    value = partial(apply, w)
    if not (word_agrees_with_table(value, steps, table, L0) and word_agrees_with_table(value, steps, raw, L0)):
        return False
    other_table = expand_to_table(other)
    return (
        is_surjective_program(w) == is_surjective_elem(table)
        and r_leq_pi2(w, other) == r_leq(table, other_table)
        and r_leq_pi2(other, w) == r_leq(other_table, table)
        and r_upper_bound_check(w, alpha) == r_leq(table, alpha)
    )


def criterion_9():
    rng = random.Random(SEED + 9)
    n = 1000
    bad = 0
    for i in range(n):
        k = 2 if i % 4 else 3
        gamma = random_gamma(rng, k, n_gens=rng.randint(1, 3), depth=2)
        w = random_genword(rng, gamma, max_atoms=8, max_tau=3)
        other = random_genword(rng, gamma, max_atoms=8, max_tau=3)
        alpha = random_hom(rng, k, 2)
        bad += not _genword_ok(w, other, alpha)
    return bad == 0, f"{n} words (each with a partner word and a bound table), {bad} failures"


def _kraft_vs_saturation(codes, k) -> int:
    return sum(is_maximal_kraft(P, k) != is_maximal_saturated(P, k) for P in codes)


def criterion_10():
    direct = {
        "k=2 depth<=3": _kraft_vs_saturation(all_prefix_codes(2, 3), 2),
        "k=3 depth<=2": _kraft_vs_saturation(all_prefix_codes(3, 2), 3),
    }
    rng = random.Random(SEED + 10)
    sample = [random_code(rng, 3, 3, stop=rng.choice((0.1, 0.3, 0.5))) for _ in range(20_000)]
    direct["k=3 depth 3 sample"] = _kraft_vs_saturation(sample, 3)
    # every k=3 code of depth <= 3 other than {eps} is a triple of child codes of depth <= 2;
    # its Kraft sum is the mean of the child sums, and it is saturated iff every child is
    children = all_prefix_codes(3, 2)
    classes = Counter((kraft_sum(C, 3), is_maximal_saturated(C, 3)) for C in children)
    total = 1  # the code {eps}; the empty code is the triple of empty children
    mismatched = int(is_maximal_kraft({""}, 3) != is_maximal_saturated({""}, 3))
    for combo in product(classes.items(), repeat=3):
        weight = 1
        for _, cnt in combo:
            weight *= cnt
        total += weight
        kraft_max = sum(ks for (ks, _), _ in combo) / 3 == Fraction(1)
        saturated = all(sat for (_, sat), _ in combo)
        if kraft_max != saturated:
            mismatched += weight
    ok = total == 389_017_001 and mismatched == 0 and not any(direct.values())
    details = ", ".join(f"{k}: {v} mismatches" for k, v in direct.items())
    return ok, f"{details}; all {total} k=3 depth<=3 codes by decomposition: {mismatched} mismatches"


CRITERIA = [
    (1, "R-order oracle equivalence", criterion_1),
    (2, "normal-form confluence and associativity", criterion_2),
    (3, "worked example", criterion_3),
    (4, "constructive multipliers", criterion_4),
    (5, "L-order two-method agreement and embedding", criterion_5),
    (6, "func/part roundtrip", criterion_6),
    (7, "density witnesses", criterion_7),
    (8, "gadget chains", criterion_8),
    (9, "generator-word consistency", criterion_9),
    (10, "Kraft vs saturation", criterion_10),
]


def run_criterion(num: int) -> tuple[bool, str, float]:
    _, _, body = CRITERIA[num - 1]
    start = time.perf_counter()
    ok, detail = body()
    RESULTS[num] = (ok, detail, time.perf_counter() - start)
    return RESULTS[num]


def report_line(num: int) -> str:
    ok, detail, secs = RESULTS[num]
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d} {CRITERIA[num - 1][1]}: {detail} [{secs:.1f}s]"


@pytest.mark.parametrize("num", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num):
    ok, _, _ = run_criterion(num)
    print(report_line(num))
    assert ok, report_line(num)


if __name__ == "__main__":
    all_ok = True
    for num, _, _ in CRITERIA:
        ok, _, _ = run_criterion(num)
        print(report_line(num), flush=True)
        all_ok &= ok
    sys.exit(0 if all_ok else 1)
