"""Random and exhaustive generators used by tests, scripts and the selftest."""
from __future__ import annotations

import random
from itertools import product

from .circuits import And, Formula, Not, Or, Xor, const, var
from .congruence import Congruence
from .core import all_prefix_codes, alphabet, words_up_to
from .genwords import Gen, GammaSet, GenWord, Tau
from .hom import Hom, max_extend


def random_code(rng: random.Random, k: int, depth: int, stop: float = 0.45) -> frozenset[str]:
    """Grow a random tree: each node becomes a leaf, a hole, or splits."""
    letters = alphabet(k)
    out = []
    stack = [""]
    while stack:
        w = stack.pop()
        r = rng.random()
        if len(w) == depth or r < stop:
            out.append(w)
        elif r < stop + 0.1:
            continue
        else:
            stack.extend(w + a for a in letters)
    if not out:
        out.append("".join(rng.choice(letters) for _ in range(rng.randint(0, depth))))
    return frozenset(out)


def random_word(rng: random.Random, k: int, max_len: int) -> str:
    letters = alphabet(k)
    return "".join(rng.choice(letters) for _ in range(rng.randint(0, max_len)))


def random_hom(rng: random.Random, k: int, depth: int = 3, allow_zero: bool = True) -> Hom:
    if allow_zero and rng.random() < 0.03:
        return Hom(k, ())
    dom = random_code(rng, k, depth)
    pool = [random_word(rng, k, depth) for _ in range(max(1, len(dom) // 2 + rng.randint(0, 2)))]
    return Hom.from_pairs(k, ((x, rng.choice(pool)) for x in sorted(dom)))


def all_homs(k: int, dom_depth: int, img_words: list[str]) -> list[Hom]:
    """Every table with domain code of depth <= dom_depth and images in img_words."""
    out = []
    for dom in all_prefix_codes(k, dom_depth):
        dom = sorted(dom)
        for imgs in product(img_words, repeat=len(dom)):
            out.append(Hom(k, tuple(zip(dom, imgs))))
    return out


def set_partitions(items: list):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[head]] + part
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]


def all_congruences(k: int, depth: int) -> list[Congruence]:
    out = []
    for code in all_prefix_codes(k, depth):
        for blocks in set_partitions(sorted(code)):
            out.append(Congruence.from_blocks(k, blocks))
    return out


def random_congruence(rng: random.Random, k: int, depth: int) -> Congruence:
    code = sorted(random_code(rng, k, depth))
    labels = [rng.randrange(max(1, len(code))) for _ in code]
    groups: dict[int, list[str]] = {}
    for w, lab in zip(code, labels):
        groups.setdefault(lab, []).append(w)
    return Congruence.from_blocks(k, groups.values())


def random_formula(rng: random.Random, names: list[str], size: int = 6) -> Formula:
    if size <= 1 or rng.random() < 0.2:
        if rng.random() < 0.08:
            return const(rng.randint(0, 1))
        return var(rng.choice(names))
    op = rng.choice(("not", "and", "or", "or", "xor", "and"))
    if op == "not":
        return Not(random_formula(rng, names, size - 1))
    split = rng.randint(1, size - 1)
    left, right = random_formula(rng, names, split), random_formula(rng, names, size - split)
    return {"and": And, "or": Or, "xor": Xor}[op](left, right)


def random_gamma(rng: random.Random, k: int, n_gens: int = 2, depth: int = 2) -> GammaSet:
    gens = {}
    for i in range(n_gens):
        h = random_hom(rng, k, depth, allow_zero=False)
        gens[f"G{i + 1}"] = h
    return GammaSet(k, gens)


def random_genword(rng: random.Random, gamma: GammaSet, max_atoms: int = 8, max_tau: int = 2) -> GenWord:
    atoms = []
    names = sorted(gamma.gens)
    for _ in range(rng.randint(1, max_atoms)):
        if names and rng.random() < 0.6:
            atoms.append(Gen(rng.choice(names)))
        else:
            atoms.append(Tau(rng.randint(1, max_tau)))
    return GenWord(gamma, tuple(atoms))


def small_words(k: int, n: int) -> list[str]:
    return list(words_up_to(k, n))


def small_elements(k: int = 2) -> list[Hom]:
    """Distinct normal forms of two small families: domain code in A^{<=2}
    with images in A^{<=1}, and domain code in A^{<=1} with images in A^{<=2}."""
    short, long_ = small_words(k, 1), small_words(k, 2)
    seen = {}
    for h in all_homs(k, 2, short) + all_homs(k, 1, long_):
        m = max_extend(h)
        seen.setdefault(m, m)
    return sorted(seen, key=lambda h: (len(h.table), h.table))
