"""Brute-force checks over A^L, independent of the rewriting machinery.

Every finite code or table here lives inside A^{<=L}, so an end is pinned
down by its length-L prefix and these loops decide end-level questions
exactly.
"""
from __future__ import annotations

from .congruence import Congruence, locate
from .core import alphabet, code_depth, prefix_in, words_of_length
from .hom import Hom, evaluate


def ends_subset_by_paths(Q, P, k: int) -> bool:
    """Every path of length L that enters Q also enters P."""
    Q, P = frozenset(Q), frozenset(P)
    L = max(code_depth(Q), code_depth(P))
    return all(prefix_in(w, Q) is None or prefix_in(w, P) is not None for w in words_of_length(k, L))


def same_element(phi: Hom, psi: Hom) -> bool:
    """Same partial map on all words of length L, hence on all ends."""
    L = max(code_depth(phi.domain), code_depth(psi.domain))
    return all(evaluate(phi, w) == evaluate(psi, w) for w in words_of_length(phi.k, L))


def composite_pointwise(outer: Hom, inner: Hom, candidate: Hom) -> bool:
    """candidate(w) = outer(inner(w)) for all w of length L."""
    L = max(code_depth(inner.domain) + code_depth(outer.domain), code_depth(candidate.domain))
    for w in words_of_length(inner.k, L):
        mid = evaluate(inner, w)
        want = None if mid is None else evaluate(outer, mid)
        if evaluate(candidate, w) != want:
            return False
    return True


def refines_by_ends(c2: Congruence, c1: Congruence) -> bool:
    """Each end u of Dom(c1) and each c1-mate v of it: u, v both outside
    Dom(c2), or both inside with the same c2-block and tail; and
    ends(Dom c2) lie in ends(Dom c1)."""
    k = c1.k
    if not ends_subset_by_paths(c2.domain, c1.domain, k):
        return False
    L = code_depth(c1.domain) + code_depth(c2.domain)
    for u in words_of_length(k, L):
        loc = locate(c1, u)
        if loc is None:
            continue
        block, tail = loc
        here = locate(c2, u)
        for q in c1.blocks[block]:
            if locate(c2, q + tail) != here:
                return False
    return True


def _stays_undefined(steps: list[Hom], z: str) -> bool:
    """Some step sees a word outside its domain ideal that is not a strict
    prefix of a domain word, so no extension of z can get through."""
    u = z
    for step in steps:
        y = evaluate(step, u)
        if y is None:
            return not any(len(x) > len(u) and x.startswith(u) for x in step.domain)
        u = y
    return False


def word_agrees_with_table(value, steps: list[Hom], table: Hom, length: int) -> bool:
    """``value``, the composite of ``steps`` (first applied first), agrees
    with ``table`` on every word of A^length, and ``table`` extends it on
    shorter words.

    The walk over A^{<=length} stops below a word where the composite is
    defined (both sides then act as the same prefix substitution) or where
    the composite can never become defined (then the table must stay
    undefined on the whole subtree).
    """
    letters = alphabet(table.k)
    stack = [""]
    while stack:
        z = stack.pop()
        u = value(z)
        t = evaluate(table, z)
        if u is not None:
            if t != u:
                return False
            continue
        if len(z) == length or _stays_undefined(steps, z):
            if t is not None or any(x.startswith(z) for x in table.domain):
                return False
            continue
        stack.extend(z + a for a in letters)
    return True
