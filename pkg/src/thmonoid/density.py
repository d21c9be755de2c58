"""Constructive witnesses strictly between two comparable elements."""
from __future__ import annotations

from .core import (
    OrderViolation,
    alphabet,
    code_depth,
    prefix_in,
    strict_prefixes,
    words_of_length,
)
from .green import l_equiv, l_leq, l_multiplier, r_equiv, r_leq
from .hom import Hom, classwise_restrict, evaluate, fibers, identity, image_code, max_extend, pc_form


def _escape_word(inside: frozenset[str], outside: frozenset[str], k: int, length: int) -> str:
    """Dict-minimal word of the given length with a prefix in ``inside`` and none in ``outside``."""
    for w in words_of_length(k, length):
        if prefix_in(w, inside) is not None and prefix_in(w, outside) is None:
            return w
    raise AssertionError("no escape word although the inclusion is strict")


def r_between(phi: Hom, psi: Hom) -> Hom:
    """chi with psi <_R chi <_R phi."""
    if not (r_leq(psi, phi) and not r_leq(phi, psi)):
        raise OrderViolation("r_between needs psi strictly R-below phi")
    P, Q = image_code(phi), image_code(psi)
    w = _escape_word(P, Q, phi.k, max(code_depth(P), code_depth(Q)) + 1)
    return identity(phi.k, Q | {w})


def _common_domain(psi: Hom, phi: Hom) -> tuple[Hom, Hom]:
    """Prefix-code-preserving psi', phi' essentially equal to psi, phi,
    where phi' comes from class-wise restrictions and domC(psi') is a
    subset of domC(phi').  Needs psi <=_L phi.

    With alpha the left multiplier, phi's classes are restricted until each
    image is decided by alpha; then classes are pushed down further so that
    all alpha-values share one length, and psi' = alpha phi' entrywise.
    """
    alpha = l_multiplier(psi, phi)
    phi1 = pc_form(phi)
    pending = strict_prefixes(alpha.domain)
    while True:
        y = next((y for y in sorted(set(phi1.images)) if y in pending), None)
        if y is None:
            break
        phi1 = classwise_restrict(phi1, y)
    values = {y: evaluate(alpha, y) for y in set(phi1.images)}
    top = max((len(v) for v in values.values() if v is not None), default=0)
    while True:
        y = next((y for y in sorted(values) if values[y] is not None and len(values[y]) < top), None)
        if y is None:
            break
        phi1 = classwise_restrict(phi1, y)
        v = values.pop(y)
        values.update((y + a, v + a) for a in alphabet(phi.k))
    psi1 = Hom(phi.k, tuple((x, values[y]) for x, y in phi1.table if values[y] is not None))
    return psi1, phi1


def _classes(h: Hom) -> list[tuple[str, list[str]]]:
    """(image, sorted class) pairs in dictionary order of the class."""
    return sorted(((y, xs) for y, xs in fibers(h).items()), key=lambda t: t[1])


def _split(psi: Hom, phi: Hom):
    """Aligned forms plus the first phi-class outside Dom(psi') and the
    first psi'-class that is a union of two or more phi'-classes."""
    psi1, phi1 = _common_domain(psi, phi)
    assert psi1.domain <= phi1.domain
    phi_cls = _classes(phi1)
    outside = [xs for _, xs in phi_cls if not set(xs) & psi1.domain]
    coarse = None
    for y, xs in _classes(psi1):
        inner = [cs for _, cs in phi_cls if set(cs) <= set(xs)]
        if len(inner) >= 2:
            coarse = (y, xs, inner)
            break
    return psi1, phi1, outside, coarse


def _canonical_code(k: int, s: int) -> list[str]:
    n = 0
    while k**n < s:
        n += 1
    return list(words_of_length(k, n))[:s]


def l_between(phi: Hom, psi: Hom) -> Hom:
    """chi with psi <_L chi <_L phi."""
    if not (l_leq(psi, phi) and not l_leq(phi, psi)):
        raise OrderViolation("l_between needs psi strictly L-below phi")
    letters = alphabet(phi.k)
    a1 = letters[0]
    psi1, phi1, outside, coarse = _split(psi, phi)
    if outside:
        # drop one whole branch U.a1 of a phi-class U missing from Dom(psi)
        u_cls = outside[0]
        u_img = phi1.mapping[u_cls[0]]
        restricted = classwise_restrict(phi1, u_img)
        table = {x: y for x, y in restricted.table if not (x[:-1] in u_cls and x.endswith(a1))}
        return max_extend(Hom(phi.k, tuple(sorted(table.items()))))
    if coarse is None:
        raise AssertionError("equal domains but no strictly coarser class")
    y1, q1, inner = coarse
    codes = _canonical_code(phi.k, len(inner))
    table = {x: y for x, y in psi1.table if x not in q1}
    for cls, c in zip(inner, codes):
        for x in cls:
            table[x + a1] = y1 + a1 + c
    for x in q1:
        for a in letters[1:]:
            table[x + a] = y1 + a
    return max_extend(Hom(phi.k, tuple(sorted(table.items()))))


def l_between_in_Rclass(phi: Hom, psi: Hom) -> Hom:
    """chi R-equivalent to phi and psi with psi <_L chi <_L phi."""
    if not r_equiv(phi, psi):
        raise OrderViolation("l_between_in_Rclass needs R-equivalent inputs")
    if not (l_leq(psi, phi) and not l_leq(phi, psi)):
        raise OrderViolation("l_between_in_Rclass needs psi strictly L-below phi")
    letters = alphabet(phi.k)
    a1 = letters[0]
    psi1, phi1, outside, coarse = _split(psi, phi)
    if outside:
        q_img, q_cls = _classes(psi1)[0]
        u_cls = outside[0]
        table = {x: y for x, y in psi1.table if x not in q_cls}
        for x in q_cls:
            table[x + a1] = q_img + a1 + a1
            for a in letters[1:]:
                table[x + a] = q_img + a
        # U.a_i -> y.a1.a_{i+1}; U.a_k stays out of the domain
        for x in u_cls:
            for i in range(len(letters) - 1):
                table[x + letters[i]] = q_img + a1 + letters[i + 1]
        return max_extend(Hom(phi.k, tuple(sorted(table.items()))))
    if coarse is None:
        raise AssertionError("equal domains but no strictly coarser class")
    y1, q1, inner = coarse
    p1 = inner[0]
    rest = [x for x in q1 if x not in p1]
    pieces = []
    for a in letters[:-1]:
        pieces.append([x + a for x in p1])
        pieces.append([x + a for x in rest])
    pieces.append([x + letters[-1] for x in q1])
    targets = [y1 + a1 + a for a in letters] + [y1 + a for a in letters[1:]]
    table = {x: y for x, y in psi1.table if x not in q1}
    for piece, target in zip(pieces, targets):
        for x in piece:
            table[x] = target
    return max_extend(Hom(phi.k, tuple(sorted(table.items()))))


def r_between_in_Lclass(phi: Hom, psi: Hom) -> Hom:
    """chi L-equivalent to phi and psi with psi <_R chi <_R phi."""
    if not l_equiv(phi, psi):
        raise OrderViolation("r_between_in_Lclass needs L-equivalent inputs")
    if not (r_leq(psi, phi) and not r_leq(phi, psi)):
        raise OrderViolation("r_between_in_Lclass needs psi strictly R-below phi")
    letters = alphabet(phi.k)
    psi1, phi1 = _common_domain(psi, phi)
    if psi1.domain != phi1.domain:
        raise AssertionError("L-equivalent elements did not align")
    P, Q = image_code(phi1), image_code(psi1)
    q = _escape_word(P, Q, phi.k, max(code_depth(P), code_depth(Q)))
    v1, p1 = _classes(psi1)[0]
    table = {x: y for x, y in psi1.table if x not in p1}
    for x in p1:
        for a in letters[:-1]:
            table[x + a] = q + a
        table[x + letters[-1]] = v1
    return max_extend(Hom(phi.k, tuple(sorted(table.items()))))


CONSTRUCTORS = {
    "r": r_between,
    "l": l_between,
    "l_in_r": l_between_in_Rclass,
    "r_in_l": r_between_in_Lclass,
}


def applicable(kind: str, phi: Hom, psi: Hom) -> bool:
    """Precondition of the constructor named ``kind``."""
    if kind in ("r", "r_in_l"):
        strict = r_leq(psi, phi) and not r_leq(phi, psi)
        return strict and (kind == "r" or l_equiv(phi, psi))
    strict = l_leq(psi, phi) and not l_leq(phi, psi)
    return strict and (kind == "l" or r_equiv(phi, psi))


def verify_between(kind: str, phi: Hom, psi: Hom, chi: Hom) -> bool:
    """All strict relations and class memberships a witness must satisfy."""
    if kind in ("r", "r_in_l"):
        leq = r_leq
        same_class = l_equiv
    else:
        leq = l_leq
        same_class = r_equiv
    ok = leq(psi, chi) and not leq(chi, psi) and leq(chi, phi) and not leq(phi, chi)
    if kind in ("r_in_l", "l_in_r"):
        ok = ok and same_class(chi, phi) and same_class(chi, psi)
    return ok
