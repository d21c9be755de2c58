"""Green's preorders on the monoid, their multipliers and the idempotent order."""
from __future__ import annotations

from .congruence import part, refines_end
from .core import (
    DomainError,
    OrderViolation,
    code_depth,
    ends_subset,
    extensions_agree,
    strict_prefixes,
    is_maximal,
    words_of_length,
)
from .hom import (
    Hom,
    compose,
    eq_in_M,
    evaluate,
    fibers,
    identity,
    image_code,
    inverse,
    is_idempotent,
    max_extend,
    pc_form,
    same_alphabet,
)


def r_leq(psi: Hom, phi: Hom) -> bool:
    """psi <=_R phi, i.e. psi = phi alpha for some alpha."""
    k = same_alphabet(psi, phi)
    return ends_subset(image_code(psi), image_code(phi), k)


def l_leq(psi: Hom, phi: Hom) -> bool:
    """psi <=_L phi, i.e. psi = alpha phi for some alpha.

    Fibers are read off the prefix-code-preserving forms.  Inside one
    phi-fiber, for every extension s, all x.s must lie outside Dom(psi)
    together or share one psi-value.
    """
    k = same_alphabet(psi, phi)
    psi_pc, phi_pc = pc_form(psi), pc_form(phi)
    if not ends_subset(psi_pc.domain, phi_pc.domain, k):
        return False
    open_words = strict_prefixes(psi_pc.domain)
    for fiber in fibers(phi_pc).values():
        for x in fiber[1:]:
            if not extensions_agree(fiber[0], x, lambda w: evaluate(psi_pc, w), open_words, k):
                return False
    return True


def l_leq_by_partitions(psi: Hom, phi: Hom) -> bool:
    same_alphabet(psi, phi)
    return refines_end(part(psi), part(phi))


def r_equiv(psi: Hom, phi: Hom) -> bool:
    return r_leq(psi, phi) and r_leq(phi, psi)


def l_equiv(psi: Hom, phi: Hom) -> bool:
    return l_leq(psi, phi) and l_leq(phi, psi)


def idempotent_of(phi: Hom) -> Hom:
    """inverse(phi) o phi: an idempotent with the fibers and domain of phi."""
    if not phi.table:
        return phi
    return compose(inverse(phi), phi)


def l_leq_by_idempotents(psi: Hom, phi: Hom) -> bool:
    eta_psi, eta_phi = idempotent_of(psi), idempotent_of(phi)
    return eq_in_M(eta_psi, compose(eta_psi, eta_phi))


def idempotent_leq(e: Hom, f: Hom) -> bool:
    same_alphabet(e, f)
    for h in (e, f):
        if not is_idempotent(h):
            raise DomainError(f"{h} is not an idempotent")
    return eq_in_M(e, compose(e, f)) and eq_in_M(e, compose(f, e))


def r_multiplier(psi: Hom, phi: Hom) -> Hom:
    """alpha with psi = phi alpha."""
    if not r_leq(psi, phi):
        raise OrderViolation(f"{psi} is not R-below {phi}")
    if not psi.table:
        return psi
    return compose(inverse(phi), psi)


def l_multiplier(psi: Hom, phi: Hom) -> Hom:
    """alpha with psi = alpha phi."""
    if not l_leq(psi, phi):
        raise OrderViolation(f"{psi} is not L-below {phi}")
    if not psi.table:
        return max_extend(psi)
    return compose(psi, inverse(phi))


def level_images(phi: Hom, length: int) -> Hom:
    """Essentially equal restriction whose shorter images are padded to ``length``."""
    out = []
    for x, y in phi.table:
        for w in words_of_length(phi.k, max(0, length - len(y))):
            out.append((x + w, y + w))
    return Hom(phi.k, tuple(sorted(out)))


def align_image_codes(psi: Hom, phi: Hom) -> tuple[Hom, Hom]:
    """Restrictions psi0, phi0 whose image codes satisfy imC(psi0) inside imC(phi0).

    Once every image has length at least l(imC phi), an image word of psi
    whose ends lie in Im(phi) has a prefix in imC(phi), so it is a literal
    member of the leveled image code of phi.
    """
    if not r_leq(psi, phi) or not psi.table:
        raise OrderViolation(f"{psi} is not R-below {phi} with nonempty image")
    length = max(code_depth(psi.images), code_depth(phi.images))
    return level_images(psi, length), level_images(phi, length)


def is_surjective_elem(phi: Hom) -> bool:
    return is_maximal(image_code(phi), phi.k)


def is_monomorphism(phi: Hom) -> bool:
    pc = pc_form(phi)
    return is_maximal(pc.domain, phi.k) and len(set(pc.images)) == len(pc.images)


def is_epimorphism_by_order(phi: Hom) -> bool:
    return r_equiv(phi, identity(phi.k))


def is_monomorphism_by_order(phi: Hom) -> bool:
    return l_equiv(phi, identity(phi.k))
