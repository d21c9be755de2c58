import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import homs
from thmonoid.core import OrderViolation
from thmonoid.density import (
    CONSTRUCTORS,
    applicable,
    l_between,
    l_between_in_Rclass,
    r_between,
    r_between_in_Lclass,
    verify_between,
)
from thmonoid.green import l_equiv, r_equiv
from thmonoid.hom import Hom, compose, identity, zero


def H(*pairs, k=2):
    return Hom.from_pairs(k, pairs)


def test_r_between_examples():
    chi = r_between(identity(2), identity(2, ["b"]))
    assert chi == identity(2, ["aa", "b"])
    assert verify_between("r", identity(2), identity(2, ["b"]), chi)
    phi, psi = identity(2, ["a"]), identity(2, ["aa"])
    chi = r_between(phi, psi)
    assert chi == identity(2, ["aa", "aba"])
    assert verify_between("r", phi, psi, chi)
    with pytest.raises(OrderViolation):
        r_between(phi, phi)


def test_l_between_examples():
    merge = H(("a", "a"), ("b", "a"))
    chi = l_between(identity(2), merge)
    assert verify_between("l", identity(2), merge, chi)
    swap = H(("a", "a"), ("b", "b"))
    chi = l_between(swap, zero(2))
    assert verify_between("l", swap, zero(2), chi)
    assert chi.domain and chi.domain != swap.domain
    with pytest.raises(OrderViolation):
        l_between(merge, merge)


def test_l_between_in_Rclass_examples():
    # finer phi, coarser psi, both onto A*
    phi, psi = H(("a", "a"), ("b", "b")), H(("aa", "a"), ("ab", "a"), ("b", "b"))
    assert r_equiv(phi, psi)
    chi = l_between_in_Rclass(phi, psi)
    assert verify_between("l_in_r", phi, psi, chi)
    # psi with a smaller domain than phi
    psi2 = H(("aa", "a"), ("b", "b"))
    chi2 = l_between_in_Rclass(identity(2), psi2)
    assert verify_between("l_in_r", identity(2), psi2, chi2)
    with pytest.raises(OrderViolation):
        l_between_in_Rclass(phi, phi)


def test_r_between_in_Lclass_examples():
    phi, psi = H(("a", "a"), ("b", "b")), H(("a", "aa"), ("b", "ab"))
    assert l_equiv(phi, psi)
    chi = r_between_in_Lclass(phi, psi)
    assert verify_between("r_in_l", phi, psi, chi)
    with pytest.raises(OrderViolation):
        r_between_in_Lclass(phi, phi)
    with pytest.raises(OrderViolation):
        r_between_in_Lclass(identity(2), H(("a", "a")))


def test_verifier_rejects_endpoints():
    phi, psi = identity(2), identity(2, ["b"])
    assert not verify_between("r", phi, psi, phi)
    assert not verify_between("r", phi, psi, psi)


@given(st.sampled_from([2, 3]).flatmap(lambda k: st.tuples(homs(k, 3), homs(k, 3))), st.sampled_from(sorted(CONSTRUCTORS)))
def test_witnesses_pass_the_deciders(pair, kind):
    phi, alpha = pair
    psi = compose(phi, alpha) if kind.startswith("r") else compose(alpha, phi)
    for a, b in ((phi, psi), (phi, alpha), (alpha, phi)):
        if applicable(kind, a, b):
            assert verify_between(kind, a, b, CONSTRUCTORS[kind](a, b))
        else:
            with pytest.raises(OrderViolation):
                CONSTRUCTORS[kind](a, b)
