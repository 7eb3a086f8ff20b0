import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusiontransfer.burnside import (
    BurnsideError,
    canonicalize,
    characteristic_biset,
    characteristic_idempotent,
    check_conjugation_commutation,
    check_idempotent_commutation,
    check_stability_characterization,
    compose,
    default_precision,
    epsilon,
    format_element,
    identity,
    idempotent_from,
    is_left_stable,
    is_right_stable,
    opposite,
    parse_element,
    random_element,
    restriction_biset,
    transfer_biset,
    verify_characteristic,
)
from fusiontransfer.catalog import catalog_group
from fusiontransfer.fusion import focal_subgroup, fusion_system
from fusiontransfer.groups import sylow_subgroup

from oracles import element_biset_compose, group_as_biset

RING = ["cyclic:4", "dihedral:8", "quaternion:8", "product:cyclic:3xcyclic:3", "symmetric:3"]


def whole(name):
    return catalog_group(name).whole


@given(st.sampled_from(RING), st.integers(0, 2**32))
def test_mackey_matches_explicit_bisets(name, seed):
    S = whole(name)
    rng = random.Random(seed)
    X = random_element(S, S, rng, terms=2)
    Y = random_element(S, S, rng, terms=2)
    assert compose(X, Y).coeffs == element_biset_compose(X, Y)


@given(st.integers(0, 2**32))
def test_mackey_between_different_groups(seed):
    # A(S, N) and A(N, S) with N the Klein four subgroup of D8 inside S4
    F = fusion_system(catalog_group("symmetric:4"), 2)
    S, N = F.S, focal_subgroup(F)
    rng = random.Random(seed)
    X = random_element(N, S, rng, terms=2)  # in A(N, S)
    Y = random_element(S, N, rng, terms=2)  # in A(S, N)
    assert compose(X, Y).coeffs == element_biset_compose(X, Y)
    assert compose(Y, X).coeffs == element_biset_compose(Y, X)


@given(st.sampled_from(RING), st.integers(0, 2**32))
def test_canonical_form_is_orbit_invariant(name, seed):
    S = whole(name)
    G = S.group
    rng = random.Random(seed)
    gen = random_element(S, S, rng, terms=1).terms()[0][0]
    s, t = rng.randrange(G.order), rng.randrange(G.order)
    phi = gen.as_dict()
    twisted_P = [G.conj(s, u) for u in gen.P]
    twisted = {G.conj(s, u): G.conj(t, phi[u]) for u in gen.P}
    assert canonicalize(S, S, twisted_P, twisted) == gen


@given(st.sampled_from(RING), st.integers(0, 2**32))
def test_ring_laws(name, seed):
    S = whole(name)
    rng = random.Random(seed)
    X, Y, Z = (random_element(S, S, rng, terms=2) for _ in range(3))
    one = identity(S)
    assert compose(one, X) == X == compose(X, one)
    assert compose(X, Y + Z) == compose(X, Y) + compose(X, Z)
    assert epsilon(compose(X, Y)) == epsilon(X) * epsilon(Y)
    assert opposite(compose(X, Y)) == compose(opposite(Y), opposite(X))
    assert opposite(opposite(X)) == X


@pytest.mark.parametrize(
    "name,p", [("symmetric:4", 2), ("alternating:6", 2), ("GL23", 2), ("alternating:5", 2), ("extraspecial:27-:2", 3)]
)
def test_characteristic_biset_is_the_group(name, p):
    F = fusion_system(catalog_group(name), p)
    Omega = characteristic_biset(F)
    assert Omega.coeffs == group_as_biset(F.S, F.G)
    assert epsilon(Omega) == F.G.order // F.S.order
    assert verify_characteristic(F, Omega).ok


def test_identity_is_not_characteristic_for_nontrivial_fusion(s4_2):
    rep = verify_characteristic(s4_2, identity(s4_2.S))
    assert rep.f_generated and rep.eps_unit
    assert not rep.left_stable and not rep.right_stable


def test_s4_idempotent(s4_2):
    w = characteristic_idempotent(s4_2)
    assert w.modulus == 8  # S/S' has exponent 2, so k = 3
    assert compose(w, w) == w
    assert epsilon(w) == 1
    # frozen: [S, id] + 5 [V4, id] + 3 [V4, c] with c an outer automorphism of order 3
    assert sorted((g.order, c) for g, c in w.coeffs.items()) == [(4, 3), (4, 5), (8, 1)]
    assert is_left_stable(s4_2, w) and is_right_stable(s4_2, w)


def test_trivial_system_idempotent_is_identity():
    F = fusion_system(catalog_group("dihedral:8"), 2)
    assert characteristic_idempotent(F) == identity(F.S, 2 ** default_precision(F))


def test_seed_independence_at_p3():
    F = fusion_system(catalog_group("extraspecial:27-:2"), 3)
    k = default_precision(F)
    Omega = characteristic_biset(F)
    w = idempotent_from(Omega, 3, k)
    assert idempotent_from(4 * Omega, 3, k) == w
    assert idempotent_from(compose(Omega, Omega), 3, k) == w


def test_idempotent_size_bound():
    F = fusion_system(catalog_group("wreath:3"), 3)
    with pytest.raises(BurnsideError):
        characteristic_idempotent(F)


def test_serialization_round_trip(s4_2):
    w = characteristic_idempotent(s4_2)
    text = format_element(w)
    assert len(text.splitlines()) == 3
    assert parse_element(text, s4_2.S, s4_2.S, w.modulus) == w
    with pytest.raises(BurnsideError):
        parse_element("2 [(1 2) ; (1 2)]", s4_2.S, s4_2.S)


def test_commutation_s4_klein(s4_2):
    V4 = focal_subgroup(s4_2)
    rep = check_idempotent_commutation(s4_2, V4)
    assert rep.with_restriction and rep.with_transfer
    assert check_conjugation_commutation(s4_2, V4)


def test_restriction_and_transfer_shapes(s4_2):
    V4 = focal_subgroup(s4_2)
    r, t = restriction_biset(V4, s4_2.S), transfer_biset(V4, s4_2.S)
    assert (r.source, r.target) == (V4, s4_2.S)
    assert (t.source, t.target) == (s4_2.S, V4)
    # restriction after transfer from N to S is the sum over S/N of conjugations
    assert epsilon(compose(r, t)) == 2


@given(st.integers(0, 2**32))
def test_stability_characterization(seed):
    F = fusion_system(catalog_group("symmetric:4"), 2)
    w = characteristic_idempotent(F)
    rng = random.Random(seed)
    X = random_element(F.S, F.S, rng, terms=3, modulus=w.modulus)
    assert check_stability_characterization(F, X, omega=w).agree
    stable = compose(X, w)
    rep = check_stability_characterization(F, stable, omega=w)
    assert rep.absorbs and rep.right_stable


def test_mismatched_spaces():
    S = whole("dihedral:8")
    T = whole("cyclic:4")
    with pytest.raises(BurnsideError):
        compose(identity(S), identity(T))
    with pytest.raises(BurnsideError):
        identity(S, 4) + identity(S, 8)
    assert identity(S) + identity(S, 4) == 2 * identity(S, 4)


def test_sylow_identity_generator():
    G = catalog_group("symmetric:3")
    S = sylow_subgroup(G, 3)
    assert len(identity(S).coeffs) == 1
