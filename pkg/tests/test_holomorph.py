import random

import pytest

from skewbrace.errors import OwnerMismatch, ShapeError
from skewbrace.groups import (
    GroupDescriptor,
    GroupElement,
    elements,
    enumerate_groups,
    structure_params,
)
from skewbrace.holomorph import (
    Automorphism,
    HolElement,
    aut_apply,
    aut_compose,
    aut_elements,
    conjugate_by_aut,
    hol_act,
    hol_identity,
    hol_inv,
    hol_mul,
    hol_pow,
    hol_tables,
    identity_aut,
    y_power,
)
from skewbrace.numtheory import euler_phi, is_squarefree, units

S3 = GroupDescriptor(2, 3, 2)
SQUAREFREE_42 = [n for n in range(1, 43) if is_squarefree(n)]


def test_aut_apply_examples():
    sigma = GroupElement(1, 0, S3)
    tau = GroupElement(0, 1, S3)
    theta = Automorphism(1, 1, S3)
    assert aut_apply(identity_aut(S3), tau) == tau
    assert aut_apply(theta, tau) == GroupElement(1, 1, S3)  # theta(tau) = sigma tau (z = 1)
    assert aut_apply(theta, sigma) == sigma
    # (theta phi_2)(sigma tau) = theta(sigma^2 tau) = sigma^3 tau = tau
    alpha = Automorphism(1, 2, S3)
    assert aut_apply(alpha, GroupElement(1, 1, S3)) == GroupElement(0, 1, S3)


def test_aut_compose_semidirect_relation():
    # phi_s . theta = theta^s . phi_s
    for G in (S3, enumerate_groups(42)[3]):
        sp = structure_params(G)
        for s in units(G.e):
            phi = Automorphism(0, s, G)
            theta = Automorphism(1, 1 % G.e, G)
            left = aut_compose(phi, theta)
            right = aut_compose(Automorphism(s % sp.g, 1 % G.e, G), phi)
            assert left == right


def test_aut_group_closure_order_s3():
    auts = list(aut_elements(S3))
    assert len(auts) == 6
    table = {(a.key(), b.key()): aut_compose(a, b).key() for a in auts for b in auts}
    assert len(set(table.values())) == 6  # closed, and every element reached


def test_aut_compose_matches_pointwise_everywhere():
    # table construction asserts the convention; touching it for all orders
    # up to 42 exercises that check
    for n in SQUAREFREE_42:
        for G in enumerate_groups(n):
            hol_tables(G)


def test_hol_mul_examples():
    sig = GroupElement(1, 0, S3)
    h1 = HolElement(sig, identity_aut(S3))
    assert hol_mul(h1, h1) == HolElement(GroupElement(2, 0, S3), identity_aut(S3))
    theta = Automorphism(1, 1, S3)
    assert hol_mul(HolElement(GroupElement(0, 0, S3), theta), h1) == HolElement(sig, theta)
    # [tau, phi_2][sigma, id] = [sigma tau, phi_2]
    tau = GroupElement(0, 1, S3)
    phi2 = Automorphism(0, 2, S3)
    assert hol_mul(HolElement(tau, phi2), h1) == HolElement(GroupElement(1, 1, S3), phi2)


def test_hol_inverse_exhaustive():
    for n in SQUAREFREE_42:
        for G in enumerate_groups(n):
            T = hol_tables(G)
            ident = T.id_spos
            for i in range(T.n_hol):
                assert T.hol_mul_list(T.hol_inv_list(i), i) == ident
                assert T.hol_mul_list(i, T.hol_inv_list(i)) == ident


def test_hol_act_examples_and_action_law():
    one = GroupElement(0, 0, S3)
    sig = GroupElement(1, 0, S3)
    assert hol_act(hol_identity(S3), sig) == sig
    assert hol_act(HolElement(sig, identity_aut(S3)), one) == sig
    # [tau, phi_2] . sigma = tau sigma^2 = sigma tau
    tau = GroupElement(0, 1, S3)
    h = HolElement(tau, Automorphism(0, 2, S3))
    assert hol_act(h, sig) == GroupElement(1, 1, S3)

    rng = random.Random(7)
    for G in (S3, enumerate_groups(30)[3], enumerate_groups(42)[4]):
        T = hol_tables(G)
        all_elems = list(elements(G))
        for _ in range(200):
            h1 = T.hol_at(rng.randrange(T.n_hol))
            h2 = T.hol_at(rng.randrange(T.n_hol))
            y = rng.choice(all_elems)
            assert hol_act(hol_mul(h1, h2), y) == hol_act(h1, hol_act(h2, y))


def test_hol_action_faithful_translations_regular():
    for G in (S3, enumerate_groups(30)[1]):
        T = hol_tables(G)
        seen = set()
        for i in range(T.n_hol):
            perm = tuple(T.hol_act_idx(i, y) for y in range(G.n))
            assert perm not in seen
            seen.add(perm)
        # left translations reach every point from the identity exactly once
        images = {T.hol_act_idx(x * T.n_aut + T.id_spos, 0) for x in range(G.n)}
        assert images == set(range(G.n))


def test_hol_size_by_closure():
    for n in SQUAREFREE_42:
        for G in enumerate_groups(n):
            T = hol_tables(G)
            sp = structure_params(G)
            gens = [T.hol_index(HolElement(GroupElement(1 % G.e, 0, G), identity_aut(G)))]
            if G.d > 1:
                gens.append(T.hol_index(HolElement(GroupElement(0, 1, G), identity_aut(G))))
            if sp.g > 1:
                gens.append(T.hol_index(HolElement(GroupElement(0, 0, G), Automorphism(1, 1, G))))
            for s in units(G.e):
                gens.append(T.hol_index(HolElement(GroupElement(0, 0, G), Automorphism(0, s, G))))
            seen = {T.id_spos}
            frontier = [T.id_spos]
            while frontier:
                fresh = []
                for v in frontier:
                    for g_ in gens:
                        w = T.hol_mul_list(v, g_)
                        if w not in seen:
                            seen.add(w)
                            fresh.append(w)
                frontier = fresh
            assert len(seen) == G.n * sp.g * euler_phi(G.e) == T.n_hol


def test_y_power_shape_and_small_cases():
    Y = HolElement(GroupElement(1, 1, S3), Automorphism(1, 2, S3))
    assert y_power(Y, 0) == hol_identity(S3)
    assert y_power(Y, 1) == Y
    bad = HolElement(GroupElement(1, 0, S3), Automorphism(1, 2, S3))
    with pytest.raises(ShapeError):
        y_power(bad, 2)


def test_y_power_matches_iteration_randomized():
    rng = random.Random(20240817)
    pool = [G for n in SQUAREFREE_42 if n > 21 for G in enumerate_groups(n)]
    checked = 0
    while checked < 1000:
        G = rng.choice(pool)
        sp = structure_params(G)
        u = rng.randrange(G.e)
        v = rng.randrange(sp.g)
        t = rng.choice(units(G.e))
        j = rng.randrange(2 * G.n + 1)
        Y = HolElement(GroupElement(u, 1 % G.d, G), Automorphism(v, t, G))
        assert y_power(Y, j) == hol_pow(Y, j)
        checked += 1


def test_conjugate_by_aut_examples():
    h = HolElement(GroupElement(2, 1, S3), Automorphism(1, 2, S3))
    assert conjugate_by_aut(identity_aut(S3), h) == h
    # translations conjugate to translations by psi(x)
    for G in (S3, enumerate_groups(21)[1]):
        for psi in aut_elements(G):
            for x in elements(G):
                tr = HolElement(x, identity_aut(G))
                out = conjugate_by_aut(psi, tr)
                assert out == HolElement(aut_apply(psi, x), identity_aut(G))


def test_conjugation_closed_form_on_x_type():
    # psi [sigma^a, theta^c] psi^-1 = [sigma^(a s), theta^(c s)] for
    # psi = theta^r phi_s: the x-type elements form an eigenspace
    for G in (S3, enumerate_groups(42)[3]):
        sp = structure_params(G)
        for r, s in ((0, 1), (1, 1 % G.e), (0, list(units(G.e))[-1]), (2 % sp.g, 2 % G.e)):
            if s not in units(G.e) and not (G.e == 1 and s == 0):
                continue
            psi = Automorphism(r % sp.g, s, G)
            for a in range(G.e):
                for c in range(sp.g):
                    X = HolElement(GroupElement(a, 0, G), Automorphism(c, 1 % G.e, G))
                    got = conjugate_by_aut(psi, X)
                    want = HolElement(
                        GroupElement((a * s) % G.e, 0, G),
                        Automorphism((c * s) % sp.g, 1 % G.e, G),
                    )
                    assert got == want


def test_owner_mismatch_raises():
    other = GroupDescriptor(1, 6, 1)
    with pytest.raises(OwnerMismatch):
        hol_mul(hol_identity(S3), hol_identity(other))
    with pytest.raises(OwnerMismatch):
        aut_apply(identity_aut(S3), GroupElement(0, 0, other))


def test_hol_inv_object_level():
    rng = random.Random(5)
    for G in (S3, enumerate_groups(35)[0]):
        T = hol_tables(G)
        for _ in range(50):
            h = T.hol_at(rng.randrange(T.n_hol))
            assert hol_mul(hol_inv(h), h) == hol_identity(G)
