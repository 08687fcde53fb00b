import pytest

from skewbrace.counting import (
    corollary_cases,
    count_matrix,
    count_skew_braces,
    pair_context,
    pq_closed_form,
    three_prime_closed_form,
)
from skewbrace.errors import CongruenceFails, OrderMismatch
from skewbrace.groups import GroupDescriptor, canonicalize, enumerate_groups
from skewbrace.numtheory import is_squarefree


def test_pair_context_examples():
    S3 = GroupDescriptor(2, 3, 2)
    ctx = pair_context(S3, S3)
    assert (ctx.w, ctx.gamma, ctx.e, ctx.omega_g) == (1, 3, 3, 1)
    assert ctx.gamma_divides_e

    M = canonicalize(2, 21, 20)
    A = canonicalize(6, 7, 3)
    ctx = pair_context(M, A)
    assert ctx.gamma == 21 and ctx.e == 7 and not ctx.gamma_divides_e


def test_pair_context_order_mismatch():
    with pytest.raises(OrderMismatch):
        pair_context(GroupDescriptor(1, 6, 1), GroupDescriptor(1, 10, 1))


def test_count_examples():
    C6 = GroupDescriptor(1, 6, 1)
    S3 = GroupDescriptor(2, 3, 2)
    assert count_skew_braces(C6, C6) == 1  # both cyclic
    assert count_skew_braces(S3, S3) == 2 * (2 - 1)  # nonabelian pq
    # dihedral M with d > 2 on the additive side
    D21 = canonicalize(2, 21, 20)
    F42 = canonicalize(6, 7, 3)
    assert count_skew_braces(D21, F42) == 0


def test_count_matrix_totals():
    assert count_matrix(6).total == 6
    assert count_matrix(21).total == 8
    assert count_matrix(42).total == 78
    assert count_matrix(1).total == 1


def test_zero_iff_gamma_does_not_divide():
    for n in range(1, 101):
        if not is_squarefree(n):
            continue
        groups = enumerate_groups(n)
        for M in groups:
            for A in groups:
                ctx = pair_context(M, A)
                assert (count_skew_braces(M, A) == 0) == (not ctx.gamma_divides_e)


def test_cyclic_additive_column_is_one():
    for n in (6, 21, 30, 42, 66, 78):
        groups = enumerate_groups(n)
        cyclic = groups[0]
        assert cyclic.is_cyclic
        for M in groups:
            assert count_skew_braces(M, cyclic) == 1


@pytest.mark.parametrize("p,q", [(3, 2), (5, 2), (7, 2), (7, 3), (11, 2), (13, 2), (11, 5)])
def test_pq_closed_form_matches_matrix(p, q):
    table = pq_closed_form(p, q)
    generic = count_matrix(p * q)
    assert table.groups == generic.groups
    assert table.entries == generic.entries
    assert table.total == generic.total == 2 * q + 2


def test_pq_congruence_failure():
    with pytest.raises(CongruenceFails):
        pq_closed_form(5, 3)  # 5 != 1 mod 3
    assert count_matrix(15).total == 1


def test_three_prime_closed_form_237():
    t = three_prime_closed_form(2, 3, 7)
    assert t.matrix[5][5] == 2 * (2 - 1) * (3 - 1) == 4
    assert t.row_totals == (13, 9, 13, 9, 17, 17)
    assert t.col_totals == (6, 12, 12, 24, 12, 12)
    assert t.total == 78
    expanded = t.expand()
    generic = count_matrix(42)
    assert expanded.entries == generic.entries
    assert expanded.total == generic.total


def test_three_prime_closed_form_other_primes():
    t = three_prime_closed_form(2, 5, 11)
    assert t.expand().entries == count_matrix(110).entries
    assert t.total == count_matrix(110).total
    t = three_prime_closed_form(3, 7, 43)
    assert t.expand().entries == count_matrix(3 * 7 * 43).entries


def test_three_prime_congruence_failure_lists_violations():
    with pytest.raises(CongruenceFails) as exc:
        three_prime_closed_form(2, 3, 5)
    assert any("5" in v for v in exc.value.violated)


def test_corollary_cases_consistency():
    for n in (6, 10, 30, 42, 66):
        groups = enumerate_groups(n)
        for M in groups:
            for A in groups:
                value = corollary_cases(M, A)
                if value is not None:
                    assert value == count_skew_braces(M, A)


def test_corollary_case_values():
    S3 = GroupDescriptor(2, 3, 2)
    C6 = GroupDescriptor(1, 6, 1)
    assert corollary_cases(C6, S3) == 2  # cyclic M, omega(g) = 1
    assert corollary_cases(S3, C6) == 1  # cyclic A
    D15 = canonicalize(2, 15, 14)
    C30 = GroupDescriptor(1, 30, 1)
    assert corollary_cases(C30, D15) == 4  # dihedral A: 2^omega(15)
    assert corollary_cases(D15, D15) == 4
    G42 = canonicalize(6, 7, 3)
    D21 = canonicalize(2, 21, 20)
    assert corollary_cases(D21, G42) == 0  # dihedral M, d > 2
    assert corollary_cases(D21, D21) == 2 ** 2  # dihedral both sides, d = 2
    assert corollary_cases(G42, canonicalize(2, 21, 8)) is None  # no shortcut


def test_count_depends_only_on_invariants():
    # two non-isomorphic groups with identical (d, e, z, g): counts agree
    # against every group of the order, in both roles
    G1 = canonicalize(3, 91, 9)  # <9> mod 91 has order 3
    G2 = canonicalize(3, 91, 16)
    assert G1 != G2
    from skewbrace.groups import structure_params

    assert structure_params(G1) == structure_params(G2)
    for other in enumerate_groups(273):
        assert count_skew_braces(G1, other) == count_skew_braces(G2, other)
        assert count_skew_braces(other, G1) == count_skew_braces(other, G2)
