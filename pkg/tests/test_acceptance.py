"""Acceptance suite: one test per criterion, one pass/fail line each.

The heavy differential sweep (every ordered pair of groups for every
squarefree order up to 42, with the generic cross-check up to 30) runs once
as a session fixture; the per-criterion tests assert against its recorded
check results.  Run with `pytest tests/test_acceptance.py -v -s` to see the
per-criterion lines.  All comparisons are exact integer equalities.
"""

import pytest

from skewbrace.counting import (
    corollary_cases,
    count_matrix,
    count_skew_braces,
    pair_context,
    pq_closed_form,
    three_prime_closed_form,
)
from skewbrace.groups import canonicalize, enumerate_groups, structure_params
from skewbrace.numtheory import crt_combine, is_squarefree, multiplicative_order
from skewbrace.oracle import oracle_counts, verify_order

SWEEP_MAX = 42
GENERIC_MAX = 30
SQUAREFREE = [n for n in range(1, SWEEP_MAX + 1) if is_squarefree(n)]


def _report(criterion: int, ok: bool, message: str) -> None:
    print(f"ACCEPTANCE {criterion:2d} {'PASS' if ok else 'FAIL'}: {message}")
    assert ok, message


@pytest.fixture(scope="session")
def sweep():
    reports = {}
    for n in SQUAREFREE:
        strategy = "both" if n <= GENERIC_MAX else "quintuple"
        reports[n] = verify_order(n, strategy=strategy)
    return reports


def _check_named(reports, name: str) -> list[str]:
    bad = []
    for n, rep in reports.items():
        for p in rep.pairs:
            for c in p.checks:
                if c.name == name and not c.ok:
                    bad.append(f"n={n} ({p.M}, {p.A}): {c.detail}")
    return bad


def test_criterion_1_formula_oracle_agreement(sweep):
    bad = _check_named(sweep, "orbit count vs closed form")
    for n, rep in sweep.items():
        if rep.strategy == "both":
            bad.extend(
                f"n={n} {c.name}" for c in rep.order_checks
                if c.name.startswith("strategy equivalence") and not c.ok
            )
    _report(
        1, not bad,
        f"oracle b equals 2^omega(g) w (or 0) for every pair, all squarefree "
        f"n <= {SWEEP_MAX}; generic cross-check to {GENERIC_MAX}"
        + ("" if not bad else f"; first: {bad[0]}"),
    )


def test_criterion_2_small_order_totals(sweep):
    expected = {6: 6, 10: 6, 14: 6, 21: 8, 22: 6, 26: 6}
    got = {n: count_matrix(n).total for n in expected}
    oracle_totals = {n: sweep[n].total_oracle for n in expected}
    ok = got == expected and oracle_totals == expected
    _report(2, ok, f"count totals {got} match 2q+2 values {expected}")


def test_criterion_3_two_prime_tables():
    pairs = [(3, 2), (5, 2), (7, 2), (7, 3), (11, 2), (13, 2), (11, 5)]
    bad = []
    for p, q in pairs:
        table = pq_closed_form(p, q)
        generic = count_matrix(p * q)
        if table.entries != generic.entries or table.total != generic.total:
            bad.append((p, q))
    _report(3, not bad, f"two-prime closed form matches the generic matrix for {pairs}")


def test_criterion_4_three_prime_reproduction(sweep):
    t = three_prime_closed_form(2, 3, 7)
    generic = count_matrix(42)
    ok = (
        t.expand().entries == generic.entries
        and t.row_totals == (13, 9, 13, 9, 17, 17)
        and t.col_totals == (6, 12, 12, 24, 12, 12)
        and t.total == generic.total == 78
        and sweep[42].ok
        and sweep[42].total_oracle == 78
    )
    _report(4, ok, "expanded three-prime table, marginals, and total 78 match; "
                   "order-42 oracle sweep passes")


def _order_r_unit(q: int, r: int, skip: int = 0) -> int:
    found = 0
    for x in range(2, q):
        if multiplicative_order(x, q) == r:
            if found == skip:
                return x
            found += 1
    raise AssertionError(f"no unit of order {r} mod {q}")


def _seven_prime_descriptor(d: int, e_orders: dict[int, int], skip_at: int | None = None):
    primes = tuple(e_orders)
    residues = {}
    for q, r in e_orders.items():
        if r == 1:
            residues[q] = 1
        else:
            residues[q] = _order_r_unit(q, r, skip=1 if q == skip_at else 0)
    e = 1
    for q in primes:
        e *= q
    k = crt_combine(residues, primes)
    return canonicalize(d, e, k)


def test_criterion_5_seven_prime_example():
    G1 = _seven_prime_descriptor(42, {43: 2, 127: 3, 211: 7, 337: 21})
    G2 = _seven_prime_descriptor(42, {43: 2, 127: 3, 211: 7, 337: 21}, skip_at=211)
    G3 = _seven_prime_descriptor(42, {43: 42, 127: 21, 211: 14, 337: 7})
    G4 = _seven_prime_descriptor(14, {3: 1, 43: 2, 127: 7, 211: 7, 337: 14})
    assert G1 != G2  # same profile, different cyclic subgroups
    assert structure_params(G1).z == 1 and structure_params(G4).z == 3
    for G in (G1, G2, G3):
        assert pair_context(G, G).omega_g == 4
    assert pair_context(G1, G1).w == 12
    assert pair_context(G4, G1).w == 6

    values = {
        (i, j): count_skew_braces(Mi, Aj)
        for i, Mi in enumerate((G1, G2, G3, G4), start=1)
        for j, Aj in enumerate((G1, G2, G3, G4), start=1)
    }
    ok = all(
        v == (96 if 4 in key else 192)
        for key, v in values.items()
    )
    _report(5, ok, "seven-prime example: 192 within {G1,G2,G3}, 96 when G4 is involved")


def test_criterion_6_power_formula(sweep):
    bad = [
        f"n={n}: {c.detail}"
        for n, rep in sweep.items()
        for c in rep.order_checks
        if c.name == "power formula" and not c.ok
    ]
    _report(6, not bad,
            f"closed power formula matches iterated multiplication "
            f"(exhaustive to 21, sampled to {SWEEP_MAX})")


def test_criterion_7_pair_multiplicity(sweep):
    bad = _check_named(sweep, "pair multiplicity")
    _report(7, not bad,
            "every subgroup arises from exactly gamma phi(e) w / phi(delta) "
            "quintuples, in a single family")


def test_criterion_8_membership_table_iff(sweep):
    bad = _check_named(sweep, "membership rows vs relation scan")
    _report(8, not bad,
            "membership predicate agrees with direct build-and-test over the "
            "full quintuple space, every family, every pair")


def test_criterion_9_stabilizer_table(sweep):
    bad = _check_named(sweep, "stabiliser index table")
    bad += _check_named(sweep, "per-prime solution counts")
    _report(9, not bad,
            "measured orbit sizes equal the per-prime index products and "
            "local solution counts equal their closed forms")


def test_criterion_10_weighted_count(sweep):
    bad = _check_named(sweep, "orbit-weighted count")
    _report(10, not bad,
            "the orbit-weighted quintuple sum is integral and equals the "
            "closed-form count for every pair")


def test_criterion_11_brace_axioms(sweep):
    bad = _check_named(sweep, "brace construction")
    _report(11, not bad,
            "every constructed brace satisfies all axioms on all n^3 triples; "
            "non-isomorphic braces per pair match the count")


def test_criterion_12_corollary_shortcuts():
    bad = []
    for n in range(1, 101):
        if not is_squarefree(n):
            continue
        groups = enumerate_groups(n)
        for M in groups:
            for A in groups:
                value = corollary_cases(M, A)
                if value is not None and value != count_skew_braces(M, A):
                    bad.append((n, str(M), str(A)))
    _report(12, not bad,
            "cyclic/dihedral shortcut values match the general formula for "
            "all pairs up to n = 100")


def test_unequal_orbit_sizes_witnessed():
    # orbits of regular subgroups are not all the same size in general;
    # record a concrete witness from the sweep range
    G = canonicalize(3, 7, 2)
    rep = oracle_counts(G, G)
    print(f"NOTE: orbit sizes for (G(3,7,2), G(3,7,2)) are {rep.orbit_sizes}")
    assert len(set(rep.orbit_sizes)) > 1
