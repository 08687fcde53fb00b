"""Aut(A)-orbits of regular subgroups and the count identities hanging off
them.

The number of skew braces b(M, A) is the number of Aut(A)-orbits on the set
of regular subgroups of Hol(A) isomorphic to M, where psi in Aut(A) acts by
elementwise conjugation [x, alpha] -> [psi(x), psi alpha psi^-1].  Orbit
sizes are stabiliser indices; they are predicted prime by prime from the
membership rows, and the orbit-weighted quintuple count reproduces the
closed-form b(M, A) exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..counting import count_skew_braces, pair_context
from ..errors import GammaNotDividing, NonIntegral
from ..groups import GroupDescriptor, aut_group_order
from ..holomorph import hol_tables
from ..numtheory import euler_phi
from .partition import family_pair_multiplicity, prime_partition
from .quintuples import local_rows
from .subgroups import RegularSubgroup, enumerate_regular_subgroups


@dataclass(frozen=True)
class OrbitData:
    """Orbit partition of a conjugation-closed list of subgroups."""

    orbits: tuple[tuple[int, ...], ...]  # member indices per orbit
    orbit_of: tuple[int, ...]  # orbit id per subgroup
    orbit_sizes: tuple[int, ...]  # per subgroup: size of its orbit
    stabilizer_orders: tuple[int, ...]  # per subgroup: |Stab_Aut(A)|

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def representatives(self) -> tuple[int, ...]:
        return tuple(min(members) for members in self.orbits)


def aut_orbits(subgroups, A: GroupDescriptor) -> OrbitData:
    """Partition subgroups into conjugation orbits under all of Aut(A).

    The input list must be closed under conjugation (any full enumeration
    for a fixed pair is).  Deterministic: orbits appear in order of their
    smallest member index.
    """
    T = hol_tables(A)
    keys = [np.asarray(s.key, dtype=np.int64) for s in subgroups]
    index_of = {s.key: i for i, s in enumerate(subgroups)}
    orbit_of = [-1] * len(subgroups)
    orbits: list[tuple[int, ...]] = []
    stab = [0] * len(subgroups)
    for i in range(len(subgroups)):
        if orbit_of[i] >= 0:
            continue
        members = set()
        fixing = 0
        for psi in range(T.n_aut):
            ck = tuple(T.conj_key_by_aut(keys[i], psi).tolist())
            j = index_of.get(ck)
            assert j is not None, "subgroup list not closed under conjugation"
            members.add(j)
            if j == i:
                fixing += 1
        assert len(members) * fixing == T.n_aut, "orbit-stabiliser mismatch"
        oid = len(orbits)
        for j in members:
            orbit_of[j] = oid
            stab[j] = fixing
        orbits.append(tuple(sorted(members)))
    sizes = tuple(len(orbits[orbit_of[i]]) for i in range(len(subgroups)))
    return OrbitData(
        orbits=tuple(orbits),
        orbit_of=tuple(orbit_of),
        orbit_sizes=sizes,
        stabilizer_orders=tuple(stab),
    )


@dataclass(frozen=True)
class OracleReport:
    """Brute-force counts for one ordered pair (M, A)."""

    M: GroupDescriptor
    A: GroupDescriptor
    b_oracle: int  # number of conjugation orbits
    e_prime: int  # number of regular subgroups
    e: int  # Hopf-Galois structure count |Aut M|/|Aut A| * e_prime
    orbit_sizes: tuple[int, ...]  # one entry per orbit, in orbit order
    stabilizer_indices: tuple[int, ...]  # per subgroup = its orbit size


def oracle_counts(
    M: GroupDescriptor,
    A: GroupDescriptor,
    strategy: str = "quintuple",
    *,
    workers: int = 1,
    quintuple_bound: int | None = None,
    generic_bound: int | None = None,
) -> OracleReport:
    subs = enumerate_regular_subgroups(
        M, A, strategy,
        workers=workers, quintuple_bound=quintuple_bound, generic_bound=generic_bound,
    )
    od = aut_orbits(subs, A)
    e_prime = len(subs)
    num = aut_group_order(M) * e_prime
    den = aut_group_order(A)
    assert num % den == 0, f"|Aut(M)| e' not divisible by |Aut(A)| for ({M}, {A})"
    return OracleReport(
        M=M,
        A=A,
        b_oracle=od.orbit_count,
        e_prime=e_prime,
        e=num // den,
        orbit_sizes=tuple(len(o) for o in od.orbits),
        stabilizer_indices=od.orbit_sizes,
    )


def predicted_stabilizer_index(sub: RegularSubgroup) -> int:
    """Product over q | e of the per-prime stabiliser index I_q, read off the
    membership row the subgroup's quintuples sit in.  All quintuples of one
    subgroup must give the same prediction."""
    assert sub.quintuples, "prediction needs quintuple bookkeeping"
    part = prime_partition(sub.M, sub.A, sub.family)
    values = set()
    for q5 in sub.quintuples:
        t = q5[0]
        pred = 1
        for cls in part.classes:
            rows = [r for r in local_rows(part, cls) if t % cls.q == r.t]
            assert rows, f"no membership row matches t at q = {cls.q}"
            contributions = {r.stab_index for r in rows}
            assert len(contributions) == 1
            pred *= contributions.pop()
        values.add(pred)
    assert len(values) == 1, f"quintuples of one subgroup disagree: {values}"
    return values.pop()


def stabilizer_index(sub: RegularSubgroup, orbit_data: OrbitData, position: int) -> dict:
    """Measured orbit size vs the per-prime prediction for the subgroup at
    the given position of the enumeration the orbit data was built from."""
    return {
        "measured": orbit_data.orbit_sizes[position],
        "predicted": predicted_stabilizer_index(sub),
    }


def pair_count_check(sub: RegularSubgroup) -> int:
    """Number of recorded generator quintuples of the subgroup; always
    gamma phi(e) w / phi(delta)."""
    expected = family_pair_multiplicity(pair_context(sub.M, sub.A))
    got = len(sub.quintuples)
    assert got == expected, f"{got} quintuples, expected {expected} for ({sub.M}, {sub.A})"
    return got


def weighted_count_check(
    M: GroupDescriptor,
    A: GroupDescriptor,
    *,
    workers: int = 1,
    subgroups=None,
    orbit_data: OrbitData | None = None,
) -> Fraction:
    """Orbit-weighted quintuple count:

        phi(delta) / (gamma phi(e) w) * sum over quintuples of 1/I

    with I the measured orbit size of the quintuple's subgroup.  Must be an
    integer (else NonIntegral) and equals the closed-form b(M, A)."""
    ctx = pair_context(M, A)
    if not ctx.gamma_divides_e:
        raise GammaNotDividing(f"gamma = {ctx.gamma} does not divide e = {ctx.e}")
    if subgroups is None:
        subgroups = enumerate_regular_subgroups(M, A, "quintuple", workers=workers)
    if orbit_data is None:
        orbit_data = aut_orbits(subgroups, A)
    total = Fraction(0)
    for i, sub in enumerate(subgroups):
        total += Fraction(len(sub.quintuples), orbit_data.orbit_sizes[i])
    value = total * Fraction(
        euler_phi(ctx.delta), ctx.gamma * euler_phi(ctx.e) * ctx.w
    )
    if value.denominator != 1:
        raise NonIntegral(f"weighted count {value} is not an integer for ({M}, {A})")
    assert value == count_skew_braces(M, A), (
        f"weighted count {value} != closed form {count_skew_braces(M, A)}"
    )
    return value


def braces_isomorphic(s1: RegularSubgroup, s2: RegularSubgroup, A: GroupDescriptor) -> bool:
    """True iff some automorphism of A conjugates s1's element set onto
    s2's, i.e. the corresponding skew braces are isomorphic."""
    T = hol_tables(A)
    k1 = np.asarray(s1.key, dtype=np.int64)
    target = s2.key
    return any(
        tuple(T.conj_key_by_aut(k1, psi).tolist()) == target for psi in range(T.n_aut)
    )
