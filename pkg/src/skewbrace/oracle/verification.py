"""Differential verification driver.

For one ordered pair (M, A) this runs every brute-force check against the
closed forms: orbit counts vs the counting formula, the measured generator
parameter set vs the membership rows, per-prime solution counts, stabiliser
indices, the pair-multiplicity and family-uniqueness facts, the orbit-
weighted count, the power-exponent congruences, and explicit brace
construction with full axiom verification.  verify_order() sweeps a whole
order and aggregates a structured report.
"""

import random
from dataclasses import dataclass, field

import numpy as np

from .. import config, kernels
from ..counting import count_skew_braces, pair_context
from ..errors import BoundExceeded
from ..groups import GroupDescriptor, enumerate_groups
from ..holomorph import Automorphism, GroupElement, HolElement, hol_identity, hol_mul, hol_tables, y_power
from ..numtheory import factor_squarefree
from .braces import build_skew_brace, check_skew_brace
from .congruences import adi_congruence_check
from .orbits import (
    aut_orbits,
    braces_isomorphic,
    oracle_counts,
    predicted_stabilizer_index,
    weighted_count_check,
)
from .partition import family_pair_multiplicity, prime_partition
from .quintuples import local_rows, local_tuples, pack_quintuple, predicate_quintuples
from .subgroups import (
    all_regular_subgroups_generic,
    enumerate_regular_subgroups,
    recognize_group,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class PairReport:
    M: GroupDescriptor
    A: GroupDescriptor
    b_formula: int
    b_oracle: int | None
    e_prime: int | None
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[str]:
        return [
            f"({self.M}, {self.A}): {c.name}" + (f" [{c.detail}]" if c.detail else "")
            for c in self.checks
            if not c.ok
        ]


@dataclass
class OrderReport:
    n: int
    strategy: str
    pairs: list[PairReport] = field(default_factory=list)
    order_checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pairs) and all(c.ok for c in self.order_checks)

    def failures(self) -> list[str]:
        out = [f for p in self.pairs for f in p.failures()]
        out.extend(
            f"order {self.n}: {c.name}" + (f" [{c.detail}]" if c.detail else "")
            for c in self.order_checks
            if not c.ok
        )
        return out

    @property
    def total_formula(self) -> int:
        return sum(p.b_formula for p in self.pairs)

    @property
    def total_oracle(self) -> int:
        return sum(p.b_oracle or 0 for p in self.pairs)


class PairOracle:
    """Brute-force state and checks for one ordered pair (M, A)."""

    def __init__(self, M: GroupDescriptor, A: GroupDescriptor, *,
                 workers: int = 1, quintuple_bound: int | None = None):
        self.M, self.A = M, A
        self.ctx = pair_context(M, A)
        self.b_formula = count_skew_braces(M, A)
        self.subgroups = enumerate_regular_subgroups(
            M, A, "quintuple", workers=workers, quintuple_bound=quintuple_bound
        )
        self.orbit_data = aut_orbits(self.subgroups, A)
        self.partitions = (
            {h: prime_partition(M, A, h) for h in range(1, self.ctx.w + 1)}
            if self.ctx.gamma_divides_e
            else {}
        )

    @property
    def b_oracle(self) -> int:
        return self.orbit_data.orbit_count

    def check_formula(self) -> CheckResult:
        ok = self.b_oracle == self.b_formula
        return CheckResult(
            "orbit count vs closed form", ok,
            "" if ok else f"oracle {self.b_oracle} != formula {self.b_formula}",
        )

    def check_membership_scan(self) -> CheckResult:
        """The measured parameter sweep (relations + regularity, table
        arithmetic only) must equal the membership-row set, family by
        family."""
        T = hol_tables(self.A)
        e, g = self.ctx.e, self.ctx.g
        units_arr = np.asarray(T.units, dtype=np.int64)
        for h, part in self.partitions.items():
            measured = kernels.quintuple_relation_scan(
                T.mulA, T.autact, T.autcomp, T.invA, T.autinv,
                T.n, T.d, e, g, T.n_aut, T.phi_e, units_arr, T.id_spos,
                self.ctx.gamma, self.ctx.zeta * self.ctx.delta, part.kappa_h,
            )
            predicted = sorted(pack_quintuple(q, e, g) for q in predicate_quintuples(part))
            if list(measured) != predicted:
                ms, ps = set(measured), set(predicted)
                return CheckResult(
                    "membership rows vs relation scan", False,
                    f"family {h}: {len(ms - ps)} measured-only, {len(ps - ms)} predicted-only",
                )
        return CheckResult("membership rows vs relation scan", True)

    def check_local_counts(self) -> CheckResult:
        """Enumerated per-prime solution counts must match the closed-form
        N_q of each row, and the family size must be their product."""
        for h, part in self.partitions.items():
            total = 1
            for cls in part.classes:
                rows = local_rows(part, cls)
                enumerated = local_tuples(part, cls)
                expected = sum(r.count for r in rows)
                if len(enumerated) != expected:
                    return CheckResult(
                        "per-prime solution counts", False,
                        f"family {h}, q = {cls.q} ({cls.code}): "
                        f"{len(enumerated)} != {expected}",
                    )
                total *= expected
            if total != len(predicate_quintuples(part)):
                return CheckResult(
                    "per-prime solution counts", False,
                    f"family {h}: product {total} != assembled count",
                )
        return CheckResult("per-prime solution counts", True)

    def check_pair_multiplicity(self) -> CheckResult:
        """Each subgroup is generated by exactly gamma phi(e) w / phi(delta)
        recorded quintuples, within a single family."""
        if not self.subgroups:
            return CheckResult("pair multiplicity", True)
        expected = family_pair_multiplicity(self.ctx)
        for sub in self.subgroups:
            if len(sub.quintuples) != expected:
                return CheckResult(
                    "pair multiplicity", False,
                    f"{len(sub.quintuples)} != {expected}",
                )
        total = sum(len(s.quintuples) for s in self.subgroups)
        assembled = sum(len(predicate_quintuples(p)) for p in self.partitions.values())
        ok = total == assembled
        return CheckResult("pair multiplicity", ok,
                           "" if ok else f"quintuples {total} != assembled {assembled}")

    def check_stabilizer_indices(self) -> CheckResult:
        """Measured orbit sizes vs the per-prime index product."""
        for i, sub in enumerate(self.subgroups):
            predicted = predicted_stabilizer_index(sub)
            measured = self.orbit_data.orbit_sizes[i]
            if measured != predicted:
                return CheckResult(
                    "stabiliser index table", False,
                    f"subgroup {i}: measured {measured} != predicted {predicted}",
                )
        return CheckResult("stabiliser index table", True)

    def check_weighted_count(self) -> CheckResult:
        if not self.ctx.gamma_divides_e:
            return CheckResult("orbit-weighted count", True)
        value = weighted_count_check(
            self.M, self.A, subgroups=self.subgroups, orbit_data=self.orbit_data
        )
        ok = value == self.b_formula
        return CheckResult("orbit-weighted count", ok,
                           "" if ok else f"{value} != {self.b_formula}")

    def check_adi(self, rng: random.Random, samples: int = 8) -> CheckResult:
        """Power-exponent congruences on randomly sampled recorded
        quintuples."""
        T = hol_tables(self.A)
        for h, part in self.partitions.items():
            pool = [q5 for sub in self.subgroups if sub.family == h
                    for q5 in sub.quintuples]
            if not pool:
                continue
            for q5 in rng.sample(pool, min(samples, len(pool))):
                t, a, c, u, v = q5
                Y = HolElement(
                    GroupElement(u, 1 % T.d, self.A),
                    Automorphism(v, t, self.A),
                )
                i_values = sorted({0, 1, 2, self.ctx.d, rng.randrange(2 * T.n + 1)})
                if not adi_congruence_check(Y, part, i_values):
                    return CheckResult("power exponent congruences", False, f"{q5}")
        return CheckResult("power exponent congruences", True)

    def check_braces(self) -> CheckResult:
        """Build one brace per orbit, verify every axiom exhaustively, check
        the multiplicative type, and check pairwise non-isomorphism."""
        reps = self.orbit_data.representatives()
        if len(reps) != self.b_formula:
            return CheckResult("brace construction", False,
                               f"{len(reps)} orbit representatives != b = {self.b_formula}")
        for i in reps:
            sub = self.subgroups[i]
            brace = build_skew_brace(sub, self.A)
            bad = check_skew_brace(brace)
            if bad is not None:
                return CheckResult("brace construction", False, str(bad))
            if recognize_group(sub.elements) != self.M:
                return CheckResult("brace construction", False,
                                   f"multiplicative group of rep {i} is not {self.M}")
        for pos, i in enumerate(reps):
            for j in reps[pos + 1:]:
                if braces_isomorphic(self.subgroups[i], self.subgroups[j], self.A):
                    return CheckResult("brace construction", False,
                                       f"orbit reps {i}, {j} conjugate")
        return CheckResult("brace construction", True)

    def run_all(self, rng: random.Random, deep: bool = True) -> list[CheckResult]:
        checks = [self.check_formula()]
        if deep:
            checks.append(self.check_membership_scan())
        checks.extend([
            self.check_local_counts(),
            self.check_pair_multiplicity(),
            self.check_stabilizer_indices(),
            self.check_weighted_count(),
            self.check_adi(rng),
            self.check_braces(),
        ])
        return checks


def check_y_power_formula(A: GroupDescriptor, rng: random.Random,
                          exhaustive_limit: int = 21, samples: int = 1000) -> CheckResult:
    """Closed power formula vs iterated multiplication: exhaustive over all
    (u, v, t) and j <= 2n for small orders, random sampling above."""
    T = hol_tables(A)
    sp_g = T.g

    def check_one(u, v, t, jmax) -> bool:
        Y = HolElement(GroupElement(u, 1 % T.d, A), Automorphism(v, t, A))
        acc = hol_identity(A)
        for j in range(jmax + 1):
            if y_power(Y, j) != acc:
                return False
            acc = hol_mul(acc, Y)
        return True

    if A.n <= exhaustive_limit:
        for u in range(T.e):
            for v in range(sp_g):
                for t in T.units:
                    if not check_one(u, v, t, 2 * A.n):
                        return CheckResult("power formula", False, f"(u,v,t)=({u},{v},{t})")
    else:
        for _ in range(samples):
            u = rng.randrange(T.e)
            v = rng.randrange(sp_g)
            t = T.units[rng.randrange(T.phi_e)]
            j = rng.randrange(2 * A.n + 1)
            Y = HolElement(GroupElement(u, 1 % T.d, A), Automorphism(v, t, A))
            acc = hol_identity(A)
            for _ in range(j):
                acc = hol_mul(acc, Y)
            if y_power(Y, j) != acc:
                return CheckResult("power formula", False, f"(u,v,t,j)=({u},{v},{t},{j})")
    return CheckResult("power formula", True)


def check_strategy_equivalence(n: int, *, workers: int = 1,
                               generic_bound: int | None = None) -> list[CheckResult]:
    """Generic pair-closure scan vs parametrized enumeration, as raw element
    sets, for every ordered pair of the given order.  Also certifies that no
    regular copies exist when gamma does not divide e."""
    out = []
    groups = enumerate_groups(n)
    for A in groups:
        generic = all_regular_subgroups_generic(A, bound=generic_bound, workers=workers)
        by_type: dict[GroupDescriptor, set] = {M: set() for M in groups}
        for key, desc, _ in generic:
            by_type[desc].add(key)
        for M in groups:
            quintuple_keys = {
                s.key for s in enumerate_regular_subgroups(M, A, "quintuple", workers=workers)
            }
            ok = quintuple_keys == by_type[M]
            out.append(CheckResult(
                f"strategy equivalence ({M}, {A})", ok,
                "" if ok else
                f"{len(quintuple_keys - by_type[M])} quintuple-only, "
                f"{len(by_type[M] - quintuple_keys)} generic-only",
            ))
    return out


def verify_order(
    n: int,
    *,
    strategy: str = "quintuple",
    workers: int = 1,
    quintuple_bound: int | None = None,
    generic_bound: int | None = None,
    rng_seed: int = 0,
    deep: bool = True,
) -> OrderReport:
    """Run the full differential battery for one squarefree order.

    strategy: 'quintuple' (default), 'generic' (cross-check only the counts
    via the generic scan), or 'both' (quintuple battery plus generic
    set-equality).  Raises NotSquarefree / BoundExceeded for bad input.
    """
    factor_squarefree(n)
    if quintuple_bound is None:
        quintuple_bound = config.QUINTUPLE_N_BOUND
    if generic_bound is None:
        generic_bound = config.GENERIC_N_BOUND
    if strategy in ("quintuple", "both") and n > quintuple_bound:
        raise BoundExceeded(f"quintuple bound {quintuple_bound} < n = {n}")
    if strategy in ("generic", "both") and n > generic_bound:
        raise BoundExceeded(f"generic bound {generic_bound} < n = {n}")

    rng = random.Random(rng_seed)
    report = OrderReport(n=n, strategy=strategy)
    groups = enumerate_groups(n)

    if strategy == "generic":
        for M in groups:
            for A in groups:
                oc = oracle_counts(M, A, "generic", workers=workers,
                                   generic_bound=generic_bound)
                b_formula = count_skew_braces(M, A)
                pr = PairReport(M=M, A=A, b_formula=b_formula,
                                b_oracle=oc.b_oracle, e_prime=oc.e_prime)
                ok = oc.b_oracle == b_formula
                pr.checks.append(CheckResult(
                    "orbit count vs closed form", ok,
                    "" if ok else f"oracle {oc.b_oracle} != formula {b_formula}"))
                report.pairs.append(pr)
        return report

    for M in groups:
        for A in groups:
            oracle = PairOracle(M, A, workers=workers, quintuple_bound=quintuple_bound)
            pr = PairReport(M=M, A=A, b_formula=oracle.b_formula,
                            b_oracle=oracle.b_oracle, e_prime=len(oracle.subgroups))
            pr.checks = oracle.run_all(rng, deep=deep)
            report.pairs.append(pr)

    for A in groups:
        report.order_checks.append(check_y_power_formula(A, rng))

    if strategy == "both":
        report.order_checks.extend(
            check_strategy_equivalence(n, workers=workers, generic_bound=generic_bound)
        )
    return report
