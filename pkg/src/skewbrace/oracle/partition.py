"""Per-pair bookkeeping: orbit representatives kappa_h and the partition of
the primes of e into behaviour classes.

Generator pairs of a regular subgroup can be normalised so that tau occurs
with exponent 1 in Y, at the cost of replacing kappa by another generator of
<kappa>.  The subgroup Delta = {m in Z_delta^x : m = 1 mod gcd(delta, d)}
acts on the generator set K = {kappa^r}; regular subgroups fall into w
disjoint families indexed by a system kappa_1..kappa_w of Delta-orbit
representatives, w = phi(gcd(delta, d)).

For a fixed family, each prime q | e constrains the generator parameters
independently, with the constraint shape determined by which of z, g and
which of gamma, zeta*delta the prime divides, refined by how the orders of
k and kappa mod q compare:

    P  : q | gcd(gamma, z)
    Q' : q | gcd(delta, z)        Q'': q | gcd(zeta, z)
    R  : q | gcd(gamma, g), ord_q(kappa) != ord_q(k)
    S  : q | gcd(gamma, g), ord_q(kappa) == ord_q(k) > 2
         (split into S+ / S- / S' by kappa_h = k, k^-1, or neither mod q)
    T  : q | gcd(gamma, g), ord_q(kappa) == ord_q(k) == 2
    U' : q | gcd(delta, g)        U'': q | gcd(zeta, g)
"""

from dataclasses import dataclass
from functools import cache
from math import gcd

from ..counting import PairContext, pair_context
from ..errors import GammaNotDividing
from ..groups import GroupDescriptor
from ..numtheory import (
    euler_phi,
    factor_squarefree,
    inverse_mod,
    multiplicative_order,
    units,
)


@dataclass(frozen=True)
class KappaOrbits:
    """Delta-orbit structure on the generators of <kappa>."""

    M: GroupDescriptor
    A: GroupDescriptor
    delta_members: tuple[int, ...]  # Delta as residues mod delta
    generator_set: tuple[int, ...]  # K = {kappa^r} as residues mod epsilon
    reps: tuple[int, ...]  # kappa_1 .. kappa_w, ascending least residues


@cache
def kappa_orbit_reps(M: GroupDescriptor, A: GroupDescriptor) -> KappaOrbits:
    """Deterministic orbit representatives: the least residue of each orbit,
    listed in ascending order.  Always exactly w = phi(gcd(delta, d)) reps."""
    ctx = pair_context(M, A)
    delta, eps, kappa = ctx.delta, ctx.epsilon, ctx.kappa
    step = gcd(delta, ctx.d)
    delta_members = tuple(m for m in units(delta) if m % step == 1 % step)
    K = sorted({pow(kappa, r, eps) if eps > 1 else 0 for r in units(delta)} or {1 % eps})
    unassigned = set(K)
    reps = []
    while unassigned:
        y = min(unassigned)
        orbit = {pow(y, m, eps) if eps > 1 else 0 for m in delta_members}
        # m = 0 encodes the unit of the zero ring Z_1; y^0 would be wrong
        if delta == 1:
            orbit = {y}
        reps.append(min(orbit))
        unassigned -= orbit
    assert len(reps) == ctx.w, f"{len(reps)} orbits but w = {ctx.w} for ({M}, {A})"
    return KappaOrbits(M=M, A=A, delta_members=delta_members,
                       generator_set=tuple(K), reps=tuple(sorted(reps)))


@dataclass(frozen=True)
class PrimeClass:
    q: int
    code: str  # one of P, Q', Q'', R, S', S+, S-, T, U', U''
    r_q: int  # ord_q(k)
    rho_q: int | None  # ord_q(kappa), when q | epsilon


@dataclass(frozen=True)
class PrimePartition:
    """Everything the membership conditions need for one family h."""

    ctx: PairContext
    h: int  # 1-based family index
    kappa_h: int
    classes: tuple[PrimeClass, ...]  # ascending q, covering all q | e
    lam: int  # z^-1 (k-1) mod g
    mu: int  # k^-1 z^-1 (k-1) mod g

    def class_of(self, q: int) -> PrimeClass:
        for cls in self.classes:
            if cls.q == q:
                return cls
        raise KeyError(q)


def prime_partition(M: GroupDescriptor, A: GroupDescriptor, h: int = 1) -> PrimePartition:
    """Classify every prime q | e for family h.  Raises GammaNotDividing when
    gamma does not divide e (no regular copies of M exist in Hol(A))."""
    ctx = pair_context(M, A)
    if not ctx.gamma_divides_e:
        raise GammaNotDividing(f"gamma = {ctx.gamma} does not divide e = {ctx.e}")
    reps = kappa_orbit_reps(M, A).reps
    if not 1 <= h <= len(reps):
        raise ValueError(f"h must be in [1, {len(reps)}], got {h}")
    kappa_h = reps[h - 1]
    z, g, e, k = ctx.z, ctx.g, ctx.e, ctx.k
    gamma, zeta, delta = ctx.gamma, ctx.zeta, ctx.delta
    classes = []
    for q in factor_squarefree(e):
        r_q = multiplicative_order(k % q, q)
        rho_q = multiplicative_order(ctx.kappa % q, q) if ctx.epsilon % q == 0 else None
        if z % q == 0:
            if gamma % q == 0:
                code = "P"
            else:
                code = "Q'" if delta % q == 0 else "Q''"
        else:
            if gamma % q == 0:
                if rho_q != r_q:
                    code = "R"
                elif rho_q > 2:
                    kq, kinvq = k % q, inverse_mod(k % q, q)
                    if kappa_h % q == kq:
                        code = "S+"
                    elif kappa_h % q == kinvq:
                        code = "S-"
                    else:
                        code = "S'"
                else:
                    code = "T"
            else:
                code = "U'" if delta % q == 0 else "U''"
        classes.append(PrimeClass(q=q, code=code, r_q=r_q, rho_q=rho_q))
    if g > 1:
        lam = (inverse_mod(z % g, g) * (k - 1)) % g
        mu = (inverse_mod(k % g, g) * lam) % g
    else:
        lam = mu = 0
    return PrimePartition(ctx=ctx, h=h, kappa_h=kappa_h,
                          classes=tuple(classes), lam=lam, mu=mu)


def family_pair_multiplicity(ctx: PairContext) -> int:
    """Number of normalised generator pairs inside each regular subgroup:
    gamma * phi(e) * w / phi(delta); always an exact integer."""
    num = ctx.gamma * euler_phi(ctx.e) * ctx.w
    den = euler_phi(ctx.delta)
    assert num % den == 0
    return num // den
