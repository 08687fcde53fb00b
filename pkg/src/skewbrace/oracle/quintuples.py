"""Membership conditions for generator quintuples.

A candidate generator pair of a regular subgroup in family h is

    X = [sigma^a, theta^c],   Y = [sigma^u tau, theta^v phi_t]

with (t, a, c, u, v) in Z_e^x x Z_e x Z_g x Z_e x Z_g.  The quintuple yields
a regular subgroup satisfying X^gamma = Y^(zeta delta) = 1 and
Y X Y^-1 = X^kappa_h exactly when, for every prime q | e, the residues mod q
match one of that prime's allowed rows below.  Rows constrain c and v only
when q | g (they are residues mod g, invisible at primes of z).

Each row also carries the size I_q of its contribution to the index of the
subgroup's stabiliser under conjugation by Aut(A), and the count N_q of
local tuples it contains; the brute-force engine checks both empirically.
"""

from dataclasses import dataclass
from itertools import product

from ..numtheory import crt_combine, factor_squarefree, inverse_mod
from .partition import PrimeClass, PrimePartition


@dataclass(frozen=True)
class LocalRow:
    """One allowed residue pattern mod q.

    a_zero: a must be 0 (else: a must be nonzero).
    u_nonzero: u must be nonzero (else: u arbitrary).
    c_mode / v_mode: None when q | z (no constraint slot), otherwise one of
    'zero', 'any', 'lambda_a', 'mu_u', 'nonzero', 'not_mu_u'.
    """

    q: int
    t: int
    a_zero: bool
    u_nonzero: bool
    c_mode: str | None
    v_mode: str | None
    stab_index: int  # I_q
    count: int  # N_q of this row

    def matches(self, t: int, a: int, u: int, c: int | None, v: int | None,
                lam: int, mu: int) -> bool:
        q = self.q
        if t % q != self.t:
            return False
        if (a % q == 0) != self.a_zero:
            return False
        if self.u_nonzero and u % q == 0:
            return False
        if self.c_mode is not None:
            cq = c % q
            if self.c_mode == "zero" and cq != 0:
                return False
            if self.c_mode == "lambda_a" and cq != (lam * a) % q:
                return False
        if self.v_mode is not None:
            vq = v % q
            if self.v_mode == "zero" and vq != 0:
                return False
            if self.v_mode == "mu_u" and vq != (mu * u) % q:
                return False
            if self.v_mode == "nonzero" and vq == 0:
                return False
            if self.v_mode == "not_mu_u" and vq == (mu * u) % q:
                return False
        return True


def local_rows(part: PrimePartition, cls: PrimeClass) -> tuple[LocalRow, ...]:
    """The allowed residue rows at prime q for family h."""
    q = cls.q
    code = cls.code
    kq = part.ctx.k % q
    kinv = inverse_mod(kq, q)
    kap = part.kappa_h % q

    def row(t, a_zero, u_nonzero, c_mode, v_mode, stab_index, count):
        return LocalRow(q=q, t=t % q, a_zero=a_zero, u_nonzero=u_nonzero,
                        c_mode=c_mode, v_mode=v_mode, stab_index=stab_index,
                        count=count)

    if code == "P":
        return (row(kap, False, False, None, None, 1, q * (q - 1)),)
    if code == "Q'":
        return (row(1, True, True, None, None, q - 1, q - 1),)
    if code == "Q''":
        return (row(1, True, True, None, None, 1, q - 1),)
    if code in ("R", "S'"):
        return (
            row(kap, False, False, "lambda_a", "any", q, q * q * (q - 1)),
            row(kap * kinv, False, False, "zero", "any", q, q * q * (q - 1)),
        )
    if code == "S+":
        # kappa_h = k mod q, so the second t-value kappa_h * k^-1 is 1.
        return (
            row(1, False, False, "zero", "zero", 1, q * (q - 1)),
            row(kap, False, False, "lambda_a", "any", q, q * q * (q - 1)),
        )
    if code == "S-":
        # kappa_h = k^-1 mod q, so kappa_h * k^-1 = kappa_h^2.
        return (
            row(kap, False, False, "lambda_a", "mu_u", 1, q * (q - 1)),
            row(kap * kinv, False, False, "zero", "any", q, q * q * (q - 1)),
        )
    if code == "T":
        # ord_q(k) = ord_q(kappa) = 2 forces kappa_h = k = -1 mod q.
        return (
            row(kap, False, False, "lambda_a", "mu_u", 1, q * (q - 1)),
            row(1, False, False, "zero", "zero", 1, q * (q - 1)),
        )
    if code == "U'":
        return (
            row(1, True, False, "zero", "nonzero", q * (q - 1), q * (q - 1)),
            row(kinv, True, False, "zero", "not_mu_u", q * (q - 1), q * (q - 1)),
        )
    if code == "U''":
        return (
            row(1, True, False, "zero", "nonzero", q, q * (q - 1)),
            row(kinv, True, False, "zero", "not_mu_u", q, q * (q - 1)),
        )
    raise AssertionError(f"unknown prime class {code}")


def quintuple_predicate(q5: tuple[int, int, int, int, int], ctx: PrimePartition) -> bool:
    """True iff (t, a, c, u, v) matches an allowed row at every prime q | e.

    For such quintuples, and only such, the generator pair satisfies the
    family-h relations and generates a regular subgroup; the claim is checked
    empirically by the relation scan in the verification driver.
    """
    t, a, c, u, v = q5
    for cls in ctx.classes:
        q = cls.q
        on_g = ctx.ctx.g % q == 0
        cq = c if on_g else None
        vq = v if on_g else None
        if not any(r.matches(t, a, u, cq, vq, ctx.lam, ctx.mu)
                   for r in local_rows(ctx, cls)):
            return False
    return True


def local_tuples(part: PrimePartition, cls: PrimeClass) -> list[tuple]:
    """All allowed local residue tuples at q: (t, a, u) when q | z, or
    (t, a, u, c, v) when q | g.  Length is the class's N_q."""
    q = cls.q
    on_g = part.ctx.g % q == 0
    lam, mu = part.lam % q, part.mu % q
    out = []
    for row in local_rows(part, cls):
        a_vals = [0] if row.a_zero else range(1, q)
        u_vals = range(1, q) if row.u_nonzero else range(q)
        for a in a_vals:
            for u in u_vals:
                if not on_g:
                    out.append((row.t, a, u))
                    continue
                if row.c_mode == "zero":
                    c_vals = [0]
                elif row.c_mode == "lambda_a":
                    c_vals = [(lam * a) % q]
                else:
                    raise AssertionError(f"row at {q}|g lacks a c constraint")
                if row.v_mode == "zero":
                    v_vals = [0]
                elif row.v_mode == "any":
                    v_vals = range(q)
                elif row.v_mode == "mu_u":
                    v_vals = [(mu * u) % q]
                elif row.v_mode == "nonzero":
                    v_vals = range(1, q)
                elif row.v_mode == "not_mu_u":
                    bad = (mu * u) % q
                    v_vals = [v for v in range(q) if v != bad]
                else:
                    raise AssertionError(f"row at {q}|g lacks a v constraint")
                for c in c_vals:
                    for v in v_vals:
                        out.append((row.t, a, u, c, v))
    return out


def predicate_quintuples(part: PrimePartition) -> list[tuple[int, int, int, int, int]]:
    """All quintuples passing the membership conditions, assembled prime by
    prime through the CRT, sorted lexicographically.

    The count is the product of the per-prime N_q values; scanning the full
    Z_e^x x Z_e x Z_g x Z_e x Z_g space and filtering by quintuple_predicate
    gives the same set (the verification driver confirms this against the
    relation scan).
    """
    e, g = part.ctx.e, part.ctx.g
    e_primes = tuple(factor_squarefree(e))
    g_primes = tuple(q for q in e_primes if g % q == 0)
    per_prime = [local_tuples(part, cls) for cls in part.classes]
    out = []
    for combo in product(*per_prime):
        t_res, a_res, u_res, c_res, v_res = {}, {}, {}, {}, {}
        for cls, loc in zip(part.classes, combo):
            q = cls.q
            t_res[q], a_res[q], u_res[q] = loc[0], loc[1], loc[2]
            if len(loc) == 5:
                c_res[q], v_res[q] = loc[3], loc[4]
        t = crt_combine(t_res, e_primes)
        a = crt_combine(a_res, e_primes)
        u = crt_combine(u_res, e_primes)
        c = crt_combine(c_res, g_primes)
        v = crt_combine(v_res, g_primes)
        out.append((t, a, c, u, v))
    out.sort()
    return out


def pack_quintuple(q5: tuple[int, int, int, int, int], e: int, g: int) -> int:
    t, a, c, u, v = q5
    return (((t * e + a) * g + c) * e + u) * g + v


def unpack_quintuple(packed: int, e: int, g: int) -> tuple[int, int, int, int, int]:
    packed, v = divmod(packed, g)
    packed, u = divmod(packed, e)
    packed, c = divmod(packed, g)
    t, a = divmod(packed, e)
    return (t, a, c, u, v)
