"""Congruence checks on the sigma-exponent A(j) of powers Y^j.

For Y = [sigma^u tau, theta^v phi_t] drawn from the membership rows, the
exponent A(di) of Y^(di) satisfies, prime by prime:

  (i)   q | zeta*delta and q | z:            A(di) = u d i            (mod q)
  (ii)  q | zeta*delta, q | g, t = 1:        A(di) = v z d i / (k-1)  (mod q)
  (iii) q | zeta*delta, q | g, t = k^-1:     A(di) = z k (mu u - v) d i / (k-1)
  (iv)  q | gamma, i = 0 mod gcd(delta, e):  A(di) = 0                (mod q)

Case (iii) expands to (u - v z k/(k-1)) d i, which is what summing the
geometric parts of the power formula yields directly; only the combination
being zero or not matters for the stabiliser solvability argument.

These are exactly the linearisations that make the stabiliser congruences
solvable prime by prime; the driver samples them against the closed power
formula."""

from math import gcd

from ..holomorph import HolElement, y_power
from ..numtheory import inverse_mod
from .partition import PrimePartition


def adi_congruence_check(Y: HolElement, part: PrimePartition, i_values=None) -> bool:
    """Verify the A(di) congruences for the sampled i values (default: all
    i up to 2n, which includes the i = 0 mod gcd(delta, e) cases)."""
    ctx = part.ctx
    d, e, z, k, g = ctx.d, ctx.e, ctx.z, ctx.k, ctx.g
    u, v, t = Y.x.u, Y.alpha.r, Y.alpha.s
    if i_values is None:
        i_values = range(2 * ctx.A.n + 1)
    step = gcd(ctx.delta, e)
    for i in i_values:
        a_di = y_power(Y, d * i).x.u
        for cls in part.classes:
            q = cls.q
            if cls.code in ("Q'", "Q''"):
                if (a_di - u * d * i) % q:
                    return False
            elif cls.code in ("U'", "U''"):
                kinv_q = inverse_mod(k % q, q)
                km1_inv = inverse_mod((k - 1) % q, q)
                if t % q == 1:
                    if (a_di - v * z * d * i * km1_inv) % q:
                        return False
                elif t % q == kinv_q:
                    if (a_di - z * k * km1_inv * (part.mu * u - v) * d * i) % q:
                        return False
            if ctx.gamma % q == 0 and i % step == 0:
                if a_di % q:
                    return False
    return True
