"""Exact integer arithmetic helpers: factoring, orders, units, CRT, and the
two summation kernels S(m,j) and T(k,t,j) used for power formulas.

Everything here is plain Python integer arithmetic; results are exact for
arbitrary magnitudes.
"""

from functools import cache
from math import gcd, isqrt

from .errors import NotCoprime, NotSquarefree


def factor_squarefree(n: int) -> list[int]:
    """Factor a squarefree positive integer into its ascending prime list.

    Raises NotSquarefree if some prime divides n twice.  factor_squarefree(1)
    is the empty list.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    primes = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                raise NotSquarefree(f"{n} is divisible by {p}^2")
            primes.append(p)
        p += 1 if p == 2 else 2
    if rest > 1:
        primes.append(rest)
    return primes


def is_squarefree(n: int) -> bool:
    try:
        factor_squarefree(n)
    except NotSquarefree:
        return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out: dict[int, int] = {}
    rest = n
    p = 2
    while p * p <= rest:
        while rest % p == 0:
            out[p] = out.get(p, 0) + 1
            rest //= p
        p += 1 if p == 2 else 2
    if rest > 1:
        out[rest] = out.get(rest, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def euler_phi(n: int) -> int:
    phi = 1
    for p, a in factorize(n).items():
        phi *= (p - 1) * p ** (a - 1)
    return phi


def multiplicative_order(a: int, m: int) -> int:
    """Smallest t >= 1 with a^t = 1 (mod m); order of 1 for m = 1 is 1."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    a %= m
    if gcd(a, m) != 1:
        raise NotCoprime(f"{a} is not a unit modulo {m}")
    # Start from any multiple of the order and strip primes.
    order = euler_phi(m)
    for p in factorize(order):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def units(m: int) -> list[int]:
    """Ascending list of units modulo m.  units(1) == [0] (the zero ring)."""
    if m == 1:
        return [0]
    return [s for s in range(1, m) if gcd(s, m) == 1]


def inverse_mod(a: int, m: int) -> int:
    if m == 1:
        return 0
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotCoprime(f"{a} is not invertible modulo {m}") from None


def geometric_sum(m: int, j: int, modulus: int) -> int:
    """S(m, j) = 1 + m + ... + m^(j-1) reduced mod modulus; S(m, 0) = 0."""
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    total = 0
    term = 1
    for _ in range(j):
        total = (total + term) % modulus
        term = (term * m) % modulus
    return total


def t_sum(k: int, t: int, j: int, modulus: int) -> int:
    """T(k, t, j) = sum over h < j of S(t, h) * k^(h-1), mod modulus.

    The h = 0 term needs k^(-1), so k must be a unit; T(k, t, 0) = 0.
    """
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    if j == 0:
        return 0
    kinv = inverse_mod(k % modulus, modulus)
    total = 0
    s_h = 0  # S(t, h)
    kpow = kinv  # k^(h-1)
    tpow = 1  # t^h
    for _ in range(j):
        total = (total + s_h * kpow) % modulus
        s_h = (s_h + tpow) % modulus
        tpow = (tpow * t) % modulus
        kpow = (kpow * k) % modulus
    return total


@cache
def crt_idempotents(primes: tuple[int, ...]) -> dict[int, int]:
    """For distinct primes, the residues E_q mod prod with E_q = 1 mod q and
    0 mod every other listed prime.  Empty product gives {}."""
    m = 1
    for q in primes:
        m *= q
    out = {}
    for q in primes:
        rest = m // q
        out[q] = (rest * inverse_mod(rest % q, q)) % m
    return out


def crt_combine(residues: dict[int, int], primes: tuple[int, ...]) -> int:
    """Combine residues {q: x_q} into the unique value mod prod(primes)."""
    basis = crt_idempotents(primes)
    m = 1
    for q in primes:
        m *= q
    return sum(residues[q] * basis[q] for q in primes) % m if m > 1 else 0
